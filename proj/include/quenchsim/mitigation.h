// Copyright 2026 The quenchsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUENCHSIM_MITIGATION_H
#define QUENCHSIM_MITIGATION_H

#include "quenchsim/state.h"

namespace quenchsim {

/// Shots kept by symmetry-sector post-selection.
struct PostselectionReport {
    Counts kept;
    double retained_fraction = 0.0;
    int target_sz = 0;

    /// True when nothing survived; observables on `kept` are then undefined.
    bool empty() const {
        return kept.empty();
    }
};

/// Keeps exactly the shots whose total sigma^z equals target_sz. The dynamics
/// conserve total magnetization, so anything outside the initial sector is an
/// error; dropping it suppresses single bit flips, leaving O(p^2) errors.
PostselectionReport postselect(const Counts &counts, int target_sz);

}  // namespace quenchsim

#endif  // QUENCHSIM_MITIGATION_H
