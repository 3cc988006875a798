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

#include "quenchsim/mitigation.h"

namespace quenchsim {

PostselectionReport postselect(const Counts &counts, int target_sz) {
    PostselectionReport report{Counts(counts.n_qubits()), 0.0, target_sz};
    for (auto [outcome, n] : counts.table()) {
        if (total_sz(outcome, counts.n_qubits()) == target_sz) {
            report.kept.add(outcome, n);
        }
    }
    if (!counts.empty()) {
        report.retained_fraction =
            static_cast<double>(report.kept.shots()) / static_cast<double>(counts.shots());
    }
    return report;
}

}  // namespace quenchsim
