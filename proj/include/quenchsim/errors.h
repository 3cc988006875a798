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

#ifndef QUENCHSIM_ERRORS_H
#define QUENCHSIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace quenchsim {

/// Malformed or inconsistent configuration / calibration input.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// No qubit chain or layout satisfies the request.
class InfeasibleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An estimator was asked for a value on an empty set of shots.
class EmptyCountsError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace quenchsim

#endif  // QUENCHSIM_ERRORS_H
