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

#ifndef QUENCHSIM_LINALG_H
#define QUENCHSIM_LINALG_H

#include <complex>

#include <Eigen/Dense>

namespace quenchsim {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Max-norm distance between `a` and `b` after removing a global phase.
///
/// The phase is fixed by the largest-magnitude element of `a`: `b` is rotated
/// so that this element has the same phase in both matrices. Global phase is
/// not observable, so every circuit equivalence check in the library goes
/// through this function.
double phase_aligned_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Max-norm of U^dagger U - I.
double unitarity_error(const ComplexMatrix &u);

}  // namespace quenchsim

#endif  // QUENCHSIM_LINALG_H
