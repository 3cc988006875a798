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

#include "quenchsim/linalg.h"

#include <stdexcept>

namespace quenchsim {

double phase_aligned_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("phase_aligned_distance: shape mismatch");
    }
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    a.cwiseAbs().maxCoeff(&row, &col);
    Complex phase{1.0, 0.0};
    if (std::abs(a(row, col)) > 0.0 && std::abs(b(row, col)) > 0.0) {
        phase = a(row, col) / b(row, col);
        phase /= std::abs(phase);
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

double unitarity_error(const ComplexMatrix &u) {
    ComplexMatrix product = u.adjoint() * u;
    return (product - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace quenchsim
