// Copyright 2026 The splitpump developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPLITPUMP_EIG_HPP_
#define SPLITPUMP_EIG_HPP_

#include <vector>

#include "splitpump/matrix.hpp"

namespace splitpump {

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // column j pairs with eigenvalues[j]
};

// Hermitian eigendecomposition (LAPACK zheev). The input is symmetrized as
// (h + h†)/2; callers that need a Hermiticity guarantee check it themselves.
EigResult eig_hermitian(const CMatrix& h);

double min_eigenvalue(const CMatrix& h);

}  // namespace splitpump

#endif  // SPLITPUMP_EIG_HPP_
