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

#ifndef SPLITPUMP_TYPES_HPP_
#define SPLITPUMP_TYPES_HPP_

#include <complex>
#include <stdexcept>
#include <string>

namespace splitpump {

using cplx = std::complex<double>;

// Tolerance budget: structural invariants are checked at 1e-12, identities
// that pass through an eigendecomposition at 1e-10, support/containment
// diagnostics at 1e-9, and rank decisions at 1e-8.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kFrameTol = 1e-10;
inline constexpr double kDerivedTol = 1e-10;
inline constexpr double kSupportTol = 1e-9;
inline constexpr double kRankTol = 1e-8;

// Bad dimensions, non-normalized states, unparsable inputs.
struct MalformedInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A runtime quantity left its mathematically valid range.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed its check.
struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t log2_exact(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  if ((std::size_t{1} << k) != n)
    throw MalformedInputError("dimension " + std::to_string(n) + " is not a power of two");
  return k;
}

}  // namespace splitpump

#endif  // SPLITPUMP_TYPES_HPP_
