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

#ifndef SPLITPUMP_RNG_HPP_
#define SPLITPUMP_RNG_HPP_

#include <cstdint>

#include "splitpump/types.hpp"

namespace splitpump {

// Deterministic seeded generator. Gaussian variates use Box-Muller over the
// raw 53-bit uniforms, so streams do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double normal();   // standard Gaussian
  cplx complex_normal();  // (normal + i normal) / sqrt(2)

  // Independent deterministic substream, e.g. one per trial or per step.
  Rng spawn(std::uint64_t stream) const;

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace splitpump

#endif  // SPLITPUMP_RNG_HPP_
