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

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "splitpump/subspaces.hpp"

using namespace splitpump;
using namespace splitpump::qmath;
using namespace splitpump::subspaces;

namespace {

// random unitary whose first column is the given target
UnitaryOp random_completion(const Ket& target, std::uint64_t seed) {
  const std::size_t d = target.dim();
  const UnitaryOp base = complete_to_unitary({target}, d);
  const UnitaryOp tail = random_unitary(d - 1, seed);
  CMatrix rot = CMatrix::identity(d);
  rot.set_block(1, 1, tail.entries());
  return UnitaryOp(base.entries() * rot);
}

}  // namespace

TEST_SUITE("subspaces") {

TEST_CASE("pi_k_projector selects indices with bit k clear") {
  const Subspace s11 = pi_k_projector(1, 1);
  CHECK(s11.dim() == 1);
  CHECK(max_abs_diff(s11.projector(), CMatrix::diagonal({cplx{1.0}, cplx{0.0}})) == 0.0);

  CHECK(max_abs_diff(pi_k_projector(1, 2).projector(),
                     CMatrix::diagonal({cplx{1.0}, cplx{1.0}, cplx{0.0}, cplx{0.0}})) == 0.0);
  CHECK(max_abs_diff(pi_k_projector(2, 2).projector(),
                     CMatrix::diagonal({cplx{1.0}, cplx{0.0}, cplx{1.0}, cplx{0.0}})) == 0.0);

  CHECK_THROWS_AS(pi_k_projector(0, 2), MalformedInputError);
  CHECK_THROWS_AS(pi_k_projector(3, 2), MalformedInputError);
}

TEST_CASE("build_splitting of the all-zeros target reproduces the standard subspaces") {
  const auto decomp = build_splitting(zero_state(3));
  CHECK(max_abs_diff(decomp.basis_unitary.entries(), CMatrix::identity(8)) == 0.0);
  for (std::size_t k = 1; k <= 3; ++k)
    CHECK(max_abs_diff(decomp.subspaces[k - 1].projector(), pi_k_projector(k, 3).projector()) <
          1e-14);
}

TEST_CASE("splitting subspaces intersect exactly on the target") {
  const auto decomp = build_splitting(bell_psi_minus());
  std::vector<CMatrix> projectors;
  for (const auto& s : decomp.subspaces) {
    CHECK(s.dim() == 2);
    CHECK(test::oracle_projector_rank(s.projector()) == 2);
    projectors.push_back(s.projector());
  }
  // stacked-complement oracle: one-dimensional intersection spanned by the target
  const auto inter = test::oracle_intersection(projectors);
  REQUIRE(inter.dim == 1);
  CHECK(std::abs(std::abs(inner(inter.frame[0], bell_psi_minus().amplitudes())) - 1.0) < 1e-10);
}

TEST_CASE("build_splitting invariants hold for random targets and completions") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Ket target = random_ket(3, 900 + seed);
    const auto decomp = build_splitting(target, random_completion(target, 950 + seed));
    CHECK(decomp.subspaces.size() == 3);
    std::vector<CMatrix> projectors;
    for (const auto& s : decomp.subspaces) {
      CHECK(s.dim() == 4);
      CHECK(test::oracle_projector_rank(s.projector()) == 4);
      projectors.push_back(s.projector());
    }
    const auto inter = test::oracle_intersection(projectors);
    REQUIRE(inter.dim == 1);
    CHECK(std::abs(std::abs(inner(inter.frame[0], target.amplitudes())) - 1.0) < 1e-10);
  }
}

TEST_CASE("build_splitting validates the completion") {
  const Ket target = random_ket(2, 1);
  const UnitaryOp wrong = complete_to_unitary({random_ket(2, 2)}, 4);
  CHECK_THROWS_AS(build_splitting(target, wrong), MalformedInputError);
}

TEST_CASE("intersect: single subspace, standard subspaces, splitting family") {
  const Subspace s = pi_k_projector(2, 3);
  CHECK(max_abs_diff(intersect({s}).projector(), s.projector()) < 1e-12);

  std::vector<Subspace> all;
  for (std::size_t k = 1; k <= 3; ++k) all.push_back(pi_k_projector(k, 3));
  const Subspace meet = intersect(all);
  CHECK(meet.dim() == 1);
  CHECK(std::abs(std::abs(meet.frame()[0][0]) - 1.0) < 1e-12);  // span{|000>}

  const Ket target = random_ket(3, 77);
  const auto decomp = build_splitting(target);
  const Subspace from_lib = intersect(decomp.subspaces);
  CHECK(from_lib.dim() == 1);
  CHECK(std::abs(std::abs(inner(from_lib.frame()[0].amplitudes(), target.amplitudes())) - 1.0) <
        1e-10);

  CHECK_THROWS_AS(intersect({}), MalformedInputError);
}

TEST_CASE("step_reordering: identity at step one, bit swap at step two") {
  const auto decomp = build_splitting(random_ket(2, 5));
  CHECK(max_abs_diff(step_reordering(decomp, 1).entries(), decomp.basis_unitary.entries()) == 0.0);

  // P_2 swaps indices 1 <-> 2, so columns 1 and 2 trade places
  const CMatrix u2 = step_reordering(decomp, 2).entries();
  const CMatrix& u = decomp.basis_unitary.entries();
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK(std::abs(u2(r, 0) - u(r, 0)) == 0.0);
    CHECK(std::abs(u2(r, 1) - u(r, 2)) == 0.0);
    CHECK(std::abs(u2(r, 2) - u(r, 1)) == 0.0);
    CHECK(std::abs(u2(r, 3) - u(r, 3)) == 0.0);
  }
  CHECK_THROWS_AS(step_reordering(decomp, 0), MalformedInputError);
  CHECK_THROWS_AS(step_reordering(decomp, 3), MalformedInputError);
}

TEST_CASE("step_reordering maps the first standard subspace onto S_ell") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto decomp = build_splitting(random_ket(n, 40 + n));
    const CMatrix pi1 = pi_k_projector(1, n).projector();
    for (std::size_t ell = 1; ell <= n; ++ell) {
      const CMatrix u = step_reordering(decomp, ell).entries();
      CHECK(max_abs_diff(u * pi1 * u.adjoint(), decomp.subspaces[ell - 1].projector()) < 1e-10);
    }
  }
}

TEST_CASE("stabilizer_splitting: Bell, computational, GHZ") {
  const auto bell = stabilizer_splitting({PauliString::parse("-XX"), PauliString::parse("-YY")});
  // phase convention puts the first nonzero entry real positive
  double dev = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    dev = std::max(dev, std::abs(bell.target[i] - bell_psi_minus()[i]));
  CHECK(dev < 1e-12);

  const auto comp = stabilizer_splitting(
      {PauliString::parse("+ZII"), PauliString::parse("+IZI"), PauliString::parse("+IIZ")});
  CHECK(std::abs(comp.target[0] - 1.0) < 1e-12);

  const auto ghz = stabilizer_splitting(
      {PauliString::parse("+XXX"), PauliString::parse("+ZZI"), PauliString::parse("+IZZ")});
  // oracle: the product of the three (I+M)/2 projectors is rank one on the GHZ state
  CMatrix prod = CMatrix::identity(8);
  for (const char* s : {"+XXX", "+ZZI", "+IZZ"}) {
    CMatrix half = CMatrix::identity(8) + PauliString::parse(s).realize();
    half *= cplx{0.5};
    prod = prod * half;
  }
  const std::vector<cplx> projected = prod.apply(ghz.target.amplitudes());
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(projected[i] - ghz.target[i]) < 1e-12);
  CHECK(std::abs(std::abs(inner(ghz.target.amplitudes(), ghz_state(3).amplitudes())) - 1.0) <
        1e-12);
}

TEST_CASE("stabilizer_splitting rejects bad generator sets") {
  CHECK_THROWS_AS(stabilizer_splitting({PauliString::parse("+XI"), PauliString::parse("+ZI")}),
                  MalformedInputError);  // do not commute
  CHECK_THROWS_AS(stabilizer_splitting({PauliString::parse("+XX"), PauliString::parse("-XX")}),
                  MalformedInputError);  // dependent
  CHECK_THROWS_AS(stabilizer_splitting({PauliString::parse("+XX")}), MalformedInputError);
}

TEST_CASE("stabilizer and generic splittings agree on the Bell target") {
  const auto stab = stabilizer_splitting({PauliString::parse("-XX"), PauliString::parse("-YY")});
  const auto generic = build_splitting(bell_psi_minus());
  const Subspace a = intersect(stab.subspaces);
  const Subspace b = intersect(generic.subspaces);
  REQUIRE(a.dim() == 1);
  REQUIRE(b.dim() == 1);
  CHECK(std::abs(std::abs(inner(a.frame()[0].amplitudes(), b.frame()[0].amplitudes())) - 1.0) <
        1e-10);
}

TEST_CASE("stabilizer decomposition supports the step reordering contract") {
  const auto stab = stabilizer_splitting({PauliString::parse("-XX"), PauliString::parse("-YY")});
  const CMatrix pi1 = pi_k_projector(1, 2).projector();
  for (std::size_t ell = 1; ell <= 2; ++ell) {
    const CMatrix u = step_reordering(stab, ell).entries();
    CHECK(max_abs_diff(u * pi1 * u.adjoint(), stab.subspaces[ell - 1].projector()) < 1e-10);
  }
}

}  // TEST_SUITE
