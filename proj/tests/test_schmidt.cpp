// Copyright 2026 The tmss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include "tmss/error.hpp"
#include "tmss/schmidt.hpp"
#include "tmss/witness.hpp"

#include <cmath>
#include <numbers>

using namespace tmss;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

std::span<const double> as_span(const RVector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

void check_form(const BipartiteState& psi, const SchmidtForm& f) {
  const int d1 = psi.j1().dim();
  const int d2 = psi.j2().dim();
  CHECK(f.coeffs.size() == std::min(d1, d2));
  CHECK(f.coeffs.minCoeff() >= 0.0);
  for (Eigen::Index k = 1; k < f.coeffs.size(); ++k) CHECK(f.coeffs(k) >= f.coeffs(k - 1));
  CHECK(std::abs(f.coeffs.squaredNorm() - 1.0) <= 1e-9);
  CHECK(max_abs(f.u1.adjoint() * f.u1 - CMatrix::Identity(d1, d1)) <= 1e-11);
  CHECK(max_abs(f.u2.adjoint() * f.u2 - CMatrix::Identity(d2, d2)) <= 1e-11);
  CHECK(f.residual <= 1e-9);
  // Independent check of the residual: apply u1 ⊗ u2 to the joint vector.
  const CVector mapped = kron(f.u1, f.u2) * psi.joint_vector();
  const CVector target = canonical_state(psi.j1(), psi.j2(), as_span(f.coeffs)).joint_vector();
  CHECK((mapped - target).cwiseAbs().maxCoeff() <= 1e-9);
}

const SpinJ kHalf = SpinJ::from_twice(1);
const SpinJ kOne = SpinJ::from_twice(2);

}  // namespace

TEST_CASE("product state decomposes to a single coefficient at m = j") {
  const BipartiteState up = BipartiteState::basis(kHalf, kHalf, 0.5, 0.5);
  const SchmidtForm f = schmidt_decompose(up);
  CHECK(std::abs(f.coeffs(0)) <= 1e-15);
  CHECK(std::abs(f.coeffs(1) - 1.0) <= 1e-15);
  CHECK(classify(f).tag == StateClassTag::Product);
  CHECK(classify(f).rank == 1);

  // Any product state canonicalizes to |j, j>.
  const BipartiteState prod = BipartiteState::from_joint_vector(
      kOne, kOne, kron(haar_random_unitary(3, 1).col(0), haar_random_unitary(3, 2).col(1)));
  const CanonicalResult c = canonicalize(prod);
  CHECK(std::abs(std::abs(c.canonical.amplitudes()(2, 2)) - 1.0) <= 1e-12);
  check_form(prod, c.form);
}

TEST_CASE("Bell state coefficients") {
  CMatrix amps = CMatrix::Zero(2, 2);
  amps(0, 0) = amps(1, 1) = 1.0 / std::numbers::sqrt2;
  const SchmidtForm f = schmidt_decompose(BipartiteState(kHalf, kHalf, amps));
  CHECK(std::abs(f.coeffs(0) - 1.0 / std::numbers::sqrt2) <= 1e-15);
  CHECK(std::abs(f.coeffs(1) - 1.0 / std::numbers::sqrt2) <= 1e-15);
  CHECK(classify(f).tag == StateClassTag::MaxEntangledFull);
}

TEST_CASE("coefficients match reduced-density eigenvalues") {
  for (int s = 0; s < 20; ++s) {
    const BipartiteState psi = haar_random_pure(kOne, kOne, 500 + s);
    const SchmidtForm f = schmidt_decompose(psi);
    const RVector eig = Eigen::SelfAdjointEigenSolver<CMatrix>(partial_trace(psi, 1).matrix()).eigenvalues();
    CHECK((eig.cwiseMax(0.0).cwiseSqrt() - f.coeffs).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("reconstruction over 500 random states, j in 1/2..3") {
  for (int s = 0; s < 500; ++s) {
    const SpinJ j1 = SpinJ::from_twice(1 + s % 6);
    const SpinJ j2 = SpinJ::from_twice(1 + (s / 6) % 6);
    const BipartiteState psi = haar_random_pure(j1, j2, substream_seed(77, s));
    CAPTURE(s);
    check_form(psi, schmidt_decompose(psi));
  }
}

TEST_CASE("unequal spins occupy the m = -j_min..j_min block") {
  const BipartiteState psi = haar_random_pure(kHalf, SpinJ::parse("3/2"), 5);
  const CanonicalResult c = canonicalize(psi);
  const CMatrix& a = c.canonical.amplitudes();
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 4);
  // m = -1/2 and 1/2 on subsystem 2 are columns 1 and 2.
  CHECK(std::abs(a(0, 1) - c.form.coeffs(0)) <= 1e-15);
  CHECK(std::abs(a(1, 2) - c.form.coeffs(1)) <= 1e-15);
  CHECK(std::abs(a(0, 0)) + std::abs(a(1, 3)) == 0.0);
  check_form(psi, c.form);
}

TEST_CASE("canonicalize is idempotent") {
  const BipartiteState psi = haar_random_pure(SpinJ::parse("3/2"), SpinJ::parse("3/2"), 21);
  const CanonicalResult once = canonicalize(psi);
  const CanonicalResult twice = canonicalize(once.canonical);
  CHECK(max_abs(once.canonical.amplitudes() - twice.canonical.amplitudes()) <= 1e-12);
  // The canonical amplitude matrix is diagonal, real, nonnegative, nondescending.
  const CMatrix& a = once.canonical.amplitudes();
  CHECK(max_abs(a - CMatrix(a.diagonal().asDiagonal())) == 0.0);
  CHECK(a.diagonal().imag().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("canonical random j=3/2 state satisfies the symmetry identities") {
  const BipartiteState psi = haar_random_pure(SpinJ::parse("3/2"), SpinJ::parse("3/2"), 8);
  const SymmetryReport r = symmetry_check(canonicalize(psi).canonical);
  CHECK(r.max_first_moment <= 1e-10);
  CHECK(r.variance_gap <= 1e-10);
}

TEST_CASE("coefficients are invariant under local unitaries") {
  for (int s = 0; s < 30; ++s) {
    const SpinJ j1 = SpinJ::from_twice(1 + s % 3);
    const SpinJ j2 = SpinJ::from_twice(2 + s % 2);
    const BipartiteState psi = haar_random_pure(j1, j2, 900 + s);
    const CMatrix v1 = haar_random_unitary(j1.dim(), 1000 + s);
    const CMatrix v2 = haar_random_unitary(j2.dim(), 2000 + s);
    const BipartiteState moved(j1, j2, v1 * psi.amplitudes() * v2.transpose());
    const SchmidtForm a = schmidt_decompose(psi);
    const SchmidtForm b = schmidt_decompose(moved);
    CHECK((a.coeffs - b.coeffs).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(classify(a).tag == classify(b).tag);
  }
}

TEST_CASE("classification of the exceptional cases") {
  const double r2 = 1.0 / std::numbers::sqrt2;
  const double r3 = 1.0 / std::sqrt(3.0);
  CHECK(classify(std::vector<double>{0.0, 1.0}).tag == StateClassTag::Product);
  CHECK(classify(std::vector<double>{0.0, 1.0}, 0.3).tag == StateClassTag::Product);
  CHECK(classify(std::vector<double>{r3, r3, r3}).tag == StateClassTag::MaxEntangledFull);
  const StateClass sub = classify(std::vector<double>{0.0, r2, r2});
  CHECK(sub.tag == StateClassTag::MaxEntangledSubspace);
  CHECK(sub.rank == 2);
  CHECK(classify(std::vector<double>{0.6, 0.8}).tag == StateClassTag::Generic);
  // Near-ties resolve through the relative tolerance.
  CHECK(classify(std::vector<double>{r2 - 1e-12, r2 + 1e-12}).tag == StateClassTag::MaxEntangledFull);
  CHECK(classify(std::vector<double>{r2 - 1e-6, r2 + 1e-6}).tag == StateClassTag::Generic);
  CHECK(classify(std::vector<double>{r2 - 1e-6, r2 + 1e-6}, 1e-4).tag == StateClassTag::MaxEntangledFull);
  CHECK(classify(std::vector<double>{1e-12, r2, r2}).tag == StateClassTag::MaxEntangledSubspace);
  CHECK_THROWS_AS(classify(std::vector<double>{}), InputError);
}

TEST_CASE("random nondescending coefficients") {
  const RVector c = random_nondescending_coefficients(5, 3);
  CHECK(std::abs(c.squaredNorm() - 1.0) <= 1e-14);
  for (int k = 1; k < 5; ++k) CHECK(c(k) >= c(k - 1));
  CHECK(c.minCoeff() >= 0.0);
}
