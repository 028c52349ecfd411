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
#include "oracle.hpp"

#include "tmss/error.hpp"
#include "tmss/schmidt.hpp"
#include "tmss/spin_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace tmss;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double max_diff(const CMatrix& m, const oracle::Dense& ref) {
  double worst = 0.0;
  for (int r = 0; r < ref.n; ++r)
    for (int c = 0; c < ref.n; ++c) worst = std::max(worst, std::abs(m(r, c) - ref(r, c)));
  return worst;
}

const Complex kI(0.0, 1.0);
const SpinJ kHalf = SpinJ::from_twice(1);
const SpinJ kOne = SpinJ::from_twice(2);

}  // namespace

TEST_CASE("SpinJ parses exact half-integers") {
  CHECK(SpinJ::parse("1/2").twice_j() == 1);
  CHECK(SpinJ::parse("3/2").dim() == 4);
  CHECK(SpinJ::parse("2").twice_j() == 4);
  CHECK(SpinJ::parse("4/2") == SpinJ::parse("2"));
  CHECK(SpinJ::parse("5/2").str() == "5/2");
  CHECK(SpinJ::parse("0").dim() == 1);
  CHECK_THROWS_AS(SpinJ::parse("1.5"), InputError);
  CHECK_THROWS_AS(SpinJ::parse("-1"), InputError);
  CHECK_THROWS_AS(SpinJ::parse("1/3"), InputError);
  CHECK_THROWS_AS(SpinJ::from_twice(-1), InputError);
  CHECK(kOne.m(0) == -1.0);
  CHECK(kOne.index_of(1.0) == 2);
  CHECK_THROWS_AS(kOne.index_of(0.5), InputError);
}

TEST_CASE("spin matrices in the defining representation") {
  const SpinMatrices s = spin_matrices(kHalf);
  CHECK(s.x.matrix()(0, 1) == Complex(0.5, 0.0));
  CHECK(s.x.matrix()(1, 0) == Complex(0.5, 0.0));
  CHECK(s.x.matrix()(0, 0) == Complex(0.0, 0.0));
  CHECK(s.z.matrix()(0, 0).real() == -0.5);
  CHECK(s.z.matrix()(1, 1).real() == 0.5);

  const SpinMatrices one = spin_matrices(kOne);
  CHECK(one.z.matrix().diagonal().real() == RVector((RVector(3) << -1.0, 0.0, 1.0).finished()));
  const CMatrix plus = raising_operator(kOne);
  CHECK(std::abs(plus(1, 0) - std::numbers::sqrt2) < 1e-15);
  CHECK(std::abs(plus(2, 1) - std::numbers::sqrt2) < 1e-15);
}

TEST_CASE("spin algebra: commutators and Casimir up to j = 10") {
  for (int tj = 0; tj <= 20; ++tj) {
    const SpinJ j = SpinJ::from_twice(tj);
    const SpinMatrices s = spin_matrices(j);
    const CMatrix& x = s.x.matrix();
    const CMatrix& y = s.y.matrix();
    const CMatrix& z = s.z.matrix();
    CAPTURE(tj);
    CHECK(max_abs(x * y - y * x - kI * z) <= 1e-12);
    CHECK(max_abs(y * z - z * y - kI * x) <= 1e-12);
    CHECK(max_abs(z * x - x * z - kI * y) <= 1e-12);
    CHECK(max_abs(x * x + y * y + z * z - j.casimir() * CMatrix::Identity(j.dim(), j.dim())) <= 1e-11);
    CHECK(s.x.is_hermitian());
    CHECK(s.y.is_hermitian());
    CHECK(s.z.is_hermitian());
    // Independent element-by-element construction.
    CHECK(max_diff(x, oracle::spin(tj, 'x')) <= 1e-14);
    CHECK(max_diff(y, oracle::spin(tj, 'y')) <= 1e-14);
  }
}

TEST_CASE("j = 5/2 commutator entrywise") {
  const SpinMatrices s = spin_matrices(SpinJ::parse("5/2"));
  const CMatrix comm = s.x.matrix() * s.y.matrix() - s.y.matrix() * s.x.matrix();
  CHECK(max_abs(comm - kI * s.z.matrix()) <= 1e-12);
}

TEST_CASE("two-mode operators") {
  SUBCASE("Jz- annihilates the j=1/2 Bell state") {
    CMatrix amps = CMatrix::Zero(2, 2);
    amps(0, 0) = amps(1, 1) = 1.0 / std::numbers::sqrt2;
    const BipartiteState bell(kHalf, kHalf, amps);
    const CVector out = two_mode_operator(Axis::Z, Sign::Minus, kHalf, kHalf).matrix() * bell.joint_vector();
    CHECK(out.norm() == 0.0);
  }
  SUBCASE("Jz+ eigenvalue m1 + m2") {
    const BipartiteState up = BipartiteState::basis(kHalf, kHalf, 0.5, 0.5);
    CHECK(expectation(up, two_mode_operator(Axis::Z, Sign::Plus, kHalf, kHalf)) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("Jx- at (1/2, 1) matches brute-force Kronecker construction") {
    const SpinOperator op = two_mode_operator(Axis::X, Sign::Minus, kHalf, kOne);
    REQUIRE(op.dim() == 6);
    CHECK(max_diff(op.matrix(), oracle::two_mode(1, 2, 'x', -1)) <= 1e-15);
    CHECK(op.is_hermitian());
  }
  SUBCASE("[Jx-, Jy+] = i Jz- for mixed spins") {
    for (int t1 = 0; t1 <= 5; ++t1)
      for (int t2 = 0; t2 <= 5; ++t2) {
        const SpinJ j1 = SpinJ::from_twice(t1);
        const SpinJ j2 = SpinJ::from_twice(t2);
        const CMatrix xm = two_mode_operator(Axis::X, Sign::Minus, j1, j2).matrix();
        const CMatrix yp = two_mode_operator(Axis::Y, Sign::Plus, j1, j2).matrix();
        const CMatrix zm = two_mode_operator(Axis::Z, Sign::Minus, j1, j2).matrix();
        CHECK(max_abs(xm * yp - yp * xm - kI * zm) <= 1e-11);
      }
  }
}

TEST_CASE("BipartiteState normalization contract") {
  CMatrix amps = CMatrix::Zero(2, 2);
  amps(0, 0) = 1.0 + 5e-7;
  const BipartiteState nearly(kHalf, kHalf, amps);
  CHECK(std::abs(nearly.amplitudes().norm() - 1.0) <= 1e-12);
  amps(0, 0) = 1.01;
  CHECK_THROWS_AS(BipartiteState(kHalf, kHalf, amps), InputError);
  CHECK_THROWS_AS(BipartiteState(kHalf, kOne, CMatrix::Identity(2, 2) / std::sqrt(2.0)), InputError);
}

TEST_CASE("DensityMatrix validation") {
  CHECK_THROWS_AS(DensityMatrix(CMatrix::Identity(2, 2)), InputError);  // trace 2
  CMatrix nonherm = CMatrix::Identity(2, 2) / 2.0;
  nonherm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{nonherm}, InputError);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{negative}, InputError);
  CHECK_NOTHROW(DensityMatrix(CMatrix::Identity(4, 4) / 4.0));
}

TEST_CASE("expectation values") {
  const BipartiteState up = BipartiteState::basis(kHalf, kHalf, 0.5, 0.5);
  CHECK(expectation(up, two_mode_operator(Axis::Z, Sign::Plus, kHalf, kHalf)) == doctest::Approx(1.0));

  const BipartiteState me(kOne, kOne, CMatrix::Identity(3, 3) / std::sqrt(3.0));
  CHECK(std::abs(expectation(me, two_mode_operator(Axis::Z, Sign::Plus, kOne, kOne))) <= 1e-15);

  CMatrix amps = CMatrix::Zero(2, 2);
  amps(0, 0) = 0.6;
  amps(1, 1) = 0.8;
  const BipartiteState c(kHalf, kHalf, amps);
  const SpinOperator half_jz = Complex(0.5) * two_mode_operator(Axis::Z, Sign::Plus, kHalf, kHalf);
  CHECK(expectation(c, half_jz) == doctest::Approx(0.14).epsilon(1e-14));

  // Pure and density routes agree.
  const SpinOperator jx = two_mode_operator(Axis::X, Sign::Minus, kOne, kOne);
  const BipartiteState psi = haar_random_pure(kOne, kOne, 3);
  CHECK(expectation(psi, jx) == doctest::Approx(expectation(DensityMatrix::from_pure(psi), jx)).epsilon(1e-13));
  CHECK(variance(psi, jx) == doctest::Approx(variance(DensityMatrix::from_pure(psi), jx)).epsilon(1e-12));
}

TEST_CASE("expectation error paths") {
  const BipartiteState up = BipartiteState::basis(kHalf, kHalf, 0.5, 0.5);
  CHECK_THROWS_AS(expectation(up, spin_matrices(kHalf).x), InputError);
  const SpinOperator jp(kron(raising_operator(kHalf), CMatrix::Identity(2, 2)));
  CMatrix amps = CMatrix::Zero(2, 2);
  amps(0, 0) = amps(1, 0) = Complex(1.0, 0.0) / std::numbers::sqrt2;
  amps(1, 0) *= kI;
  CHECK_THROWS_AS(expectation(BipartiteState(kHalf, kHalf, amps), jp), NumericalError);
  CHECK_THROWS_AS(variance(up, jp), NumericalError);
}

TEST_CASE("variances") {
  const BipartiteState up = BipartiteState::basis(kHalf, kHalf, 0.5, 0.5);
  CHECK(std::abs(variance(up, two_mode_operator(Axis::Z, Sign::Plus, kHalf, kHalf))) <= 1e-15);

  for (int tj = 1; tj <= 6; ++tj) {
    const SpinJ j = SpinJ::from_twice(tj);
    const BipartiteState me(j, j, CMatrix::Identity(j.dim(), j.dim()) / std::sqrt(double(j.dim())));
    const double v = variance(me, two_mode_operator(Axis::X, Sign::Minus, j, j));
    CHECK(std::abs(v) <= 1e-12);
    const CVector jv = me.joint_vector();
    std::vector<oracle::cd> vec(jv.data(), jv.data() + jv.size());
    CHECK(std::abs(oracle::variance(vec, oracle::two_mode(tj, tj, 'x', -1))) <= 1e-12);
  }

  // Unequal-spin state (|1/2,1> + |-1/2,0>)/sqrt2; brute-force value 1 - 1/sqrt2.
  CMatrix amps = CMatrix::Zero(2, 3);
  amps(1, 2) = amps(0, 1) = 1.0 / std::numbers::sqrt2;
  const BipartiteState count(kHalf, kOne, amps);
  const double vy = variance(count, two_mode_operator(Axis::Y, Sign::Plus, kHalf, kOne));
  CHECK(vy == doctest::Approx(0.29289321881345248).epsilon(1e-13));
  CHECK(vy > 0.0);

  // variance == <op^2> - <op>^2 computed separately.
  const BipartiteState psi = haar_random_pure(SpinJ::parse("3/2"), kOne, 11);
  const SpinOperator op = two_mode_operator(Axis::Y, Sign::Plus, psi.j1(), psi.j2());
  const double mean = expectation(psi, op);
  CHECK(variance(psi, op) == doctest::Approx(expectation(psi, op * op) - mean * mean).epsilon(1e-12));
  CHECK(variance(psi, op) >= -1e-10);
}

TEST_CASE("partial traces") {
  CMatrix bell = CMatrix::Zero(2, 2);
  bell(0, 0) = bell(1, 1) = 1.0 / std::numbers::sqrt2;
  const BipartiteState b(kHalf, kHalf, bell);
  for (int keep : {1, 2}) {
    CHECK(max_abs(partial_trace(b, keep).matrix() - CMatrix::Identity(2, 2) / 2.0) <= 1e-15);
    CHECK(max_abs(partial_trace(DensityMatrix::from_pure(b), keep, kHalf, kHalf).matrix() -
                  CMatrix::Identity(2, 2) / 2.0) <= 1e-15);
  }

  CMatrix amps = CMatrix::Zero(2, 3);
  amps(1, 2) = amps(0, 1) = 1.0 / std::numbers::sqrt2;
  const BipartiteState count(kHalf, kOne, amps);
  CHECK(max_abs(partial_trace(count, 1).matrix() - CMatrix::Identity(2, 2) / 2.0) <= 1e-12);

  const BipartiteState prod = BipartiteState::basis(kHalf, SpinJ::from_twice(0), 0.5, 0.0);
  const CMatrix r1 = partial_trace(DensityMatrix::from_pure(prod), 1, kHalf, SpinJ::from_twice(0)).matrix();
  CHECK(std::abs(r1(1, 1) - 1.0) <= 1e-15);
  CHECK(std::abs(r1(0, 0)) <= 1e-15);

  CHECK_THROWS_AS(partial_trace(DensityMatrix::from_pure(prod), 1, kOne, kOne), InputError);
  CHECK_THROWS_AS(partial_trace(prod, 3), InputError);
}

TEST_CASE("reduced-state spectrum equals squared Schmidt coefficients") {
  for (int s = 0; s < 50; ++s) {
    const SpinJ j1 = SpinJ::from_twice(1 + s % 4);
    const SpinJ j2 = SpinJ::from_twice(1 + (s / 4) % 4);
    const BipartiteState psi = haar_random_pure(j1, j2, 100 + s);
    const DensityMatrix rho2 = partial_trace(DensityMatrix::from_pure(psi), 2, j1, j2);
    RVector eig = Eigen::SelfAdjointEigenSolver<CMatrix>(rho2.matrix()).eigenvalues();
    const RVector coeffs = schmidt_decompose(psi).coeffs;
    // Largest min(d1,d2) eigenvalues, ascending, against squared coefficients.
    const auto r = coeffs.size();
    CHECK((eig.tail(r) - coeffs.array().square().matrix()).cwiseAbs().maxCoeff() <= 1e-9);
    if (eig.size() > r) CHECK(eig.head(eig.size() - r).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("Haar sampling") {
  const BipartiteState a = haar_random_pure(kOne, kOne, 42);
  const BipartiteState b = haar_random_pure(kOne, kOne, 42);
  CHECK(std::abs(a.amplitudes().norm() - 1.0) <= 1e-12);
  CHECK((a.amplitudes() - b.amplitudes()).norm() == 0.0);
  CHECK((a.amplitudes() - haar_random_pure(kOne, kOne, 43).amplitudes()).norm() > 0.1);
  CHECK(substream_seed(5, 1) != substream_seed(5, 2));
  CHECK(substream_seed(5, 1) == substream_seed(5, 1));

  // 1000 samples: bounded |<Jz+>| and never exactly equal Schmidt coefficients.
  const SpinOperator jz = two_mode_operator(Axis::Z, Sign::Plus, kOne, kOne);
  double mean_abs = 0.0;
  int exceptional = 0;
  for (int s = 0; s < 1000; ++s) {
    const BipartiteState psi = haar_random_pure(kOne, kOne, substream_seed(9, s));
    mean_abs += std::abs(expectation(psi, jz)) / 1000.0;
    if (classify(schmidt_decompose(psi)).tag != StateClassTag::Generic) ++exceptional;
  }
  CHECK(mean_abs < 2.0);
  CHECK(mean_abs > 0.0);
  CHECK(exceptional == 0);

  const CMatrix u = haar_random_unitary(4, 7);
  CHECK(max_abs(u.adjoint() * u - CMatrix::Identity(4, 4)) <= 1e-12);
}
