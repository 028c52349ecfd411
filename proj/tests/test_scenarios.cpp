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
#include "tmss/scenarios.hpp"

#include <cmath>
#include <vector>

using namespace tmss;

namespace {

const SpinJ kHalf = SpinJ::from_twice(1);
const SpinJ kOne = SpinJ::from_twice(2);

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("Werner state endpoints") {
  for (int tj = 1; tj <= 4; ++tj) {
    const SpinJ big_j = SpinJ::from_twice(tj);
    const int d = big_j.dim();
    const DensityMatrix mixed = werner_state({big_j, 0.0});
    CHECK(max_abs(mixed.matrix() - CMatrix::Identity(d * d, d * d) / double(d * d)) <= 1e-15);

    const DensityMatrix pure = werner_state({big_j, 1.0});
    const CVector phi = maximally_entangled_state(big_j).joint_vector();
    CHECK(max_abs(pure.matrix() - phi * phi.adjoint()) <= 1e-15);
  }
}

TEST_CASE("Werner spectrum and marginals") {
  const DensityMatrix rho = werner_state({kHalf, 0.5});
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho.matrix());
  const RVector ev = eig.eigenvalues();
  CHECK(ev(3) == doctest::Approx(0.625).epsilon(1e-14));
  for (int k = 0; k < 3; ++k) CHECK(ev(k) == doctest::Approx(0.125).epsilon(1e-14));

  for (int tj = 1; tj <= 4; ++tj) {
    const SpinJ big_j = SpinJ::from_twice(tj);
    const int d = big_j.dim();
    const DensityMatrix w = werner_state({big_j, 0.37});
    for (int keep : {1, 2})
      CHECK(max_abs(partial_trace(w, keep, big_j, big_j).matrix() - CMatrix::Identity(d, d) / double(d)) <= 1e-14);
  }
}

TEST_CASE("Werner parameter validation") {
  CHECK_THROWS_AS(werner_state({kHalf, -0.1}), InputError);
  CHECK_THROWS_AS(werner_state({kHalf, 1.1}), InputError);
  CHECK_THROWS_AS(werner_state({kHalf, std::nan("")}), InputError);
}

TEST_CASE("entanglement thresholds") {
  CHECK(werner_threshold(kHalf) == 1.0 / 3.0);
  CHECK(werner_threshold(kOne) == 1.0 / 4.0);
  CHECK(werner_threshold(SpinJ::from_twice(5)) == 1.0 / 7.0);
}

TEST_CASE("entangled Werner states are never certified") {
  SUBCASE("J = 1/2, alpha = 0.5") {
    const WernerFailureReport r = werner_tmss_failure_check({kHalf, 0.5}, 200, 1);
    CHECK(r.entangled);
    CHECK(r.max_abs_mean_z <= 1e-10);
    CHECK(r.min_variance_sum > 0.0);
    CHECK(r.strict_inequality_holds);
    CHECK_FALSE(r.maximally_entangled_limit);
  }
  SUBCASE("J = 1, alpha = 0.3") {
    const WernerFailureReport r = werner_tmss_failure_check({kOne, 0.3}, 200, 2);
    CHECK(r.entangled);
    CHECK(r.max_abs_mean_z <= 1e-10);
    CHECK(r.strict_inequality_holds);
  }
  SUBCASE("separable side") {
    const WernerFailureReport r = werner_tmss_failure_check({kOne, 0.2}, 50, 3);
    CHECK_FALSE(r.entangled);
    CHECK(r.max_abs_mean_z <= 1e-10);
  }
  SUBCASE("alpha = 1 is the maximally entangled limit") {
    const WernerFailureReport r = werner_tmss_failure_check({kHalf, 1.0}, 50, 4);
    CHECK(r.maximally_entangled_limit);
    CHECK(r.min_variance_sum <= 1e-10);
  }
}

TEST_CASE("unequal-spin counterexample") {
  OptimizerConfig cfg;
  cfg.restarts = 8;
  const UnequalSpinReport r = unequal_spin_counterexample(cfg);
  CHECK(r.state.j1() == kHalf);
  CHECK(r.state.j2() == kOne);
  CHECK(r.reduced1_is_identity);
  CHECK(r.reduced1_defect <= 1e-12);
  // |det| of the 2x2 moment matrix, frozen from a brute-force evaluation.
  CHECK(r.det_magnitude == doctest::Approx(1.125).epsilon(1e-12));
  CHECK(r.min_singular_value > 1e-6);
  CHECK(r.optimizer_min > 1e-6);
  CHECK(r.passed);
}

TEST_CASE("rotation counterexample") {
  OptimizerConfig cfg;
  cfg.restarts = 8;
  const RotationReport r = rotation_counterexample(cfg, 50);
  CHECK(r.max_single_moment <= 1e-12);
  CHECK(r.max_first_moment_under_rotations <= 1e-10);
  CHECK(r.state_class.tag == StateClassTag::MaxEntangledSubspace);
  CHECK(r.optimizer_min > 1e-6);
  CHECK(r.passed);
}

TEST_CASE("Haar survey") {
  for (int tj : {1, 4}) {
    const SpinJ j = SpinJ::from_twice(tj);
    long streamed = 0;
    long exceptional = 0;
    const SurveyStats s = haar_survey(j, 1000, 2026, [&](const SurveyRecord& rec) {
      CHECK(rec.index == streamed);
      ++streamed;
      if (rec.tag != StateClassTag::Generic) ++exceptional;
    });
    CHECK(s.samples == 1000);
    CHECK(streamed == 1000);
    CHECK(s.exceptional_count == exceptional);
    CHECK(s.exceptional_count == 0);
    CHECK(s.tmss_count == 1000);
    CHECK(s.max_functional < -1e-10);
    CHECK(s.min_functional <= s.max_functional);
    CHECK(s.max_soundness_gap <= 1e-10);
  }
}

TEST_CASE("survey determinism and input checks") {
  std::vector<double> a;
  std::vector<double> b;
  haar_survey(kOne, 5, 9, [&](const SurveyRecord& r) { a.push_back(r.functional); });
  haar_survey(kOne, 5, 9, [&](const SurveyRecord& r) { b.push_back(r.functional); });
  CHECK(a == b);

  std::vector<double> first;
  haar_survey(kOne, 1, 9, [&](const SurveyRecord& r) { first.push_back(r.functional); });
  REQUIRE(first.size() == 1);
  CHECK(first[0] == a[0]);

  CHECK_THROWS_AS(haar_survey(kOne, 0, 9), InputError);
  CHECK_THROWS_AS(haar_survey(kOne, -3, 9), InputError);
}
