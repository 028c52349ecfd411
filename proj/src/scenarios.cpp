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

#include "tmss/scenarios.hpp"

#include "tmss/error.hpp"
#include "tmss/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace tmss {

namespace {

std::vector<double> uniform_angles(std::mt19937_64& engine, int n) {
  std::uniform_real_distribution<double> uniform(-std::numbers::pi, std::numbers::pi);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (double& x : out) x = uniform(engine);
  return out;
}

}  // namespace

void WernerParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("Werner alpha must lie in [0, 1]");
}

BipartiteState maximally_entangled_state(SpinJ j) {
  const CMatrix amps = CMatrix::Identity(j.dim(), j.dim()) / std::sqrt(static_cast<double>(j.dim()));
  return BipartiteState(j, j, amps);
}

DensityMatrix werner_state(const WernerParams& p) {
  p.validate();
  const CVector phi = maximally_entangled_state(p.big_j).joint_vector();
  const auto dim = phi.size();
  CMatrix rho = p.alpha * (phi * phi.adjoint());
  rho.diagonal().array() += (1.0 - p.alpha) / static_cast<double>(dim);
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

double werner_threshold(SpinJ big_j) {
  // 1 / (2J + 2) = 1 / (twice_j + 2).
  return 1.0 / static_cast<double>(big_j.twice_j() + 2);
}

WernerFailureReport werner_tmss_failure_check(const WernerParams& p, int n_probes,
                                              std::uint64_t seed) {
  if (n_probes < 1) throw InputError("n_probes must be positive");
  const QuantumState rho = werner_state(p);
  const WitnessEvaluator eval(p.big_j, p.big_j);
  const UnitaryParametrization full(LocalGroup::FullUnitary, p.big_j);
  const UnitaryParametrization rot(LocalGroup::Rotations, p.big_j);

  WernerFailureReport r;
  r.entangled = p.alpha > werner_threshold(p.big_j);
  r.maximally_entangled_limit = p.alpha == 1.0;
  r.min_variance_sum = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_probes; ++i) {
    std::mt19937_64 engine(substream_seed(seed, static_cast<std::uint64_t>(i)));
    const UnitaryParametrization& param = i % 2 == 0 ? full : rot;
    const WitnessReport w =
        i == 0 ? eval.report(rho)
               : eval.report(apply_local_unitaries(rho, param(uniform_angles(engine, param.size())),
                                                   param(uniform_angles(engine, param.size()))));
    r.max_abs_mean_z = std::max(r.max_abs_mean_z, std::abs(w.mean_z_plus));
    r.min_variance_sum = std::min(r.min_variance_sum, w.v_y_plus + w.v_x_minus);
  }
  r.strict_inequality_holds = r.min_variance_sum > r.max_abs_mean_z + 1e-10;
  return r;
}

UnequalSpinReport unequal_spin_counterexample(const OptimizerConfig& config) {
  const SpinJ half = SpinJ::from_twice(1);
  const SpinJ one = SpinJ::from_twice(2);
  CMatrix amps = CMatrix::Zero(2, 3);
  amps(half.index_of(0.5), one.index_of(1.0)) = 1.0 / std::numbers::sqrt2;
  amps(half.index_of(-0.5), one.index_of(0.0)) = 1.0 / std::numbers::sqrt2;
  UnequalSpinReport r{BipartiteState(half, one, amps)};

  const CMatrix reduced = partial_trace(r.state, 1).matrix();
  r.reduced1_defect = (reduced - 0.5 * CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();
  r.reduced1_is_identity = r.reduced1_defect <= 1e-12;

  const CMatrix kernel_probe = two_mode_operator(Axis::X, Sign::Minus, half, one).matrix() -
                               two_mode_operator(Axis::Y, Sign::Plus, half, one).matrix();
  r.det_magnitude = std::abs(Eigen::PartialPivLU<CMatrix>(kernel_probe).determinant());
  Eigen::JacobiSVD<CMatrix> svd(kernel_probe);
  r.min_singular_value = svd.singularValues().minCoeff();

  r.optimizer_min = minimize_witness(r.state, LocalGroup::FullUnitary, config).best_functional;
  r.passed = r.reduced1_is_identity && r.det_magnitude > 1e-8 && r.min_singular_value > 1e-8 &&
             r.optimizer_min > 1e-6;
  return r;
}

RotationReport rotation_counterexample(const OptimizerConfig& config, int n_probes) {
  const SpinJ one = SpinJ::from_twice(2);
  CMatrix amps = CMatrix::Zero(3, 3);
  amps(one.index_of(1.0), one.index_of(1.0)) = 1.0 / std::numbers::sqrt2;
  amps(one.index_of(-1.0), one.index_of(-1.0)) = 1.0 / std::numbers::sqrt2;
  RotationReport r{BipartiteState(one, one, amps), 0.0, 0.0, StateClass{}, 0.0, false};

  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    for (int sub : {1, 2}) {
      r.max_single_moment = std::max(
          r.max_single_moment, std::abs(expectation(r.state, local_operator(axis, sub, one, one))));
    }
  }
  r.state_class = classify(schmidt_decompose(r.state));

  const WitnessEvaluator eval(one, one);
  const UnitaryParametrization rot(LocalGroup::Rotations, one);
  for (int i = 0; i < n_probes; ++i) {
    std::mt19937_64 engine(substream_seed(config.seed ^ 0x5EEDULL, static_cast<std::uint64_t>(i)));
    const CMatrix u1 = rot(uniform_angles(engine, 3));
    const CMatrix u2 = rot(uniform_angles(engine, 3));
    const WitnessReport w = eval.report(apply_local_unitaries(r.state, u1, u2));
    r.max_first_moment_under_rotations =
        std::max(r.max_first_moment_under_rotations, std::abs(w.mean_z_plus));
  }

  r.optimizer_min = minimize_witness(r.state, LocalGroup::Rotations, config).best_functional;
  r.passed = r.max_single_moment <= 1e-12 && r.max_first_moment_under_rotations <= 1e-10 &&
             r.state_class.tag == StateClassTag::MaxEntangledSubspace && r.optimizer_min > 1e-6;
  return r;
}

SurveyStats haar_survey(SpinJ j, long n_samples, std::uint64_t seed, const SurveySink& sink) {
  if (n_samples < 1) throw InputError("n_samples must be at least 1");
  const WitnessEvaluator eval(j, j);
  SurveyStats stats;
  stats.samples = n_samples;
  stats.min_functional = std::numeric_limits<double>::infinity();
  stats.max_functional = -std::numeric_limits<double>::infinity();
  for (long i = 0; i < n_samples; ++i) {
    const BipartiteState psi = haar_random_pure(j, j, substream_seed(seed, static_cast<std::uint64_t>(i)));
    const CanonicalResult canon = canonicalize(psi);
    const std::span<const double> coeffs(canon.form.coeffs.data(), canon.form.coeffs.size());

    SurveyRecord rec;
    rec.index = i;
    rec.tag = classify(canon.form).tag;
    rec.closed_form = closed_form_witness(coeffs, j);
    rec.functional = eval.report(canon.canonical).functional;

    if (rec.functional < -kStrictnessTol) ++stats.tmss_count;
    if (rec.tag != StateClassTag::Generic) ++stats.exceptional_count;
    stats.min_functional = std::min(stats.min_functional, rec.functional);
    stats.max_functional = std::max(stats.max_functional, rec.functional);
    stats.max_soundness_gap =
        std::max(stats.max_soundness_gap, std::abs(rec.functional - 2.0 * rec.closed_form));
    if (sink) sink(rec);
  }
  return stats;
}

}  // namespace tmss
