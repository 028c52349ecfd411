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

#include "tmss/witness.hpp"

#include "tmss/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tmss {

namespace {

void validate_coefficients(std::span<const double> coeffs, SpinJ j) {
  if (static_cast<int>(coeffs.size()) != j.dim()) {
    throw InputError("expected " + std::to_string(j.dim()) + " coefficients for j = " + j.str() +
                     ", got " + std::to_string(coeffs.size()));
  }
  double norm_sq = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!(coeffs[k] >= 0.0)) throw InputError("coefficients must be nonnegative");
    if (k > 0 && coeffs[k] < coeffs[k - 1]) {
      throw InputError("coefficients must be in nondescending order");
    }
    norm_sq += coeffs[k] * coeffs[k];
  }
  if (std::abs(norm_sq - 1.0) > kNormTol) {
    throw InputError("coefficients must have unit sum of squares");
  }
}

void check_state_dims(const QuantumState& state, SpinJ j1, SpinJ j2) {
  if (joint_dim(state) != static_cast<Eigen::Index>(j1.dim()) * j2.dim()) {
    throw InputError("state dimension " + std::to_string(joint_dim(state)) +
                     " does not match spins " + j1.str() + " x " + j2.str());
  }
  if (const auto* pure = std::get_if<BipartiteState>(&state)) {
    if (pure->j1() != j1 || pure->j2() != j2) {
      throw InputError("state spins do not match requested spins");
    }
  }
}

}  // namespace

WitnessEvaluator::WitnessEvaluator(SpinJ j1, SpinJ j2)
    : j1_(j1),
      j2_(j2),
      jx_minus_(two_mode_operator(Axis::X, Sign::Minus, j1, j2)),
      jy_plus_(two_mode_operator(Axis::Y, Sign::Plus, j1, j2)),
      jz_plus_(two_mode_operator(Axis::Z, Sign::Plus, j1, j2)),
      jz_minus_(two_mode_operator(Axis::Z, Sign::Minus, j1, j2)) {}

WitnessReport WitnessEvaluator::report(const QuantumState& state, double strictness_tol) const {
  check_state_dims(state, j1_, j2_);
  WitnessReport r;
  r.raw_v_y_plus = variance(state, jy_plus_);
  r.raw_v_x_minus = variance(state, jx_minus_);
  r.v_y_plus = std::max(0.0, r.raw_v_y_plus);
  r.v_x_minus = std::max(0.0, r.raw_v_x_minus);
  r.mean_z_plus = expectation(state, jz_plus_);
  r.functional = r.v_y_plus + r.v_x_minus - r.mean_z_plus;
  r.is_tmss = r.functional < -strictness_tol;
  return r;
}

double WitnessEvaluator::functional(const QuantumState& state) const {
  return report(state).functional;
}

WitnessReport witness_report(const BipartiteState& state, double strictness_tol) {
  return WitnessEvaluator(state.j1(), state.j2()).report(state, strictness_tol);
}

WitnessReport witness_report(const QuantumState& state, SpinJ j1, SpinJ j2,
                             double strictness_tol) {
  return WitnessEvaluator(j1, j2).report(state, strictness_tol);
}

double closed_form_witness(std::span<const double> coeffs, SpinJ j) {
  validate_coefficients(coeffs, j);
  double sum = 0.0;
  for (int k = 0; k + 1 < j.dim(); ++k) {
    const double m = j.m(k);
    sum += (coeffs[k] - coeffs[k + 1]) * coeffs[k] * (j.casimir() - m * (m + 1.0));
  }
  return sum;
}

CanonicalMoments canonical_moment_terms(std::span<const double> coeffs, SpinJ j) {
  validate_coefficients(coeffs, j);
  CanonicalMoments t;
  for (int k = 0; k < j.dim(); ++k) {
    const double m = j.m(k);
    const double p2 = coeffs[k] * coeffs[k];
    t.jx1_sq += p2 * (j.casimir() - m * m);
    t.half_jz_plus += m * p2;
  }
  t.jx1_sq *= 0.5;
  // alpha_m^2 = [j(j+1) - m(m+1)] / 4 vanishes at m = j, so the sum stops at j-1.
  for (int k = 0; k + 1 < j.dim(); ++k) {
    const double m = j.m(k);
    const double alpha_sq = 0.25 * (j.casimir() - m * (m + 1.0));
    t.jx1_jx2 += coeffs[k + 1] * coeffs[k] * alpha_sq;
  }
  t.jx1_jx2 *= 2.0;
  return t;
}

SymmetryReport symmetry_check(const BipartiteState& canonical) {
  const SpinJ j1 = canonical.j1();
  const SpinJ j2 = canonical.j2();
  SymmetryReport r;
  for (Axis axis : {Axis::X, Axis::Y}) {
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      const double moment = expectation(canonical, two_mode_operator(axis, sign, j1, j2));
      r.max_first_moment = std::max(r.max_first_moment, std::abs(moment));
    }
  }
  const double vy = variance(canonical, two_mode_operator(Axis::Y, Sign::Plus, j1, j2));
  const double vx = variance(canonical, two_mode_operator(Axis::X, Sign::Minus, j1, j2));
  r.variance_gap = std::abs(vy - vx);
  return r;
}

UncertaintyBound uncertainty_bound_check(const QuantumState& state, SpinJ j1, SpinJ j2) {
  check_state_dims(state, j1, j2);
  const WitnessEvaluator eval(j1, j2);
  UncertaintyBound b;
  b.lhs = std::max(0.0, variance(state, eval.jx_minus())) +
          std::max(0.0, variance(state, eval.jy_plus()));
  b.rhs = std::abs(expectation(state, eval.jz_minus()));
  return b;
}

ZeroVarianceCertificate zero_variance_certificate(const QuantumState& state, SpinJ j1, SpinJ j2,
                                                  double tol) {
  check_state_dims(state, j1, j2);
  const WitnessEvaluator eval(j1, j2);
  ZeroVarianceCertificate c;
  c.v_y_plus = std::max(0.0, variance(state, eval.jy_plus()));
  c.v_x_minus = std::max(0.0, variance(state, eval.jx_minus()));
  c.jz_minus_variance = std::max(0.0, variance(state, eval.jz_minus()));
  c.is_zero_variance = c.v_y_plus <= tol && c.v_x_minus <= tol;

  const DensityMatrix rho = std::visit(
      [](const auto& s) -> DensityMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, BipartiteState>) {
          return DensityMatrix::from_pure(s);
        } else {
          return s;
        }
      },
      state);
  for (int keep : {1, 2}) {
    const SpinJ j = keep == 1 ? j1 : j2;
    const CMatrix reduced = partial_trace(rho, keep, j1, j2).matrix();
    const CMatrix flat = CMatrix::Identity(j.dim(), j.dim()) / static_cast<double>(j.dim());
    c.reduced_state_defect = std::max(c.reduced_state_defect, (reduced - flat).cwiseAbs().maxCoeff());
  }
  // Maximal entanglement needs a pure state; mixtures such as Werner states
  // also have flat marginals.
  const double purity = rho.matrix().cwiseAbs2().sum();
  c.is_max_entangled = j1 == j2 && c.reduced_state_defect <= tol && std::abs(purity - 1.0) <= tol;
  c.implication_holds = !c.is_zero_variance || (c.is_max_entangled && c.jz_minus_variance <= tol);
  return c;
}

}  // namespace tmss
