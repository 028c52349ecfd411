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

#ifndef TMSS_WITNESS_HPP
#define TMSS_WITNESS_HPP

#include "tmss/spin_core.hpp"

#include <span>

namespace tmss {

inline constexpr double kStrictnessTol = 1e-10;

/// Moments entering the two-mode squeezing criterion
///   V(Jy+) + V(Jx-) < <Jz+>.
/// `functional` is V(Jy+) + V(Jx-) - <Jz+>, negative exactly for squeezed states.
struct WitnessReport {
  double v_y_plus = 0.0;
  double v_x_minus = 0.0;
  double mean_z_plus = 0.0;
  double functional = 0.0;
  bool is_tmss = false;
  // Unclamped variances, for diagnosing round-off.
  double raw_v_y_plus = 0.0;
  double raw_v_x_minus = 0.0;
};

struct SymmetryReport {
  double max_first_moment = 0.0;  // max |<J_{x,y}^{(+,-)}>|
  double variance_gap = 0.0;      // |V(Jy+) - V(Jx-)|
};

/// Terms of <(Jx-)^2 - Jz+/2> = 2<(Jx1)^2> - 2<Jx1 Jx2> - <Jz+/2> for the
/// canonical state sum_m psi_m |m, m>_z.
struct CanonicalMoments {
  double jx1_sq = 0.0;
  double jx1_jx2 = 0.0;
  double half_jz_plus = 0.0;
};

struct UncertaintyBound {
  double lhs = 0.0;  // V(Jx-) + V(Jy+)
  double rhs = 0.0;  // |<Jz->|
};

struct ZeroVarianceCertificate {
  bool is_zero_variance = false;
  bool is_max_entangled = false;
  double jz_minus_variance = 0.0;
  double v_y_plus = 0.0;
  double v_x_minus = 0.0;
  /// Largest |rho_k - I/d| entry over both reduced states.
  double reduced_state_defect = 0.0;
  /// A zero-variance state must be maximally entangled.
  bool implication_holds = true;
};

/// Caches the joint operators for a fixed (j1, j2) so repeated evaluations
/// (optimizer inner loops, surveys) avoid rebuilding them.
class WitnessEvaluator {
 public:
  WitnessEvaluator(SpinJ j1, SpinJ j2);

  SpinJ j1() const { return j1_; }
  SpinJ j2() const { return j2_; }

  WitnessReport report(const QuantumState& state, double strictness_tol = kStrictnessTol) const;
  double functional(const QuantumState& state) const;

  const SpinOperator& jx_minus() const { return jx_minus_; }
  const SpinOperator& jy_plus() const { return jy_plus_; }
  const SpinOperator& jz_plus() const { return jz_plus_; }
  const SpinOperator& jz_minus() const { return jz_minus_; }

 private:
  SpinJ j1_;
  SpinJ j2_;
  SpinOperator jx_minus_;
  SpinOperator jy_plus_;
  SpinOperator jz_plus_;
  SpinOperator jz_minus_;
};

WitnessReport witness_report(const BipartiteState& state, double strictness_tol = kStrictnessTol);
WitnessReport witness_report(const QuantumState& state, SpinJ j1, SpinJ j2,
                             double strictness_tol = kStrictnessTol);

/// sum_{m=-j}^{j-1} (psi_m - psi_{m+1}) psi_m [j(j+1) - m(m+1)], which equals
/// <(Jx-)^2 - Jz+/2> on the canonical state. Requires 2j+1 nonnegative,
/// nondescending coefficients with unit sum of squares.
double closed_form_witness(std::span<const double> coeffs, SpinJ j);

CanonicalMoments canonical_moment_terms(std::span<const double> coeffs, SpinJ j);

/// Intended for canonical (diagonal) states; reports magnitudes only.
SymmetryReport symmetry_check(const BipartiteState& canonical);

UncertaintyBound uncertainty_bound_check(const QuantumState& state, SpinJ j1, SpinJ j2);

ZeroVarianceCertificate zero_variance_certificate(const QuantumState& state, SpinJ j1, SpinJ j2,
                                                  double tol = kStrictnessTol);

}  // namespace tmss

#endif  // TMSS_WITNESS_HPP
