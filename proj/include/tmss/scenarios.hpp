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

#ifndef TMSS_SCENARIOS_HPP
#define TMSS_SCENARIOS_HPP

#include "tmss/optimizer.hpp"
#include "tmss/schmidt.hpp"
#include "tmss/spin_core.hpp"

#include <cstdint>
#include <functional>

namespace tmss {

struct WernerParams {
  SpinJ big_j;
  double alpha = 0.0;

  void validate() const;
};

/// alpha |Phi><Phi| + (1 - alpha) I / (2J+1)^2 with |Phi> = sum_m |m, m>_z / sqrt(2J+1).
DensityMatrix werner_state(const WernerParams& p);

/// Pure sum_m |m, m>_z / sqrt(2j+1).
BipartiteState maximally_entangled_state(SpinJ j);

/// Mixing weight above which the Werner state is entangled: 1 / (2J + 2).
double werner_threshold(SpinJ big_j);

struct WernerFailureReport {
  double max_abs_mean_z = 0.0;
  double min_variance_sum = 0.0;
  bool strict_inequality_holds = false;
  bool entangled = false;  // alpha > threshold
  // alpha == 1: the maximally entangled pure limit, where the variance sum
  // can reach zero.
  bool maximally_entangled_limit = false;
};

/// Probes `n_probes` local pairs: probe 0 is the identity pair, later even
/// probes use random full unitaries and odd probes random rotations, with
/// parameters uniform in [-pi, pi].
WernerFailureReport werner_tmss_failure_check(const WernerParams& p, int n_probes,
                                              std::uint64_t seed);

struct UnequalSpinReport {
  BipartiteState state;
  bool reduced1_is_identity = false;
  double reduced1_defect = 0.0;
  double det_magnitude = 0.0;
  double min_singular_value = 0.0;
  double optimizer_min = 0.0;
  bool passed = false;
};

/// (|1/2, 1> + |-1/2, 0>) / sqrt2 on a spin-1/2 ⊗ spin-1 system.
UnequalSpinReport unequal_spin_counterexample(const OptimizerConfig& config = {});

struct RotationReport {
  BipartiteState state;
  double max_single_moment = 0.0;               // max_k |<J_k^(1,2)>|
  double max_first_moment_under_rotations = 0.0;  // max |<Jz+>| over probes
  StateClass state_class;
  double optimizer_min = 0.0;
  bool passed = false;
};

/// (|1, 1> + |-1, -1>) / sqrt2 at j = 1 under local rotations only.
RotationReport rotation_counterexample(const OptimizerConfig& config = {}, int n_probes = 100);

struct SurveyRecord {
  long index = 0;
  double functional = 0.0;   // full matrix witness of the canonical state
  double closed_form = 0.0;  // closed-form value; functional == 2 * closed_form
  StateClassTag tag = StateClassTag::Generic;
};

struct SurveyStats {
  long samples = 0;
  long tmss_count = 0;
  long exceptional_count = 0;
  double min_functional = 0.0;
  double max_functional = 0.0;
  double max_soundness_gap = 0.0;  // max |functional - 2 closed_form|
};

using SurveySink = std::function<void(const SurveyRecord&)>;

/// Haar-random pure states at spin j ⊗ j; sample i uses substream_seed(seed, i).
/// Records are streamed to `sink` in index order when provided.
SurveyStats haar_survey(SpinJ j, long n_samples, std::uint64_t seed, const SurveySink& sink = {});

}  // namespace tmss

#endif  // TMSS_SCENARIOS_HPP
