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

#ifndef TMSS_OPTIMIZER_HPP
#define TMSS_OPTIMIZER_HPP

#include "tmss/spin_core.hpp"
#include "tmss/witness.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace tmss {

/// Local transformations searched over.
///   FullUnitary: U = exp(i H), H = sum_k p_k B_k over an orthonormal Hermitian
///                basis (d^2 parameters; includes the global phase).
///   Rotations:   U = exp(-i a Jz) exp(-i b Jy) exp(-i c Jz) (3 parameters).
enum class LocalGroup { FullUnitary, Rotations };

std::string_view to_string(LocalGroup group);
/// "full" / "full_unitary" / "rotations".
LocalGroup parse_local_group(std::string_view text);

int parameter_count(LocalGroup group, SpinJ j);

/// Precomputed generators for one (group, j) pair.
class UnitaryParametrization {
 public:
  UnitaryParametrization(LocalGroup group, SpinJ j);

  LocalGroup group() const { return group_; }
  SpinJ spin() const { return j_; }
  int size() const { return parameter_count(group_, j_); }

  CMatrix operator()(std::span<const double> params) const;

 private:
  LocalGroup group_;
  SpinJ j_;
  RVector jz_diag_;
  // Jy = V diag(lambda) V^dagger.
  CMatrix jy_vectors_;
  RVector jy_values_;
};

SpinOperator make_unitary(LocalGroup group, std::span<const double> params, SpinJ j);

/// Generator coordinates p with make_unitary(FullUnitary, p, j) == u, from the
/// principal matrix logarithm of a unitary u.
std::vector<double> full_unitary_params(const CMatrix& u);

/// (u1 ⊗ u2) applied to a pure state, or conjugation of a density matrix.
QuantumState apply_local_unitaries(const QuantumState& state, const CMatrix& u1,
                                   const CMatrix& u2);

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 2000;
  double step_tol = 1e-9;
  double objective_tol = 1e-11;
  std::uint64_t seed = 0;
  double initial_step = 0.1;

  void validate() const;
};

struct OptResult {
  double best_functional = 0.0;
  std::vector<double> best_params_1;
  std::vector<double> best_params_2;
  WitnessReport best_report;
  long iterations_total = 0;
  bool converged = false;
  // 0 is the identity start, 1..restarts are random starts and, for pure
  // states under FullUnitary, restarts + 1 is the Schmidt-canonical start.
  int best_restart = 0;
};

double objective(const QuantumState& state, SpinJ j1, SpinJ j2, LocalGroup group,
                 std::span<const double> params1, std::span<const double> params2);

/// Multi-start simplex search for the smallest witness functional over local
/// transformations. Start 0 is the identity; starts 1..restarts are uniform in
/// [-pi, pi]^n drawn from substream_seed(seed, start). Pure states searched
/// over FullUnitary get one more start at the unitaries that bring the state to
/// Schmidt-canonical form. The winner is chosen by (functional, start index),
/// so the result does not depend on run order.
OptResult minimize_witness(const QuantumState& state, SpinJ j1, SpinJ j2, LocalGroup group,
                           const OptimizerConfig& config);
OptResult minimize_witness(const BipartiteState& state, LocalGroup group,
                           const OptimizerConfig& config);

}  // namespace tmss

#endif  // TMSS_OPTIMIZER_HPP
