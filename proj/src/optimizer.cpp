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

#include "tmss/optimizer.hpp"

#include "tmss/error.hpp"
#include "tmss/nelder_mead.hpp"
#include "tmss/schmidt.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace tmss {

std::string_view to_string(LocalGroup group) {
  return group == LocalGroup::FullUnitary ? "full_unitary" : "rotations";
}

LocalGroup parse_local_group(std::string_view text) {
  if (text == "full" || text == "full_unitary" || text == "unitary") return LocalGroup::FullUnitary;
  if (text == "rotations" || text == "rotation") return LocalGroup::Rotations;
  throw InputError("unknown local group '" + std::string(text) + "' (expected full or rotations)");
}

int parameter_count(LocalGroup group, SpinJ j) {
  return group == LocalGroup::FullUnitary ? j.dim() * j.dim() : 3;
}

UnitaryParametrization::UnitaryParametrization(LocalGroup group, SpinJ j) : group_(group), j_(j) {
  if (group_ == LocalGroup::Rotations) {
    const SpinMatrices s = spin_matrices(j);
    jz_diag_ = s.z.matrix().diagonal().real();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(s.y.matrix());
    jy_vectors_ = solver.eigenvectors();
    jy_values_ = solver.eigenvalues();
  }
}

CMatrix UnitaryParametrization::operator()(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != size()) {
    throw InputError("expected " + std::to_string(size()) + " parameters for " +
                     std::string(to_string(group_)) + " at j = " + j_.str() + ", got " +
                     std::to_string(params.size()));
  }
  const int d = j_.dim();
  const Complex i_unit(0.0, 1.0);

  if (group_ == LocalGroup::Rotations) {
    const double a = params[0];
    const double b = params[1];
    const double c = params[2];
    CMatrix ry = jy_vectors_ *
                 (-i_unit * b * jy_values_.cast<Complex>()).array().exp().matrix().asDiagonal() *
                 jy_vectors_.adjoint();
    for (int r = 0; r < d; ++r) ry.row(r) *= std::exp(-i_unit * a * jz_diag_(r));
    for (int k = 0; k < d; ++k) ry.col(k) *= std::exp(-i_unit * c * jz_diag_(k));
    return ry;
  }

  // Orthonormal Hermitian basis: E_kk, then for each pair a < b the symmetric
  // (E_ab + E_ba)/sqrt2 and antisymmetric i(E_ab - E_ba)/sqrt2 elements.
  CMatrix h = CMatrix::Zero(d, d);
  std::size_t p = 0;
  for (int k = 0; k < d; ++k) h(k, k) = params[p++];
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const double sym = params[p++] * inv_sqrt2;
      const double anti = params[p++] * inv_sqrt2;
      h(a, b) += Complex(sym, anti);
      h(b, a) += Complex(sym, -anti);
    }
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const CVector phases = (i_unit * solver.eigenvalues().cast<Complex>()).array().exp();
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

SpinOperator make_unitary(LocalGroup group, std::span<const double> params, SpinJ j) {
  return SpinOperator(UnitaryParametrization(group, j)(params));
}

std::vector<double> full_unitary_params(const CMatrix& u) {
  if (u.rows() != u.cols()) throw InputError("unitary must be square");
  const auto d = u.rows();
  // A unitary is normal, so its Schur form is diagonal: u = Q diag(e^{i t}) Q^dagger.
  Eigen::ComplexSchur<CMatrix> schur(u);
  const CMatrix& q = schur.matrixU();
  RVector angles(d);
  for (Eigen::Index k = 0; k < d; ++k) angles(k) = std::arg(schur.matrixT()(k, k));
  const CMatrix h = q * angles.cast<Complex>().asDiagonal() * q.adjoint();

  std::vector<double> params;
  params.reserve(static_cast<std::size_t>(d * d));
  for (Eigen::Index k = 0; k < d; ++k) params.push_back(h(k, k).real());
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = a + 1; b < d; ++b) {
      params.push_back(std::numbers::sqrt2 * h(a, b).real());
      params.push_back(std::numbers::sqrt2 * h(a, b).imag());
    }
  }
  return params;
}

QuantumState apply_local_unitaries(const QuantumState& state, const CMatrix& u1,
                                   const CMatrix& u2) {
  if (const auto* pure = std::get_if<BipartiteState>(&state)) {
    if (u1.rows() != pure->j1().dim() || u2.rows() != pure->j2().dim()) {
      throw InputError("local unitary dimensions do not match the state");
    }
    return BipartiteState(pure->j1(), pure->j2(), u1 * pure->amplitudes() * u2.transpose());
  }
  return std::get<DensityMatrix>(state).conjugated(kron(u1, u2));
}

void OptimizerConfig::validate() const {
  if (restarts < 1) throw InputError("restarts must be positive");
  if (max_iters < 1) throw InputError("max_iters must be positive");
  if (!(step_tol > 0.0) || !(objective_tol > 0.0) || !(initial_step > 0.0)) {
    throw InputError("optimizer tolerances must be positive");
  }
}

namespace {

struct SearchProblem {
  const QuantumState& state;
  WitnessEvaluator evaluator;
  UnitaryParametrization param1;
  UnitaryParametrization param2;

  double operator()(std::span<const double> x) const {
    const auto n1 = static_cast<std::size_t>(param1.size());
    const CMatrix u1 = param1(x.subspan(0, n1));
    const CMatrix u2 = param2(x.subspan(n1));
    return evaluator.functional(apply_local_unitaries(state, u1, u2));
  }
};

}  // namespace

double objective(const QuantumState& state, SpinJ j1, SpinJ j2, LocalGroup group,
                 std::span<const double> params1, std::span<const double> params2) {
  const UnitaryParametrization p1(group, j1);
  const UnitaryParametrization p2(group, j2);
  return witness_report(apply_local_unitaries(state, p1(params1), p2(params2)), j1, j2).functional;
}

OptResult minimize_witness(const QuantumState& state, SpinJ j1, SpinJ j2, LocalGroup group,
                           const OptimizerConfig& config) {
  config.validate();
  if (joint_dim(state) != static_cast<Eigen::Index>(j1.dim()) * j2.dim()) {
    throw InputError("state dimension does not match spins " + j1.str() + " x " + j2.str());
  }
  const SearchProblem problem{state, WitnessEvaluator(j1, j2), UnitaryParametrization(group, j1),
                              UnitaryParametrization(group, j2)};
  const auto n1 = static_cast<std::size_t>(problem.param1.size());
  const std::size_t n = n1 + static_cast<std::size_t>(problem.param2.size());
  const SimplexOptions options{config.initial_step, config.max_iters, config.step_tol,
                               config.objective_tol};
  const ScalarObjective f = [&problem](std::span<const double> x) { return problem(x); };

  std::vector<std::vector<double>> starts;
  starts.emplace_back(n, 0.0);
  for (int r = 1; r <= config.restarts; ++r) {
    std::mt19937_64 engine(substream_seed(config.seed, static_cast<std::uint64_t>(r)));
    std::uniform_real_distribution<double> uniform(-std::numbers::pi, std::numbers::pi);
    std::vector<double> start(n);
    for (double& x : start) x = uniform(engine);
    starts.push_back(std::move(start));
  }
  if (const auto* pure = std::get_if<BipartiteState>(&state);
      pure != nullptr && group == LocalGroup::FullUnitary) {
    const SchmidtForm form = schmidt_decompose(*pure);
    std::vector<double> start = full_unitary_params(form.u1);
    const std::vector<double> second = full_unitary_params(form.u2);
    start.insert(start.end(), second.begin(), second.end());
    starts.push_back(std::move(start));
  }

  // Each start is independent of the others.
  std::vector<SimplexResult> runs(starts.size());
  for (std::size_t r = 0; r < runs.size(); ++r) {
    runs[r] = nelder_mead(f, std::move(starts[r]), options);
  }

  OptResult out;
  std::size_t best = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    out.iterations_total += runs[r].iterations;
    if (runs[r].value < runs[best].value) best = r;
  }
  const SimplexResult& winner = runs[best];
  out.best_restart = static_cast<int>(best);
  out.best_params_1.assign(winner.x.begin(), winner.x.begin() + static_cast<std::ptrdiff_t>(n1));
  out.best_params_2.assign(winner.x.begin() + static_cast<std::ptrdiff_t>(n1), winner.x.end());
  out.best_report = problem.evaluator.report(apply_local_unitaries(
      state, problem.param1(out.best_params_1), problem.param2(out.best_params_2)));
  out.best_functional = out.best_report.functional;
  out.converged = winner.converged;
  return out;
}

OptResult minimize_witness(const BipartiteState& state, LocalGroup group,
                           const OptimizerConfig& config) {
  return minimize_witness(QuantumState(state), state.j1(), state.j2(), group, config);
}

}  // namespace tmss
