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

#include "tmss/cli.hpp"

#include "tmss/error.hpp"
#include "tmss/optimizer.hpp"
#include "tmss/scenarios.hpp"
#include "tmss/schmidt.hpp"
#include "tmss/selftest.hpp"
#include "tmss/state_io.hpp"
#include "tmss/witness.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

namespace tmss {

namespace {

using nlohmann::json;

struct GlobalOptions {
  double tol = kStrictnessTol;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool quick = false;
};

StateFile load_state(const std::string& path, std::istream& in) {
  if (path == "-") return read_state_file(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open state file '" + path + "'");
  return read_state_file(file);
}

std::span<const double> as_span(const RVector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

json to_json(const WitnessReport& r) {
  return {{"v_y_plus", r.v_y_plus},         {"v_x_minus", r.v_x_minus},
          {"mean_z_plus", r.mean_z_plus},   {"functional", r.functional},
          {"is_tmss", r.is_tmss},           {"raw_v_y_plus", r.raw_v_y_plus},
          {"raw_v_x_minus", r.raw_v_x_minus}};
}

json to_json(const StateClass& c) {
  return {{"tag", std::string(to_string(c.tag))}, {"rank", c.rank}, {"tolerance", c.tolerance_used}};
}

json to_json(const SurveyStats& s) {
  return {{"samples", s.samples},
          {"tmss_count", s.tmss_count},
          {"exceptional_count", s.exceptional_count},
          {"min_functional", s.min_functional},
          {"max_functional", s.max_functional},
          {"max_soundness_gap", s.max_soundness_gap}};
}

json coeffs_json(const RVector& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

// Amplitudes vanish off the canonical diagonal and the diagonal is real,
// nonnegative and nondescending.
bool is_canonical(const BipartiteState& state) {
  const CMatrix& a = state.amplitudes();
  const auto rank = std::min(a.rows(), a.cols());
  const auto off1 = (a.rows() - rank) / 2;
  const auto off2 = (a.cols() - rank) / 2;
  constexpr double eps = 1e-12;
  double previous = 0.0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      const bool diagonal = r - off1 == c - off2 && r - off1 >= 0 && r - off1 < rank;
      if (!diagonal) {
        if (std::abs(a(r, c)) > eps) return false;
        continue;
      }
      if (std::abs(a(r, c).imag()) > eps || a(r, c).real() < -eps || a(r, c).real() < previous - eps) {
        return false;
      }
      previous = a(r, c).real();
    }
  }
  return true;
}

json envelope(const std::string& command, const json& inputs, std::uint64_t seed, json results) {
  json digest_source = inputs;
  digest_source["command"] = command;
  return {{"command", command},
          {"inputs_digest", sha256_hex(canonical_dump(digest_source, -1))},
          {"seed", seed},
          {"results", std::move(results)},
          {"version", kVersion}};
}

void emit(std::ostream& out, const json& doc) { out << canonical_dump(doc) << '\n'; }

void require_json(const GlobalOptions& g, const char* command) {
  if (g.format != "json") {
    throw InputError(std::string("--format ") + g.format + " is not supported by '" + command + "'");
  }
}

int cmd_witness(const GlobalOptions& g, const std::string& path, double class_tol, std::istream& in,
                std::ostream& out) {
  require_json(g, "witness");
  const StateFile file = load_state(path, in);
  const QuantumState state = to_quantum_state(file);
  json results;
  results["witness"] = to_json(witness_report(state, file.j1, file.j2, g.tol));
  const UncertaintyBound b = uncertainty_bound_check(state, file.j1, file.j2);
  results["uncertainty_bound"] = {{"lhs", b.lhs}, {"rhs", b.rhs}};
  const ZeroVarianceCertificate z = zero_variance_certificate(state, file.j1, file.j2, g.tol);
  results["zero_variance"] = {{"is_zero_variance", z.is_zero_variance},
                              {"is_max_entangled", z.is_max_entangled},
                              {"jz_minus_variance", z.jz_minus_variance},
                              {"reduced_state_defect", z.reduced_state_defect},
                              {"implication_holds", z.implication_holds}};
  if (const auto* pure = std::get_if<BipartiteState>(&state)) {
    const SchmidtForm form = schmidt_decompose(*pure);
    results["classification"] = to_json(classify(form, class_tol));
    results["schmidt_coefficients"] = coeffs_json(form.coeffs);
    if (file.j1 == file.j2) {
      results["closed_form_witness"] = closed_form_witness(as_span(form.coeffs), file.j1);
    }
    const bool canonical = is_canonical(*pure);
    results["is_canonical"] = canonical;
    if (canonical) {
      const SymmetryReport s = symmetry_check(*pure);
      results["symmetry"] = {{"max_first_moment", s.max_first_moment},
                             {"variance_gap", s.variance_gap}};
    }
  }
  const json inputs = {{"state", to_json(file)}, {"tol", g.tol}, {"class_tol", class_tol}};
  emit(out, envelope("witness", inputs, g.seed, std::move(results)));
  return kExitOk;
}

int cmd_canonical(const GlobalOptions& g, const std::string& path, double class_tol,
                  std::istream& in, std::ostream& out) {
  require_json(g, "canonical");
  const StateFile file = load_state(path, in);
  if (file.kind != StateKind::Pure) {
    throw InputError("canonical form is defined only for pure states (kind must be \"pure\")");
  }
  const BipartiteState state = std::get<BipartiteState>(to_quantum_state(file));
  const CanonicalResult canon = canonicalize(state);
  json amps = json::array();
  const CVector v = canon.canonical.joint_vector();
  for (Eigen::Index k = 0; k < v.size(); ++k) amps.push_back(complex_to_json(v(k)));
  json results = {{"coefficients", coeffs_json(canon.form.coeffs)},
                  {"residual", canon.form.residual},
                  {"classification", to_json(classify(canon.form, class_tol))},
                  {"u1", matrix_to_json(canon.form.u1)},
                  {"u2", matrix_to_json(canon.form.u2)},
                  {"canonical_amplitudes", std::move(amps)}};
  const json inputs = {{"state", to_json(file)}, {"class_tol", class_tol}};
  emit(out, envelope("canonical", inputs, g.seed, std::move(results)));
  return kExitOk;
}

int cmd_optimize(const GlobalOptions& g, const std::string& path, const std::string& group_name,
                 int restarts, int max_iters, std::istream& in, std::ostream& out) {
  require_json(g, "optimize");
  const LocalGroup group = parse_local_group(group_name);
  const StateFile file = load_state(path, in);
  const QuantumState state = to_quantum_state(file);
  OptimizerConfig config;
  config.restarts = restarts;
  config.max_iters = max_iters;
  config.seed = g.seed;
  const OptResult r = minimize_witness(state, file.j1, file.j2, group, config);

  const UnitaryParametrization p1(group, file.j1);
  const UnitaryParametrization p2(group, file.j2);
  json results = {{"group", std::string(to_string(group))},
                  {"best_functional", r.best_functional},
                  {"best_params_1", r.best_params_1},
                  {"best_params_2", r.best_params_2},
                  {"best_report", to_json(r.best_report)},
                  {"best_restart", r.best_restart},
                  {"iterations_total", r.iterations_total},
                  {"converged", r.converged},
                  {"best_u1", matrix_to_json(p1(r.best_params_1))},
                  {"best_u2", matrix_to_json(p2(r.best_params_2))}};
  if (const auto* pure = std::get_if<BipartiteState>(&state); pure && file.j1 == file.j2) {
    const SchmidtForm form = schmidt_decompose(*pure);
    results["canonical_functional"] = 2.0 * closed_form_witness(as_span(form.coeffs), file.j1);
    results["classification"] = to_json(classify(form));
  }
  const json inputs = {{"state", to_json(file)},
                       {"group", std::string(to_string(group))},
                       {"restarts", restarts},
                       {"max_iters", max_iters}};
  emit(out, envelope("optimize", inputs, g.seed, std::move(results)));
  return kExitOk;
}

int cmd_survey(const GlobalOptions& g, const std::string& j_text, long samples, std::ostream& out) {
  const SpinJ j = SpinJ::parse(j_text);
  if (samples < 1) throw InputError("--samples must be at least 1");
  if (g.format == "csv") {
    out << "index,functional,class\n";
    char buf[64];
    haar_survey(j, samples, g.seed, [&](const SurveyRecord& rec) {
      std::snprintf(buf, sizeof(buf), "%.17g", rec.functional);
      out << rec.index << ',' << buf << ',' << to_string(rec.tag) << '\n';
    });
    return kExitOk;
  }
  require_json(g, "survey");
  const SurveyStats stats = haar_survey(j, samples, g.seed);
  const json inputs = {{"j", j.str()}, {"samples", samples}};
  emit(out, envelope("survey", inputs, g.seed, to_json(stats)));
  return kExitOk;
}

int cmd_counterexamples(const GlobalOptions& g, double werner_alpha, int restarts, int probes,
                        std::ostream& out) {
  require_json(g, "counterexamples");
  OptimizerConfig config;
  config.restarts = restarts;
  config.seed = g.seed;

  const UnequalSpinReport u = unequal_spin_counterexample(config);
  const WernerParams wp{SpinJ::from_twice(1), werner_alpha};
  const WernerFailureReport w = werner_tmss_failure_check(wp, probes, g.seed);
  const RotationReport r = rotation_counterexample(config, probes);

  // alpha = 1 is the maximally entangled pure limit: reported, not failed.
  const bool werner_passed =
      w.maximally_entangled_limit || (w.strict_inequality_holds && w.max_abs_mean_z <= 1e-10);
  const std::string werner_status =
      w.maximally_entangled_limit ? "boundary" : (werner_passed ? "pass" : "fail");

  json results;
  results["unequal_spin"] = {{"reduced1_is_identity", u.reduced1_is_identity},
                             {"reduced1_defect", u.reduced1_defect},
                             {"det_magnitude", u.det_magnitude},
                             {"min_singular_value", u.min_singular_value},
                             {"optimizer_min", u.optimizer_min},
                             {"passed", u.passed}};
  results["werner"] = {{"big_j", wp.big_j.str()},
                       {"alpha", wp.alpha},
                       {"threshold", werner_threshold(wp.big_j)},
                       {"entangled", w.entangled},
                       {"max_abs_mean_z", w.max_abs_mean_z},
                       {"min_variance_sum", w.min_variance_sum},
                       {"strict_inequality_holds", w.strict_inequality_holds},
                       {"maximally_entangled_limit", w.maximally_entangled_limit},
                       {"status", werner_status},
                       {"passed", werner_passed}};
  results["rotation"] = {{"max_single_moment", r.max_single_moment},
                         {"max_first_moment_under_rotations", r.max_first_moment_under_rotations},
                         {"classification", to_json(r.state_class)},
                         {"optimizer_min", r.optimizer_min},
                         {"passed", r.passed}};
  const bool all = u.passed && werner_passed && r.passed;
  results["all_passed"] = all;
  const json inputs = {{"werner_alpha", werner_alpha}, {"restarts", restarts}, {"probes", probes}};
  emit(out, envelope("counterexamples", inputs, g.seed, std::move(results)));
  return all ? kExitOk : kExitFailure;
}

int cmd_selftest(const GlobalOptions& g, const std::string& fault, std::ostream& out) {
  SelftestOptions options;
  options.quick = g.quick;
  options.seed = g.seed;
  if (fault == "coefficient-order") {
    options.fault = SelftestFault::CoefficientOrder;
  } else if (fault != "none") {
    throw InputError("unknown fault '" + fault + "'");
  }
  const std::vector<SelftestRow> rows = run_selftest(options);
  bool all = true;
  for (const auto& row : rows) all = all && row.passed;

  if (g.format == "json") {
    json table = json::array();
    for (const auto& row : rows) {
      table.push_back({{"name", row.name},
                       {"passed", row.passed},
                       {"worst", row.worst},
                       {"tolerance", row.tolerance},
                       {"detail", row.detail}});
    }
    const json inputs = {{"quick", g.quick}, {"fault", fault}};
    emit(out, envelope("selftest", inputs, g.seed, {{"checks", table}, {"all_passed", all}}));
  } else {
    for (const auto& row : rows) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3e", row.worst);
      out << (row.passed ? "PASS " : "FAIL ") << std::left << std::setw(58) << row.name << " worst "
          << buf;
      if (!row.detail.empty()) out << "  (" << row.detail << ')';
      out << '\n';
    }
    out << (all ? "selftest: all checks passed" : "selftest: FAILED") << '\n';
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Two-mode spin squeezing witness toolkit", "tmss"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  GlobalOptions g;
  app.add_option("--tol", g.tol, "Strictness tolerance for the squeezing verdict")->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--quick", g.quick, "Reduced sample counts");
  app.fallthrough();

  std::string path = "-";
  double class_tol = kDefaultClassifyTol;

  auto* witness = app.add_subcommand("witness", "Evaluate the two-mode squeezing criterion");
  witness->add_option("state", path, "State file (- for stdin)")->required();
  witness->add_option("--class-tol", class_tol, "Schmidt classification tolerance");

  auto* canonical = app.add_subcommand("canonical", "Schmidt-canonical form of a pure state");
  canonical->add_option("state", path, "State file (- for stdin)")->required();
  canonical->add_option("--class-tol", class_tol, "Schmidt classification tolerance");

  std::string group = "full";
  int restarts = 32;
  int max_iters = 2000;
  auto* optimize = app.add_subcommand("optimize", "Minimize the witness over local transformations");
  optimize->add_option("state", path, "State file (- for stdin)")->required();
  optimize->add_option("--group", group, "full or rotations")->capture_default_str();
  optimize->add_option("--restarts", restarts)->capture_default_str();
  optimize->add_option("--max-iters", max_iters)->capture_default_str();

  std::string j_text;
  long samples = 1000;
  auto* survey = app.add_subcommand("survey", "Haar-random survey at equal spin j");
  survey->add_option("--j", j_text, "Spin, e.g. 1/2")->required();
  survey->add_option("--samples", samples)->capture_default_str();

  double werner_alpha = 0.5;
  int probes = 100;
  bool json_flag = false;
  auto* counter = app.add_subcommand("counterexamples", "Unequal-spin, Werner and rotation counterexamples");
  counter->add_option("--werner-alpha", werner_alpha)->capture_default_str();
  counter->add_option("--restarts", restarts)->capture_default_str();
  counter->add_option("--probes", probes)->capture_default_str();
  counter->add_flag("--json", json_flag, "JSON envelope output (default)");

  std::string fault = "none";
  auto* selftest = app.add_subcommand("selftest", "Run the invariant battery");
  selftest->add_option("--inject-fault", fault, "Testing aid: none or coefficient-order")
      ->capture_default_str();

  std::vector<const char*> argv{"tmss"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*witness) return cmd_witness(g, path, class_tol, in, out);
    if (*canonical) return cmd_canonical(g, path, class_tol, in, out);
    if (*optimize) return cmd_optimize(g, path, group, restarts, max_iters, in, out);
    if (*survey) return cmd_survey(g, j_text, samples, out);
    if (*counter) return cmd_counterexamples(g, werner_alpha, restarts, probes, out);
    if (*selftest) {
      // The table is the natural selftest output; JSON only on request.
      GlobalOptions local = g;
      if (app.get_option("--format")->count() == 0) local.format = "table";
      return cmd_selftest(local, fault, out);
    }
  } catch (const InputError& e) {
    err << "tmss: input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "tmss: numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "tmss: numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInput;
}

}  // namespace tmss
