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
#include "tmss/spin_core.hpp"
#include "tmss/witness.hpp"

#include "pybind11/complex.h"
#include "pybind11/eigen.h"
#include "pybind11/functional.h"
#include "pybind11/operators.h"
#include "pybind11/pybind11.h"
#include "pybind11/stl.h"

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace tmss;

namespace {

OptimizerConfig make_config(int restarts, int max_iters, std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.max_iters = max_iters;
  cfg.seed = seed;
  return cfg;
}

void bind_spin_core(py::module_& m) {
  py::class_<SpinJ>(m, "SpinJ", "Spin quantum number j, stored as 2j")
      .def(py::init(&SpinJ::parse), py::arg("text"), "parse \"1/2\", \"1\", \"3/2\", ...")
      .def(py::init(&SpinJ::from_twice), py::arg("twice_j"))
      .def_static("from_twice", &SpinJ::from_twice, py::arg("twice_j"))
      .def_property_readonly("twice_j", &SpinJ::twice_j)
      .def_property_readonly("dim", &SpinJ::dim)
      .def_property_readonly("value", &SpinJ::value)
      .def_property_readonly("casimir", &SpinJ::casimir)
      .def("m", &SpinJ::m, py::arg("index"), "magnetic quantum number at basis index (0 is m = -j)")
      .def("__str__", &SpinJ::str)
      .def("__repr__", [](const SpinJ& j) { return "SpinJ('" + j.str() + "')"; })
      .def(py::self == py::self)
      .def("__hash__", [](const SpinJ& j) { return py::hash(py::int_(j.twice_j())); });
  py::implicitly_convertible<std::string, SpinJ>();
  py::implicitly_convertible<int, SpinJ>();

  m.def(
      "spin_matrices",
      [](SpinJ j) {
        const SpinMatrices s = spin_matrices(j);
        return std::make_tuple(s.x.matrix(), s.y.matrix(), s.z.matrix());
      },
      py::arg("j"), "(Jx, Jy, Jz) in the Jz eigenbasis ordered m = -j .. j");
  m.def(
      "two_mode_operator",
      [](const std::string& axis, int sign, SpinJ j1, SpinJ j2) {
        if (axis.size() != 1 || std::string("xyz").find(axis) == std::string::npos)
          throw py::value_error("axis must be 'x', 'y' or 'z'");
        if (sign != 1 && sign != -1) throw py::value_error("sign must be +1 or -1");
        const Axis a = axis == "x" ? Axis::X : axis == "y" ? Axis::Y : Axis::Z;
        return two_mode_operator(a, sign > 0 ? Sign::Plus : Sign::Minus, j1, j2).matrix();
      },
      py::arg("axis"), py::arg("sign"), py::arg("j1"), py::arg("j2"), "J_k^(1) +/- J_k^(2) on the joint space");

  py::class_<BipartiteState>(m, "BipartiteState", "pure state with amplitude matrix A[i1, i2]")
      .def(py::init<SpinJ, SpinJ, CMatrix>(), py::arg("j1"), py::arg("j2"), py::arg("amplitudes"))
      .def_static("basis", &BipartiteState::basis, py::arg("j1"), py::arg("j2"), py::arg("m1"), py::arg("m2"))
      .def_property_readonly("j1", &BipartiteState::j1)
      .def_property_readonly("j2", &BipartiteState::j2)
      .def_property_readonly("amplitudes", &BipartiteState::amplitudes)
      .def_property_readonly("joint_vector", &BipartiteState::joint_vector);

  py::class_<DensityMatrix>(m, "DensityMatrix", "validated mixed state on the joint space")
      .def(py::init<CMatrix>(), py::arg("entries"))
      .def_static("from_pure", &DensityMatrix::from_pure, py::arg("state"))
      .def_property_readonly("matrix", &DensityMatrix::matrix);

  m.def("haar_random_pure", &haar_random_pure, py::arg("j1"), py::arg("j2"), py::arg("seed"));
  m.def(
      "partial_trace", [](const BipartiteState& s, int keep) { return partial_trace(s, keep).matrix(); },
      py::arg("state"), py::arg("keep"));
}

void bind_schmidt(py::module_& m) {
  py::enum_<StateClassTag>(m, "StateClassTag")
      .value("Generic", StateClassTag::Generic)
      .value("Product", StateClassTag::Product)
      .value("MaxEntangledFull", StateClassTag::MaxEntangledFull)
      .value("MaxEntangledSubspace", StateClassTag::MaxEntangledSubspace);

  py::class_<SchmidtForm>(m, "SchmidtForm")
      .def_readonly("coeffs", &SchmidtForm::coeffs)
      .def_readonly("u1", &SchmidtForm::u1)
      .def_readonly("u2", &SchmidtForm::u2)
      .def_readonly("residual", &SchmidtForm::residual);

  py::class_<StateClass>(m, "StateClass")
      .def_readonly("tag", &StateClass::tag)
      .def_readonly("rank", &StateClass::rank)
      .def_readonly("tolerance_used", &StateClass::tolerance_used);

  m.def("schmidt_decompose", &schmidt_decompose, py::arg("state"));
  m.def(
      "canonicalize",
      [](const BipartiteState& s) {
        CanonicalResult r = canonicalize(s);
        return std::make_tuple(r.canonical, r.form);
      },
      py::arg("state"), "(canonical_state, schmidt_form)");
  m.def(
      "canonical_state",
      [](SpinJ j1, SpinJ j2, const std::vector<double>& coeffs) { return canonical_state(j1, j2, coeffs); },
      py::arg("j1"), py::arg("j2"), py::arg("coeffs"));
  m.def(
      "classify", [](const std::vector<double>& coeffs, double tol) { return classify(coeffs, tol); },
      py::arg("coeffs"), py::arg("tol") = kDefaultClassifyTol);
}

void bind_witness(py::module_& m) {
  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("v_y_plus", &WitnessReport::v_y_plus)
      .def_readonly("v_x_minus", &WitnessReport::v_x_minus)
      .def_readonly("mean_z_plus", &WitnessReport::mean_z_plus)
      .def_readonly("functional", &WitnessReport::functional)
      .def_readonly("is_tmss", &WitnessReport::is_tmss)
      .def("__repr__", [](const WitnessReport& r) {
        std::ostringstream os;
        os << "WitnessReport(functional=" << r.functional << ", is_tmss=" << (r.is_tmss ? "True" : "False") << ")";
        return os.str();
      });

  py::class_<CanonicalMoments>(m, "CanonicalMoments")
      .def_readonly("jx1_sq", &CanonicalMoments::jx1_sq)
      .def_readonly("jx1_jx2", &CanonicalMoments::jx1_jx2)
      .def_readonly("half_jz_plus", &CanonicalMoments::half_jz_plus);

  m.def(
      "witness_report", [](const BipartiteState& s, double tol) { return witness_report(s, tol); },
      py::arg("state"), py::arg("tol") = kStrictnessTol);
  m.def(
      "witness_report",
      [](const DensityMatrix& rho, SpinJ j1, SpinJ j2, double tol) { return witness_report(rho, j1, j2, tol); },
      py::arg("state"), py::arg("j1"), py::arg("j2"), py::arg("tol") = kStrictnessTol);
  m.def(
      "closed_form_witness",
      [](const std::vector<double>& coeffs, SpinJ j) { return closed_form_witness(coeffs, j); },
      py::arg("coeffs"), py::arg("j"), "sum_m (psi_m - psi_{m+1}) psi_m [j(j+1) - m(m+1)]");
  m.def(
      "canonical_moment_terms",
      [](const std::vector<double>& coeffs, SpinJ j) { return canonical_moment_terms(coeffs, j); },
      py::arg("coeffs"), py::arg("j"));
}

void bind_optimizer(py::module_& m) {
  py::class_<OptResult>(m, "OptResult")
      .def_readonly("best_functional", &OptResult::best_functional)
      .def_readonly("best_params_1", &OptResult::best_params_1)
      .def_readonly("best_params_2", &OptResult::best_params_2)
      .def_readonly("best_report", &OptResult::best_report)
      .def_readonly("iterations_total", &OptResult::iterations_total)
      .def_readonly("converged", &OptResult::converged)
      .def_readonly("best_restart", &OptResult::best_restart);

  m.def(
      "make_unitary",
      [](const std::string& group, const std::vector<double>& params, SpinJ j) {
        return make_unitary(parse_local_group(group), params, j).matrix();
      },
      py::arg("group"), py::arg("params"), py::arg("j"));
  m.def(
      "minimize_witness",
      [](const BipartiteState& s, const std::string& group, int restarts, int max_iters, std::uint64_t seed) {
        return minimize_witness(s, parse_local_group(group), make_config(restarts, max_iters, seed));
      },
      py::arg("state"), py::arg("group") = "full", py::arg("restarts") = 32, py::arg("max_iters") = 2000,
      py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());
  m.def(
      "minimize_witness",
      [](const DensityMatrix& rho, SpinJ j1, SpinJ j2, const std::string& group, int restarts, int max_iters,
         std::uint64_t seed) {
        return minimize_witness(rho, j1, j2, parse_local_group(group), make_config(restarts, max_iters, seed));
      },
      py::arg("state"), py::arg("j1"), py::arg("j2"), py::arg("group") = "full", py::arg("restarts") = 32,
      py::arg("max_iters") = 2000, py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());
}

void bind_scenarios(py::module_& m) {
  m.def(
      "werner_state", [](SpinJ big_j, double alpha) { return werner_state({big_j, alpha}); }, py::arg("big_j"),
      py::arg("alpha"));
  m.def("werner_threshold", &werner_threshold, py::arg("big_j"));
  m.def("maximally_entangled_state", &maximally_entangled_state, py::arg("j"));

  py::class_<WernerFailureReport>(m, "WernerFailureReport")
      .def_readonly("max_abs_mean_z", &WernerFailureReport::max_abs_mean_z)
      .def_readonly("min_variance_sum", &WernerFailureReport::min_variance_sum)
      .def_readonly("strict_inequality_holds", &WernerFailureReport::strict_inequality_holds)
      .def_readonly("entangled", &WernerFailureReport::entangled);
  m.def(
      "werner_failure_check",
      [](SpinJ big_j, double alpha, int probes, std::uint64_t seed) {
        return werner_tmss_failure_check({big_j, alpha}, probes, seed);
      },
      py::arg("big_j"), py::arg("alpha"), py::arg("probes") = 100, py::arg("seed") = 0);

  py::class_<UnequalSpinReport>(m, "UnequalSpinReport")
      .def_readonly("state", &UnequalSpinReport::state)
      .def_readonly("reduced1_is_identity", &UnequalSpinReport::reduced1_is_identity)
      .def_readonly("det_magnitude", &UnequalSpinReport::det_magnitude)
      .def_readonly("min_singular_value", &UnequalSpinReport::min_singular_value)
      .def_readonly("optimizer_min", &UnequalSpinReport::optimizer_min)
      .def_readonly("passed", &UnequalSpinReport::passed);
  m.def(
      "unequal_spin_counterexample",
      [](int restarts, std::uint64_t seed) { return unequal_spin_counterexample(make_config(restarts, 2000, seed)); },
      py::arg("restarts") = 32, py::arg("seed") = 0);

  py::class_<RotationReport>(m, "RotationReport")
      .def_readonly("state", &RotationReport::state)
      .def_readonly("max_single_moment", &RotationReport::max_single_moment)
      .def_readonly("max_first_moment_under_rotations", &RotationReport::max_first_moment_under_rotations)
      .def_readonly("state_class", &RotationReport::state_class)
      .def_readonly("optimizer_min", &RotationReport::optimizer_min)
      .def_readonly("passed", &RotationReport::passed);
  m.def(
      "rotation_counterexample",
      [](int restarts, int probes, std::uint64_t seed) {
        return rotation_counterexample(make_config(restarts, 2000, seed), probes);
      },
      py::arg("restarts") = 32, py::arg("probes") = 100, py::arg("seed") = 0);

  py::class_<SurveyStats>(m, "SurveyStats")
      .def_readonly("samples", &SurveyStats::samples)
      .def_readonly("tmss_count", &SurveyStats::tmss_count)
      .def_readonly("exceptional_count", &SurveyStats::exceptional_count)
      .def_readonly("min_functional", &SurveyStats::min_functional)
      .def_readonly("max_functional", &SurveyStats::max_functional)
      .def_readonly("max_soundness_gap", &SurveyStats::max_soundness_gap);
  m.def(
      "haar_survey",
      [](SpinJ j, long samples, std::uint64_t seed) {
        std::vector<double> functionals;
        functionals.reserve(samples > 0 ? static_cast<std::size_t>(samples) : 0);
        const SurveyStats stats =
            haar_survey(j, samples, seed, [&](const SurveyRecord& r) { functionals.push_back(r.functional); });
        return std::make_tuple(stats, functionals);
      },
      py::arg("j"), py::arg("samples"), py::arg("seed") = 0, "(stats, per-sample functionals)");
}

void bind_app(py::module_& m) {
  py::class_<SelftestRow>(m, "SelftestRow")
      .def_readonly("name", &SelftestRow::name)
      .def_readonly("passed", &SelftestRow::passed)
      .def_readonly("worst", &SelftestRow::worst)
      .def_readonly("tolerance", &SelftestRow::tolerance)
      .def_readonly("detail", &SelftestRow::detail);
  m.def(
      "selftest",
      [](bool quick, std::uint64_t seed) {
        SelftestOptions opts;
        opts.quick = quick;
        opts.seed = seed;
        return run_selftest(opts);
      },
      py::arg("quick") = true, py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, in, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "", "(exit_code, stdout, stderr) of the command-line tool");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "two-mode spin-squeezing certification for bipartite spin states";
  m.attr("__version__") = kVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  bind_spin_core(m);
  bind_schmidt(m);
  bind_witness(m);
  bind_optimizer(m);
  bind_scenarios(m);
  bind_app(m);
}
