// pyrlw: python bindings for the RLW pseudo-spectral solver core.

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rlw/csv_io.hpp"
#include "rlw/errors.hpp"
#include "rlw/harness.hpp"
#include "rlw/invariants.hpp"
#include "rlw/linear_solver.hpp"
#include "rlw/model.hpp"
#include "rlw/run_config.hpp"
#include "rlw/steppers.hpp"

namespace py = pybind11;
using namespace rlw;

PYBIND11_MODULE(pyrlw, m) {
  m.doc() = "Momentum-preserving Fourier pseudo-spectral schemes for the RLW equation";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<NumericsError>(m, "NumericsError", PyExc_ArithmeticError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<StartupError>(m, "StartupError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Grid>(m, "Grid")
      .def_readonly("x_left", &Grid::x_left)
      .def_readonly("x_right", &Grid::x_right)
      .def_readonly("n_points", &Grid::n_points)
      .def_readonly("h", &Grid::h)
      .def_readonly("mu", &Grid::mu)
      .def_readonly("nodes", &Grid::nodes)
      .def_property_readonly("length", &Grid::length);
  m.def("make_grid", &make_grid, py::arg("x_left"), py::arg("x_right"), py::arg("n_points"));

  m.def("inner_product_h", &inner_product_h);
  m.def("norm_h", &norm_h);
  m.def("forward_difference", &forward_difference);

  py::class_<SpectralOperators>(m, "SpectralOperators")
      .def(py::init<Grid>(), py::arg("grid"))
      .def_property_readonly("grid", &SpectralOperators::grid,
                             py::return_value_policy::reference_internal)
      .def("derivative", &SpectralOperators::derivative, py::arg("u"), py::arg("order"))
      .def("helmholtz_inverse", &SpectralOperators::helmholtz_inverse, py::arg("u"),
           py::arg("sigma"));
  m.def("dense_diff_matrix", &dense_diff_matrix, py::arg("ops"), py::arg("order"));

  py::class_<Norms>(m, "Norms")
      .def_readonly("l2_h", &Norms::l2_h)
      .def_readonly("seminorm_h", &Norms::seminorm_h)
      .def_readonly("fwd_diff_h", &Norms::fwd_diff_h)
      .def_readonly("linf_h", &Norms::linf_h);
  m.def("norms", &norms, py::arg("ops"), py::arg("u"));

  py::class_<RlwParams>(m, "RlwParams")
      .def(py::init([](double a, double sigma, double gamma) {
             RlwParams p{a, sigma, gamma};
             validate(p);
             return p;
           }),
           py::arg("a") = 1.0, py::arg("sigma") = 1.0, py::arg("gamma") = 1.0)
      .def_readonly("a", &RlwParams::a)
      .def_readonly("sigma", &RlwParams::sigma)
      .def_readonly("gamma", &RlwParams::gamma);

  py::class_<SolitonSpec>(m, "SolitonSpec")
      .def(py::init([](double c, double x0) {
             return SolitonSpec{c, x0};
           }),
           py::arg("c"), py::arg("x0") = 0.0)
      .def_readonly("c", &SolitonSpec::c)
      .def_readonly("x0", &SolitonSpec::x0)
      .def("wavenumber", &SolitonSpec::wavenumber)
      .def("speed", &SolitonSpec::speed);

  py::class_<TwoSolitonSpec>(m, "TwoSolitonSpec")
      .def(py::init([](double c1, double c2, double x1, double x2) {
             return TwoSolitonSpec{c1, c2, x1, x2};
           }),
           py::arg("c1"), py::arg("c2"), py::arg("x1"), py::arg("x2"))
      .def_readonly("c1", &TwoSolitonSpec::c1)
      .def_readonly("c2", &TwoSolitonSpec::c2)
      .def_readonly("x1", &TwoSolitonSpec::x1)
      .def_readonly("x2", &TwoSolitonSpec::x2)
      .def("m1", &TwoSolitonSpec::m1)
      .def("m2", &TwoSolitonSpec::m2);

  py::class_<MaxwellianSpec>(m, "MaxwellianSpec")
      .def(py::init([](double center) {
             return MaxwellianSpec{center};
           }),
           py::arg("center") = 7.0)
      .def_readonly("center", &MaxwellianSpec::center);

  py::class_<InitialCondition>(m, "InitialCondition")
      .def_static("single_soliton", &InitialCondition::single_soliton)
      .def_static("two_soliton", &InitialCondition::two_soliton)
      .def_static("maxwellian", &InitialCondition::maxwellian)
      .def("__call__", &InitialCondition::operator());

  m.def("exact_soliton", &exact_soliton, py::arg("params"), py::arg("spec"), py::arg("x"),
        py::arg("t"));
  m.def("initial_profile", &initial_profile, py::arg("ic"), py::arg("grid"));
  m.def("apply_nonlinear_operator", &apply_nonlinear_operator, py::arg("params"), py::arg("ops"),
        py::arg("w"), py::arg("v"));

  py::enum_<SolverMode>(m, "SolverMode")
      .value("krylov", SolverMode::Krylov)
      .value("direct_dense", SolverMode::DirectDense);

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init([](SolverMode mode, double rel_tol, int max_iters, double startup_tol,
                       int startup_max_iters) {
             SolverConfig cfg{mode, rel_tol, max_iters, startup_tol, startup_max_iters};
             validate(cfg);
             return cfg;
           }),
           py::arg("mode") = SolverMode::Krylov, py::arg("rel_tol") = 1e-12,
           py::arg("max_iters") = 500, py::arg("startup_tol") = 1e-13,
           py::arg("startup_max_iters") = 100)
      .def_readonly("mode", &SolverConfig::mode)
      .def_readonly("rel_tol", &SolverConfig::rel_tol)
      .def_readonly("max_iters", &SolverConfig::max_iters)
      .def_readonly("startup_tol", &SolverConfig::startup_tol)
      .def_readonly("startup_max_iters", &SolverConfig::startup_max_iters);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("x", &SolveResult::x)
      .def_readonly("rel_residual", &SolveResult::rel_residual)
      .def_readonly("iterations", &SolveResult::iterations);
  m.def("solve_linear", &solve_linear, py::arg("params"), py::arg("ops"), py::arg("w"),
        py::arg("alpha"), py::arg("rhs"), py::arg("config") = SolverConfig{});
  m.def("apply_system", &apply_system);

  py::enum_<Scheme>(m, "Scheme")
      .value("lcn_mp", Scheme::LcnMp)
      .value("llf_mp", Scheme::LlfMp);

  m.def("startup_step", &startup_step, py::arg("u0"), py::arg("params"), py::arg("ops"),
        py::arg("tau"), py::arg("config") = SolverConfig{});
  m.def("integrate", &integrate, py::arg("u0"), py::arg("params"), py::arg("ops"),
        py::arg("scheme"), py::arg("tau"), py::arg("n_steps"),
        py::arg("config") = SolverConfig{}, py::arg("observer") = StepObserver{});

  py::class_<InvariantRecord>(m, "InvariantRecord")
      .def_readonly("time", &InvariantRecord::time)
      .def_readonly("mass_h", &InvariantRecord::mass_h)
      .def_readonly("momentum_h", &InvariantRecord::momentum_h)
      .def_readonly("energy_h", &InvariantRecord::energy_h);
  m.def("compute_invariants", &compute_invariants, py::arg("params"), py::arg("ops"),
        py::arg("u"), py::arg("t") = 0.0);
  m.def("momentum_nodal_sum", &momentum_nodal_sum);

  py::class_<RelativeDrift>(m, "RelativeDrift")
      .def_readonly("ri1", &RelativeDrift::ri1)
      .def_readonly("ri2", &RelativeDrift::ri2)
      .def_readonly("ri3", &RelativeDrift::ri3)
      .def_readonly("absolute1", &RelativeDrift::absolute1)
      .def_readonly("absolute2", &RelativeDrift::absolute2)
      .def_readonly("absolute3", &RelativeDrift::absolute3);
  m.def("relative_drift", &relative_drift, py::arg("current"), py::arg("initial"));
  m.def("analytic_two_soliton_momentum", &analytic_two_soliton_momentum, py::arg("spec"),
        py::arg("sigma"), py::arg("gamma") = 1.0);

  py::class_<ErrorReport>(m, "ErrorReport")
      .def_readonly("l2_error", &ErrorReport::l2_error)
      .def_readonly("linf_error", &ErrorReport::linf_error)
      .def_readonly("at_time", &ErrorReport::at_time);
  m.def("error_norms", &error_norms, py::arg("numeric"), py::arg("exact"), py::arg("grid"),
        py::arg("t"));

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("name", &Scenario::name)
      .def_readonly("params", &Scenario::params)
      .def_readonly("x_left", &Scenario::x_left)
      .def_readonly("x_right", &Scenario::x_right)
      .def_readonly("n_points", &Scenario::n_points)
      .def_readonly("tau", &Scenario::tau)
      .def_readonly("t_final", &Scenario::t_final)
      .def_readonly("scheme", &Scenario::scheme)
      .def_readonly("record_every", &Scenario::record_every)
      .def_readonly("exact_available", &Scenario::exact_available)
      .def("n_steps", &Scenario::n_steps);
  m.def("preset_scenario", &preset_scenario, py::arg("name"), py::arg("scheme"));
  m.def("preset_names", &preset_names);
  m.def("parse_config", [](const std::string& text) {
    return parse_run_config(text).make_scenario();
  });

  py::class_<ScenarioResult>(m, "ScenarioResult")
      .def_readonly("grid", &ScenarioResult::grid)
      .def_readonly("snapshot_times", &ScenarioResult::snapshot_times)
      .def_readonly("snapshots", &ScenarioResult::snapshots)
      .def_readonly("invariants", &ScenarioResult::invariants)
      .def_readonly("drifts", &ScenarioResult::drifts)
      .def_readonly("errors", &ScenarioResult::errors)
      .def_readonly("cpu_seconds", &ScenarioResult::cpu_seconds);
  m.def("run_scenario", &run_scenario, py::arg("scenario"));

  py::enum_<RefinementAxis>(m, "RefinementAxis")
      .value("time", RefinementAxis::Time)
      .value("space", RefinementAxis::Space);

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("delta", &ConvergenceRow::delta)
      .def_readonly("l2_error", &ConvergenceRow::l2_error)
      .def_readonly("linf_error", &ConvergenceRow::linf_error)
      .def_readonly("order_l2", &ConvergenceRow::order_l2)
      .def_readonly("order_linf", &ConvergenceRow::order_linf);
  py::class_<ConvergenceTable>(m, "ConvergenceTable")
      .def_readonly("axis", &ConvergenceTable::axis)
      .def_readonly("rows", &ConvergenceTable::rows);
  m.def("convergence_study", &convergence_study, py::arg("base"), py::arg("axis"),
        py::arg("refinements"));
  m.def("default_refinements", &default_refinements, py::arg("axis"));
  m.def("observed_order", &observed_order);
  m.def("count_peaks", &count_peaks, py::arg("u"), py::arg("min_height"),
        py::arg("min_prominence"));

  m.def("emit_results", &emit_results, py::arg("result"), py::arg("out_dir"),
        py::arg("emit_plots") = false);
  m.def("emit_convergence", &emit_convergence, py::arg("table"), py::arg("out_dir"),
        py::arg("emit_plots") = false);
}
