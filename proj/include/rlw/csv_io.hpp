#pragma once

#include <string>

#include "rlw/harness.hpp"

namespace rlw {

// Scientific notation with 16 significant digits; "nan" for NaN.
std::string format_sci(double v);

// Writes solution_<t>.csv, invariants.csv and (when the scenario has an exact
// solution) errors.csv into out_dir, plus gnuplot scripts on request. Headers
// are always written, even for empty bundles.
void emit_results(const ScenarioResult& result, const std::string& out_dir, bool emit_plots);

// Writes convergence.csv (and convergence.gp on request).
void emit_convergence(const ConvergenceTable& table, const std::string& out_dir,
                      bool emit_plots);

}  // namespace rlw
