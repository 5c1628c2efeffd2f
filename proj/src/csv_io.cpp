#include "rlw/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rlw/errors.hpp"

namespace rlw {

namespace {

std::ofstream open_file(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::string format_sci(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15e", v);
  return buf;
}

void emit_results(const ScenarioResult& result, const std::string& out_dir, bool emit_plots) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);

  std::vector<std::string> snapshot_files;
  for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
    const std::string name = "solution_" + time_tag(result.snapshot_times[i]) + ".csv";
    snapshot_files.push_back(name);
    const auto path = dir / name;
    auto out = open_file(path);
    out << "x,u\n";
    const GridFunction& u = result.snapshots[i];
    for (int j = 0; j < u.size(); ++j) {
      out << format_sci(result.grid.nodes[j]) << "," << format_sci(u[j]) << "\n";
    }
    finish(out, path);
  }

  {
    const auto path = dir / "invariants.csv";
    auto out = open_file(path);
    out << "t,I1h,I2h,I3h,RI1,RI2,RI3\n";
    for (std::size_t i = 0; i < result.invariants.size(); ++i) {
      const InvariantRecord& rec = result.invariants[i];
      const RelativeDrift& d = result.drifts[i];
      out << format_sci(rec.time) << "," << format_sci(rec.mass_h) << ","
          << format_sci(rec.momentum_h) << "," << format_sci(rec.energy_h) << ","
          << format_sci(d.ri1) << "," << format_sci(d.ri2) << "," << format_sci(d.ri3) << "\n";
    }
    finish(out, path);
  }

  if (result.scenario.exact_available) {
    const auto path = dir / "errors.csv";
    auto out = open_file(path);
    out << "t,l2,linf\n";
    for (const ErrorReport& e : result.errors) {
      out << format_sci(e.at_time) << "," << format_sci(e.l2_error) << ","
          << format_sci(e.linf_error) << "\n";
    }
    finish(out, path);
  }

  if (emit_plots) {
    {
      const auto path = dir / "invariants.gp";
      auto out = open_file(path);
      out << "set datafile separator \",\"\n"
          << "set logscale y\n"
          << "set xlabel \"t\"\n"
          << "set ylabel \"relative drift\"\n"
          << "plot \"invariants.csv\" using 1:5 with lines title \"RI1\", \\\n"
          << "     \"invariants.csv\" using 1:6 with lines title \"RI2\", \\\n"
          << "     \"invariants.csv\" using 1:7 with lines title \"RI3\"\n";
      finish(out, path);
    }
    {
      const auto path = dir / "solution.gp";
      auto out = open_file(path);
      out << "set datafile separator \",\"\n"
          << "set xlabel \"x\"\n"
          << "set ylabel \"u\"\n";
      if (!snapshot_files.empty()) {
        out << "plot ";
        for (std::size_t i = 0; i < snapshot_files.size(); ++i) {
          out << (i == 0 ? "" : ", \\\n     ") << "\"" << snapshot_files[i]
              << "\" using 1:2 with lines title \"t=" << time_tag(result.snapshot_times[i])
              << "\"";
        }
        out << "\n";
      }
      finish(out, path);
    }
    if (result.scenario.exact_available) {
      const auto path = dir / "errors.gp";
      auto out = open_file(path);
      out << "set datafile separator \",\"\n"
          << "set logscale y\n"
          << "set xlabel \"t\"\n"
          << "plot \"errors.csv\" using 1:2 with lines title \"L2\", \\\n"
          << "     \"errors.csv\" using 1:3 with lines title \"Linf\"\n";
      finish(out, path);
    }
  }
}

void emit_convergence(const ConvergenceTable& table, const std::string& out_dir,
                      bool emit_plots) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / "convergence.csv";
  auto out = open_file(path);
  out << "delta,l2,linf,order_l2,order_linf\n";
  for (const ConvergenceRow& row : table.rows) {
    out << format_sci(row.delta) << "," << format_sci(row.l2_error) << ","
        << format_sci(row.linf_error) << "," << format_sci(row.order_l2) << ","
        << format_sci(row.order_linf) << "\n";
  }
  finish(out, path);

  if (emit_plots) {
    const auto gp = dir / "convergence.gp";
    auto gout = open_file(gp);
    gout << "set datafile separator \",\"\n"
         << "set logscale xy\n"
         << "set xlabel \"" << (table.axis == RefinementAxis::Time ? "tau" : "h") << "\"\n"
         << "set ylabel \"error\"\n"
         << "plot \"convergence.csv\" using 1:2 with linespoints title \"L2\", \\\n"
         << "     \"convergence.csv\" using 1:3 with linespoints title \"Linf\"\n";
    finish(gout, gp);
  }
}

}  // namespace rlw
