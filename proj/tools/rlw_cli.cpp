// Command-line front end: scenario runs, invariant tracking, convergence
// studies and the canned error-table reproductions.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rlw/csv_io.hpp"
#include "rlw/errors.hpp"
#include "rlw/harness.hpp"
#include "rlw/run_config.hpp"

using namespace rlw;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void print_drift_summary(const ScenarioResult& r) {
  double ri1 = 0.0, ri2 = 0.0, ri3 = 0.0;
  for (const RelativeDrift& d : r.drifts) {
    ri1 = std::max(ri1, d.ri1);
    ri2 = std::max(ri2, d.ri2);
    ri3 = std::max(ri3, d.ri3);
  }
  std::printf("max relative drifts: mass %.3e, momentum %.3e, energy %.3e\n", ri1, ri2, ri3);
  if (!r.errors.empty()) {
    const ErrorReport& e = r.errors.back();
    std::printf("errors at t=%g: L2 %.3e, Linf %.3e\n", e.at_time, e.l2_error, e.linf_error);
  }
  std::printf("wall time: %.2f s\n", r.cpu_seconds);
}

int cmd_run(const std::string& config_path, bool force_plots, bool invariants_only) {
  const RunConfig cfg = parse_run_config(read_file(config_path));
  Scenario scenario = cfg.make_scenario();
  ScenarioResult result = run_scenario(scenario);
  if (invariants_only) {
    result.snapshots.clear();
    result.snapshot_times.clear();
    result.errors.clear();
    result.scenario.exact_available = false;
  }
  emit_results(result, cfg.directory, cfg.emit_plots || force_plots);
  std::printf("wrote results to %s\n", cfg.directory.c_str());
  print_drift_summary(result);
  return 0;
}

int cmd_converge(const std::string& config_path, const std::string& axis_name,
                 const std::string& refinement_list, bool force_plots) {
  const RunConfig cfg = parse_run_config(read_file(config_path));
  const Scenario base = cfg.make_scenario();
  const RefinementAxis axis =
      axis_name == "time" ? RefinementAxis::Time : RefinementAxis::Space;

  std::vector<double> refinements;
  if (refinement_list.empty()) {
    refinements = default_refinements(axis);
  } else {
    std::istringstream in(refinement_list);
    std::string item;
    while (std::getline(in, item, ',')) refinements.push_back(std::stod(item));
  }

  const ConvergenceTable table = convergence_study(base, axis, refinements);
  emit_convergence(table, cfg.directory, cfg.emit_plots || force_plots);

  std::printf("%12s %14s %14s %10s %10s\n", axis == RefinementAxis::Time ? "tau" : "h", "L2",
              "Linf", "order_L2", "order_Linf");
  for (const ConvergenceRow& row : table.rows) {
    std::printf("%12.6g %14.6e %14.6e %10.3f %10.3f\n", row.delta, row.l2_error, row.linf_error,
                row.order_l2, row.order_linf);
  }
  std::printf("wrote %s/convergence.csv\n", cfg.directory.c_str());
  return 0;
}

struct PublishedRow {
  const char* method;
  std::vector<double> l2;
  std::vector<double> linf;
};

void write_table_csv(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const std::string& line : lines) out << line << "\n";
}

int cmd_table2(const std::string& out_dir) {
  // published single-soliton error norms at tau=0.05, h=0.1, T=25/50/75
  const std::vector<PublishedRow> published_c13 = {
      {"ELMP-I", {3.02e-3, 4.51e-3, 5.85e-3}, {1.27e-3, 1.83e-3, 2.35e-3}},
      {"ELMP-II", {2.14e-3, 3.70e-3, 5.19e-3}, {8.67e-4, 1.44e-3, 2.00e-3}},
      {"ILMP-I", {2.49e-4, 3.50e-4, 4.71e-4}, {6.64e-5, 1.12e-4, 1.67e-4}},
      {"ILMP-II", {5.00e-3, 8.18e-3, 1.12e-2}, {2.10e-3, 3.28e-3, 4.43e-3}},
  };
  const std::vector<PublishedRow> published_c12 = {
      {"ELMP-I", {6.44e-3, 9.83e-3, 1.33e-2}, {2.85e-3, 4.26e-3, 5.67e-3}},
      {"ELMP-II", {3.61e-3, 6.69e-3, 9.76e-3}, {1.48e-3, 2.71e-3, 3.94e-3}},
      {"ILMP-I", {1.37e-3, 2.89e-3, 4.42e-3}, {5.58e-4, 1.17e-3, 1.79e-3}},
      {"ILMP-II", {1.11e-2, 1.91e-2, 2.72e-2}, {4.84e-3, 8.08e-3, 1.13e-2}},
  };

  std::vector<std::string> csv;
  csv.push_back("method,c,norm,T25,T50,T75,source");
  std::printf("single solitary wave, tau=0.05, h=0.1, domain [-60,200]\n");
  std::printf("%-10s %-6s %-6s %12s %12s %12s  %s\n", "method", "c", "norm", "T=25", "T=50",
              "T=75", "source");

  const auto emit_row = [&](const char* method, const char* c_label, const char* norm,
                            const std::vector<double>& vals, const char* source) {
    std::printf("%-10s %-6s %-6s %12.3e %12.3e %12.3e  %s\n", method, c_label, norm, vals[0],
                vals[1], vals[2], source);
    std::ostringstream line;
    line << method << "," << c_label << "," << norm;
    for (double v : vals) line << "," << format_sci(v);
    line << "," << source;
    csv.push_back(line.str());
  };

  const struct {
    const char* preset;
    const char* c_label;
    const std::vector<PublishedRow>* published;
  } groups[] = {{"table2_c13", "1/3", &published_c13}, {"table2_c12", "1/2", &published_c12}};

  for (const auto& group : groups) {
    for (const PublishedRow& row : *group.published) {
      emit_row(row.method, group.c_label, "L2", row.l2, "published");
      emit_row(row.method, group.c_label, "Linf", row.linf, "published");
    }
    for (Scheme scheme : {Scheme::LcnMp, Scheme::LlfMp}) {
      const ScenarioResult r = run_scenario(preset_scenario(group.preset, scheme));
      std::vector<double> l2, linf;
      for (const ErrorReport& e : r.errors) {
        if (e.at_time < 1.0) continue;  // skip t=0
        l2.push_back(e.l2_error);
        linf.push_back(e.linf_error);
      }
      const char* name = scheme == Scheme::LcnMp ? "LCN-MP" : "LLF-MP";
      emit_row(name, group.c_label, "L2", l2, "computed");
      emit_row(name, group.c_label, "Linf", linf, "computed");
    }
  }

  std::filesystem::create_directories(out_dir);
  write_table_csv(out_dir + "/table2.csv", csv);
  std::printf("wrote %s/table2.csv\n", out_dir.c_str());
  return 0;
}

int cmd_table3(const std::string& out_dir) {
  // published comparison at T=100, tau=0.05, h=0.1: L2, Linf, CPU seconds
  const struct {
    const char* method;
    double l2_c010, linf_c010, cpu_c010;
    double l2_c003, linf_c003, cpu_c003;
  } published[] = {
      {"ILMP-I", 3.13e-4, 1.01e-4, 35.57, 4.61e-5, 1.16e-5, 30.22},
      {"ILMP-II", 1.40e-3, 4.61e-4, 34.14, 1.39e-4, 3.98e-5, 29.02},
  };

  std::vector<std::string> csv;
  csv.push_back("method,c,l2,linf,cpu_seconds,source");
  std::printf("single solitary wave at T=100, tau=0.05, h=0.1, domain [-60,200]\n");
  std::printf("%-10s %-6s %12s %12s %10s  %s\n", "method", "c", "L2", "Linf", "CPU(s)", "source");

  const auto emit_row = [&](const char* method, const char* c_label, double l2, double linf,
                            double cpu, const char* source) {
    std::printf("%-10s %-6s %12.3e %12.3e %10.2f  %s\n", method, c_label, l2, linf, cpu, source);
    std::ostringstream line;
    line << method << "," << c_label << "," << format_sci(l2) << "," << format_sci(linf) << ","
         << format_sci(cpu) << "," << source;
    csv.push_back(line.str());
  };

  for (const auto& row : published) {
    emit_row(row.method, "0.1", row.l2_c010, row.linf_c010, row.cpu_c010, "published");
    emit_row(row.method, "0.03", row.l2_c003, row.linf_c003, row.cpu_c003, "published");
  }
  const struct {
    const char* preset;
    const char* c_label;
  } groups[] = {{"table3_c010", "0.1"}, {"table3_c003", "0.03"}};
  for (const auto& group : groups) {
    for (Scheme scheme : {Scheme::LcnMp, Scheme::LlfMp}) {
      const ScenarioResult r = run_scenario(preset_scenario(group.preset, scheme));
      const ErrorReport& e = r.errors.back();
      const char* name = scheme == Scheme::LcnMp ? "LCN-MP" : "LLF-MP";
      emit_row(name, group.c_label, e.l2_error, e.linf_error, r.cpu_seconds, "computed");
    }
  }

  std::filesystem::create_directories(out_dir);
  write_table_csv(out_dir + "/table3.csv", csv);
  std::printf("wrote %s/table3.csv\n", out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Momentum-preserving Fourier pseudo-spectral solver for the RLW equation"};
  app.require_subcommand(1);

  std::string config_path, axis = "time", refinements, out_dir = "out/tables";
  bool emit_plots = false;

  CLI::App* run = app.add_subcommand("run", "run a scenario config and emit CSV results");
  run->add_option("config", config_path, "scenario config file")->required();
  run->add_flag("--emit-plots", emit_plots, "also write gnuplot scripts");

  CLI::App* inv = app.add_subcommand("invariants", "run a scenario, emit invariants.csv only");
  inv->add_option("config", config_path, "scenario config file")->required();

  CLI::App* conv = app.add_subcommand("converge", "refinement study against the exact solution");
  conv->add_option("config", config_path, "scenario config file")->required();
  conv->add_option("--axis", axis, "refinement axis")
      ->check(CLI::IsMember({"time", "space"}))
      ->required();
  conv->add_option("--refinements", refinements, "comma-separated tau or N ladder");
  conv->add_flag("--emit-plots", emit_plots, "also write gnuplot scripts");

  CLI::App* t2 = app.add_subcommand("table2", "reproduce the single-soliton error table");
  t2->add_option("--out", out_dir, "output directory");
  CLI::App* t3 = app.add_subcommand("table3", "reproduce the small-amplitude comparison table");
  t3->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(config_path, emit_plots, false);
    if (inv->parsed()) return cmd_run(config_path, false, true);
    if (conv->parsed()) return cmd_converge(config_path, axis, refinements, emit_plots);
    if (t2->parsed()) return cmd_table2(out_dir);
    if (t3->parsed()) return cmd_table3(out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
