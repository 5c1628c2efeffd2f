#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rlw/csv_io.hpp"
#include "rlw/errors.hpp"
#include "rlw/run_config.hpp"

using namespace rlw;

namespace {

const char* kConservationConfig = R"(# single solitary wave, long-run conservation
[model]
a = 1.0
sigma = 1.0
gamma = 1.0

[domain]
x_left = -30.0
x_right = 30.0
n_points = 256

[time]
tau = 0.025
t_final = 100.0

[scheme]
name = lcn_mp
solver = krylov
rel_tol = 1e-13

[initial]
kind = single_soliton
c = 1/3
x0 = 0.0

[output]
directory = out/conservation
record_every = 40
emit_plots = false
)";

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("parse the conservation config") {
  const RunConfig cfg = parse_run_config(kConservationConfig);
  const Scenario s = cfg.make_scenario();
  CHECK(std::get<SolitonSpec>(s.ic->spec()).c == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(s.tau == 0.025);
  CHECK(s.n_points == 256);
  CHECK(s.scheme == Scheme::LcnMp);
  CHECK(s.solver.mode == SolverMode::Krylov);
  CHECK(s.solver.rel_tol == 1e-13);
  CHECK(s.solver.max_iters == 500);    // defaulted
  CHECK(s.solver.startup_tol == 1e-13);
  CHECK(s.record_every == 40);
  CHECK(s.exact_available);
  CHECK(cfg.directory == "out/conservation");
}

TEST_CASE("config validation failures") {
  std::string text = kConservationConfig;

  SUBCASE("odd n_points") {
    auto bad = text;
    bad.replace(bad.find("n_points = 256"), 14, "n_points = 255");
    try {
      parse_run_config(bad);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("even") != std::string::npos);
    }
  }

  SUBCASE("tau must divide t_final") {
    auto bad = text;
    bad.replace(bad.find("tau = 0.025"), 11, "tau = 0.300");
    CHECK_THROWS_AS(parse_run_config(bad), ConfigError);
  }

  SUBCASE("unknown key carries its line number") {
    auto bad = text;
    bad.insert(bad.find("[domain]"), "typo_key = 1\n");
    try {
      parse_run_config(bad);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line_number == 7);
      CHECK(std::string(e.what()).find("typo_key") != std::string::npos);
    }
  }

  SUBCASE("unknown section") {
    CHECK_THROWS_AS(parse_run_config(text + "\n[extras]\nfoo = 1\n"), ParseError);
  }

  SUBCASE("missing section") {
    const auto at = text.find("[output]");
    CHECK_THROWS_AS(parse_run_config(text.substr(0, at)), ConfigError);
  }

  SUBCASE("missing required key") {
    auto bad = text;
    const auto at = bad.find("solver = krylov\n");
    bad.erase(at, 16);
    CHECK_THROWS_AS(parse_run_config(bad), ConfigError);
  }

  SUBCASE("duplicate key") {
    auto bad = text;
    bad.insert(bad.find("sigma"), "a = 2.0\n");
    CHECK_THROWS_AS(parse_run_config(bad), ParseError);
  }

  SUBCASE("bad number") {
    auto bad = text;
    bad.replace(bad.find("tau = 0.025"), 11, "tau = x.025");
    CHECK_THROWS_AS(parse_run_config(bad), ParseError);
  }

  SUBCASE("key outside a section") {
    CHECK_THROWS_AS(parse_run_config("a = 1.0\n" + text), ParseError);
  }

  SUBCASE("kind-specific keys are enforced") {
    auto bad = text;
    bad.replace(bad.find("kind = single_soliton"), 21, "kind = maxwellian\ncenter = 7");
    CHECK_THROWS_AS(parse_run_config(bad), ParseError);  // stray c, x0
  }

  SUBCASE("negative sigma violates the model invariant") {
    auto bad = text;
    bad.replace(bad.find("sigma = 1.0"), 11, "sigma = -1.");
    CHECK_THROWS_AS(parse_run_config(bad), ConfigError);
  }
}

TEST_CASE("round-trip through serialize and parse") {
  const RunConfig cfg = parse_run_config(kConservationConfig);
  const RunConfig back = parse_run_config(serialize_run_config(cfg));
  CHECK(serialize_run_config(back) == serialize_run_config(cfg));

  const Scenario a = cfg.make_scenario();
  const Scenario b = back.make_scenario();
  CHECK(a.tau == b.tau);
  CHECK(a.n_points == b.n_points);
  CHECK(a.t_final == b.t_final);
  CHECK(a.solver.rel_tol == b.solver.rel_tol);
  CHECK(std::get<SolitonSpec>(a.ic->spec()).c == std::get<SolitonSpec>(b.ic->spec()).c);

  // scenario -> config -> scenario
  const Scenario two = preset_scenario("two_soliton", Scheme::LlfMp);
  const RunConfig from = config_from_scenario(two, "out/two", true);
  const Scenario again = parse_run_config(serialize_run_config(from)).make_scenario();
  CHECK(again.scheme == Scheme::LlfMp);
  CHECK(again.n_points == two.n_points);
  CHECK(std::get<TwoSolitonSpec>(again.ic->spec()).c2 ==
        std::get<TwoSolitonSpec>(two.ic->spec()).c2);
}

TEST_CASE("shipped configs reproduce the preset registry") {
  for (const std::string& name : preset_names()) {
    for (Scheme scheme : {Scheme::LcnMp, Scheme::LlfMp}) {
      const Scenario preset = preset_scenario(name, scheme);
      const std::string suffix = scheme == Scheme::LcnMp ? "_lcn_mp.ini" : "_llf_mp.ini";
      const std::filesystem::path path = std::filesystem::path(RLW_CONFIG_DIR) / (name + suffix);
      INFO(path.string());
      REQUIRE(std::filesystem::exists(path));
      const Scenario parsed = parse_run_config(read_file(path)).make_scenario();

      CHECK(parsed.params.a == preset.params.a);
      CHECK(parsed.params.sigma == preset.params.sigma);
      CHECK(parsed.params.gamma == preset.params.gamma);
      CHECK(parsed.x_left == preset.x_left);
      CHECK(parsed.x_right == preset.x_right);
      CHECK(parsed.n_points == preset.n_points);
      CHECK(parsed.tau == preset.tau);
      CHECK(parsed.t_final == preset.t_final);
      CHECK(parsed.scheme == preset.scheme);
      CHECK(parsed.record_every == preset.record_every);
      CHECK(parsed.solver.rel_tol == preset.solver.rel_tol);
      if (name == "conservation") {
        // the preset skips error tracking (the wave laps the domain by T=100);
        // the config route always carries the soliton evaluator
        CHECK(parsed.exact_available);
      } else {
        CHECK(parsed.exact_available == preset.exact_available);
      }
      CHECK(parsed.ic->spec().index() == preset.ic->spec().index());
      if (const auto* s = std::get_if<SolitonSpec>(&preset.ic->spec())) {
        CHECK(std::get<SolitonSpec>(parsed.ic->spec()).c == s->c);
        CHECK(std::get<SolitonSpec>(parsed.ic->spec()).x0 == s->x0);
      } else if (const auto* t = std::get_if<TwoSolitonSpec>(&preset.ic->spec())) {
        CHECK(std::get<TwoSolitonSpec>(parsed.ic->spec()).c1 == t->c1);
        CHECK(std::get<TwoSolitonSpec>(parsed.ic->spec()).c2 == t->c2);
        CHECK(std::get<TwoSolitonSpec>(parsed.ic->spec()).x1 == t->x1);
        CHECK(std::get<TwoSolitonSpec>(parsed.ic->spec()).x2 == t->x2);
      } else {
        CHECK(std::get<MaxwellianSpec>(parsed.ic->spec()).center ==
              std::get<MaxwellianSpec>(preset.ic->spec()).center);
      }
    }
  }
}

TEST_CASE("scientific formatting") {
  CHECK(format_sci(0.0001) == "1.000000000000000e-04");
  CHECK(format_sci(-2.5) == "-2.500000000000000e+00");
  CHECK(format_sci(std::nan("")) == "nan");
}

TEST_CASE("empty bundle emits header-only files") {
  const auto dir = std::filesystem::temp_directory_path() / "rlw_csv_empty";
  std::filesystem::remove_all(dir);

  ScenarioResult empty;
  empty.scenario = preset_scenario("propagation", Scheme::LcnMp);
  empty.grid = make_grid(-30.0, 30.0, 256);
  emit_results(empty, dir.string(), false);

  CHECK(read_file(dir / "invariants.csv") == "t,I1h,I2h,I3h,RI1,RI2,RI3\n");
  CHECK(read_file(dir / "errors.csv") == "t,l2,linf\n");

  ConvergenceTable table;
  emit_convergence(table, dir.string(), false);
  CHECK(read_file(dir / "convergence.csv") == "delta,l2,linf,order_l2,order_linf\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("emission is deterministic and complete") {
  Scenario s = preset_scenario("maxwellian_s004", Scheme::LcnMp);
  s.n_points = 64;
  s.tau = 0.05;
  s.t_final = 0.2;
  s.record_every = 2;
  const ScenarioResult r = run_scenario(s);

  const auto dir1 = std::filesystem::temp_directory_path() / "rlw_csv_a";
  const auto dir2 = std::filesystem::temp_directory_path() / "rlw_csv_b";
  std::filesystem::remove_all(dir1);
  std::filesystem::remove_all(dir2);
  emit_results(r, dir1.string(), true);
  emit_results(run_scenario(s), dir2.string(), true);

  CHECK(std::filesystem::exists(dir1 / "solution_0.csv"));
  CHECK(std::filesystem::exists(dir1 / "solution_0.2.csv"));
  CHECK(std::filesystem::exists(dir1 / "invariants.gp"));
  CHECK(std::filesystem::exists(dir1 / "solution.gp"));
  CHECK_FALSE(std::filesystem::exists(dir1 / "errors.csv"));  // no exact solution here

  const std::string inv = read_file(dir1 / "invariants.csv");
  CHECK(inv == read_file(dir2 / "invariants.csv"));
  CHECK(read_file(dir1 / "solution_0.2.csv") == read_file(dir2 / "solution_0.2.csv"));
  CHECK(inv.rfind('\n') == inv.size() - 1);
  CHECK(inv.substr(0, inv.find('\n')) == "t,I1h,I2h,I3h,RI1,RI2,RI3");

  const std::string gp = read_file(dir1 / "solution.gp");
  CHECK(gp.find("plot") != std::string::npos);
  CHECK(gp.find("solution_0.csv") != std::string::npos);

  std::filesystem::remove_all(dir1);
  std::filesystem::remove_all(dir2);
}
