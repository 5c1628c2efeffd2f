#include "rlw/run_config.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "rlw/errors.hpp"

namespace rlw {

namespace {

struct RawValue {
  std::string text;
  int line = 0;
  mutable bool consumed = false;
};

using RawSection = std::map<std::string, RawValue>;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& text, int line) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const double num = parse_real(trim(text.substr(0, slash)), line);
    const double den = parse_real(trim(text.substr(slash + 1)), line);
    if (den == 0.0) throw ParseError("division by zero in '" + text + "'", line);
    return num / den;
  }
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw ParseError("cannot parse '" + text + "' as a number", line);
  }
  return value;
}

int parse_int(const std::string& text, int line) {
  char* end = nullptr;
  const long value = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0') {
    throw ParseError("cannot parse '" + text + "' as an integer", line);
  }
  return static_cast<int>(value);
}

bool parse_bool(const std::string& text, int line) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw ParseError("cannot parse '" + text + "' as true/false", line);
}

class SectionReader {
 public:
  SectionReader(const std::map<std::string, RawSection>& sections, const std::string& name)
      : name_(name) {
    const auto it = sections.find(name);
    if (it == sections.end()) throw ConfigError("missing [" + name + "] section");
    section_ = &it->second;
  }

  const RawValue& require(const std::string& key) const {
    const auto it = section_->find(key);
    if (it == section_->end()) {
      throw ConfigError("missing key '" + key + "' in [" + name_ + "]");
    }
    it->second.consumed = true;
    return it->second;
  }

  const RawValue* optional(const std::string& key) const {
    const auto it = section_->find(key);
    if (it == section_->end()) return nullptr;
    it->second.consumed = true;
    return &it->second;
  }

  double real(const std::string& key) const {
    const RawValue& v = require(key);
    return parse_real(v.text, v.line);
  }
  int integer(const std::string& key) const {
    const RawValue& v = require(key);
    return parse_int(v.text, v.line);
  }
  bool boolean(const std::string& key) const {
    const RawValue& v = require(key);
    return parse_bool(v.text, v.line);
  }
  std::string str(const std::string& key) const { return require(key).text; }

  void reject_unconsumed() const {
    for (const auto& [key, value] : *section_) {
      if (!value.consumed) {
        throw ParseError("unknown key '" + key + "' in [" + name_ + "]", value.line);
      }
    }
  }

 private:
  std::string name_;
  const RawSection* section_;
};

std::map<std::string, RawSection> tokenize(const std::string& text) {
  static const std::set<std::string> known_sections = {"model",  "domain",  "time",
                                                       "scheme", "initial", "output"};
  std::map<std::string, RawSection> sections;
  std::istringstream in(text);
  std::string raw_line;
  std::string current;
  int line_number = 0;
  while (std::getline(in, raw_line)) {
    ++line_number;
    const auto comment = raw_line.find_first_of("#;");
    std::string line = trim(comment == std::string::npos ? raw_line : raw_line.substr(0, comment));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_number);
      current = trim(line.substr(1, line.size() - 2));
      if (!known_sections.count(current)) {
        throw ParseError("unknown section [" + current + "]", line_number);
      }
      sections[current];  // a section may legitimately stay empty until validation
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_number);
    if (current.empty()) throw ParseError("key outside of any section", line_number);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError("expected 'key = value'", line_number);
    if (!sections[current].emplace(key, RawValue{value, line_number}).second) {
      throw ParseError("duplicate key '" + key + "'", line_number);
    }
  }
  return sections;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  const auto sections = tokenize(text);
  RunConfig cfg;

  const SectionReader model(sections, "model");
  cfg.a = model.real("a");
  cfg.sigma = model.real("sigma");
  cfg.gamma = model.real("gamma");
  model.reject_unconsumed();

  const SectionReader domain(sections, "domain");
  cfg.x_left = domain.real("x_left");
  cfg.x_right = domain.real("x_right");
  cfg.n_points = domain.integer("n_points");
  domain.reject_unconsumed();

  const SectionReader time(sections, "time");
  cfg.tau = time.real("tau");
  cfg.t_final = time.real("t_final");
  time.reject_unconsumed();

  const SectionReader scheme(sections, "scheme");
  cfg.scheme_name = scheme.str("name");
  cfg.solver_mode = scheme.str("solver");
  if (const RawValue* v = scheme.optional("rel_tol")) cfg.rel_tol = parse_real(v->text, v->line);
  if (const RawValue* v = scheme.optional("max_iters")) cfg.max_iters = parse_int(v->text, v->line);
  if (const RawValue* v = scheme.optional("startup_tol")) {
    cfg.startup_tol = parse_real(v->text, v->line);
  }
  if (const RawValue* v = scheme.optional("startup_max_iters")) {
    cfg.startup_max_iters = parse_int(v->text, v->line);
  }
  scheme.reject_unconsumed();

  const SectionReader initial(sections, "initial");
  cfg.initial_kind = initial.str("kind");
  if (cfg.initial_kind == "single_soliton") {
    cfg.c = initial.real("c");
    cfg.x0 = initial.real("x0");
  } else if (cfg.initial_kind == "two_soliton") {
    cfg.c1 = initial.real("c1");
    cfg.c2 = initial.real("c2");
    cfg.x1 = initial.real("x1");
    cfg.x2 = initial.real("x2");
  } else if (cfg.initial_kind == "maxwellian") {
    cfg.center = initial.real("center");
  } else {
    throw ConfigError("unknown initial kind '" + cfg.initial_kind + "'");
  }
  initial.reject_unconsumed();

  const SectionReader output(sections, "output");
  cfg.directory = output.str("directory");
  cfg.record_every = output.integer("record_every");
  cfg.emit_plots = output.boolean("emit_plots");
  output.reject_unconsumed();

  (void)cfg.make_scenario();  // run the full validation now, not at use time
  return cfg;
}

Scenario RunConfig::make_scenario() const {
  Scenario s;
  s.params = RlwParams{a, sigma, gamma};
  validate(s.params);
  if (n_points % 2 != 0) {
    throw ConfigError("n_points must be even (N even); got " + std::to_string(n_points));
  }
  s.x_left = x_left;
  s.x_right = x_right;
  s.n_points = n_points;
  s.tau = tau;
  s.t_final = t_final;
  s.record_every = record_every;

  if (scheme_name == "lcn_mp") {
    s.scheme = Scheme::LcnMp;
  } else if (scheme_name == "llf_mp") {
    s.scheme = Scheme::LlfMp;
  } else {
    throw ConfigError("unknown scheme '" + scheme_name + "' (expected lcn_mp or llf_mp)");
  }

  if (solver_mode == "krylov") {
    s.solver.mode = SolverMode::Krylov;
  } else if (solver_mode == "direct_dense") {
    s.solver.mode = SolverMode::DirectDense;
  } else {
    throw ConfigError("unknown solver '" + solver_mode + "' (expected krylov or direct_dense)");
  }
  s.solver.rel_tol = rel_tol;
  s.solver.max_iters = max_iters;
  s.solver.startup_tol = startup_tol;
  s.solver.startup_max_iters = startup_max_iters;

  if (initial_kind == "single_soliton") {
    const SolitonSpec spec{c, x0};
    s.ic = InitialCondition::single_soliton(s.params, spec);
    s.exact_available = true;
    const RlwParams params = s.params;
    s.exact = [params, spec](double x, double t) { return exact_soliton(params, spec, x, t); };
  } else if (initial_kind == "two_soliton") {
    s.ic = InitialCondition::two_soliton(s.params, TwoSolitonSpec{c1, c2, x1, x2});
  } else if (initial_kind == "maxwellian") {
    s.ic = InitialCondition::maxwellian(s.params, MaxwellianSpec{center});
  } else {
    throw ConfigError("unknown initial kind '" + initial_kind + "'");
  }

  s.name = initial_kind;
  validate(s);
  return s;
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string serialize_run_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "[model]\n"
      << "a = " << num(cfg.a) << "\n"
      << "sigma = " << num(cfg.sigma) << "\n"
      << "gamma = " << num(cfg.gamma) << "\n\n";
  out << "[domain]\n"
      << "x_left = " << num(cfg.x_left) << "\n"
      << "x_right = " << num(cfg.x_right) << "\n"
      << "n_points = " << cfg.n_points << "\n\n";
  out << "[time]\n"
      << "tau = " << num(cfg.tau) << "\n"
      << "t_final = " << num(cfg.t_final) << "\n\n";
  out << "[scheme]\n"
      << "name = " << cfg.scheme_name << "\n"
      << "solver = " << cfg.solver_mode << "\n"
      << "rel_tol = " << num(cfg.rel_tol) << "\n"
      << "max_iters = " << cfg.max_iters << "\n"
      << "startup_tol = " << num(cfg.startup_tol) << "\n"
      << "startup_max_iters = " << cfg.startup_max_iters << "\n\n";
  out << "[initial]\n"
      << "kind = " << cfg.initial_kind << "\n";
  if (cfg.initial_kind == "single_soliton") {
    out << "c = " << num(cfg.c) << "\n"
        << "x0 = " << num(cfg.x0) << "\n";
  } else if (cfg.initial_kind == "two_soliton") {
    out << "c1 = " << num(cfg.c1) << "\n"
        << "c2 = " << num(cfg.c2) << "\n"
        << "x1 = " << num(cfg.x1) << "\n"
        << "x2 = " << num(cfg.x2) << "\n";
  } else {
    out << "center = " << num(cfg.center) << "\n";
  }
  out << "\n[output]\n"
      << "directory = " << cfg.directory << "\n"
      << "record_every = " << cfg.record_every << "\n"
      << "emit_plots = " << (cfg.emit_plots ? "true" : "false") << "\n";
  return out.str();
}

RunConfig config_from_scenario(const Scenario& scenario, const std::string& directory,
                               bool emit_plots) {
  RunConfig cfg;
  cfg.a = scenario.params.a;
  cfg.sigma = scenario.params.sigma;
  cfg.gamma = scenario.params.gamma;
  cfg.x_left = scenario.x_left;
  cfg.x_right = scenario.x_right;
  cfg.n_points = scenario.n_points;
  cfg.tau = scenario.tau;
  cfg.t_final = scenario.t_final;
  cfg.scheme_name = scenario.scheme == Scheme::LcnMp ? "lcn_mp" : "llf_mp";
  cfg.solver_mode = scenario.solver.mode == SolverMode::Krylov ? "krylov" : "direct_dense";
  cfg.rel_tol = scenario.solver.rel_tol;
  cfg.max_iters = scenario.solver.max_iters;
  cfg.startup_tol = scenario.solver.startup_tol;
  cfg.startup_max_iters = scenario.solver.startup_max_iters;
  if (!scenario.ic.has_value()) throw ConfigError("scenario has no initial condition");
  if (const auto* s = std::get_if<SolitonSpec>(&scenario.ic->spec())) {
    cfg.initial_kind = "single_soliton";
    cfg.c = s->c;
    cfg.x0 = s->x0;
  } else if (const auto* s2 = std::get_if<TwoSolitonSpec>(&scenario.ic->spec())) {
    cfg.initial_kind = "two_soliton";
    cfg.c1 = s2->c1;
    cfg.c2 = s2->c2;
    cfg.x1 = s2->x1;
    cfg.x2 = s2->x2;
  } else {
    cfg.initial_kind = "maxwellian";
    cfg.center = std::get<MaxwellianSpec>(scenario.ic->spec()).center;
  }
  cfg.directory = directory;
  cfg.record_every = scenario.record_every;
  cfg.emit_plots = emit_plots;
  return cfg;
}

}  // namespace rlw
