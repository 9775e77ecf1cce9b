#include "grp/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>

namespace grp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ValidationError(key, "expected a number, got '" + value + "'");
  }
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ValidationError(key, "expected an integer, got '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "on" || value == "1") return true;
  if (value == "false" || value == "off" || value == "0") return false;
  throw ValidationError(key, "expected true/false, got '" + value + "'");
}

}  // namespace

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  for (char c : csv) {
    if (c == ',') {
      if (!trim(item).empty()) out.push_back(trim(item));
      item.clear();
    } else {
      item += c;
    }
  }
  if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

void apply_key(BenchConfig& cfg, const std::string& key, const std::string& value, int line) {
  (void)line;
  if (key == "problem") {
    make_problem(value);  // validates the name
    cfg.problem = value;
  } else if (key == "gamma") {
    const double g = parse_number(key, value);
    if (!(g > 1.0)) throw ValidationError(key, "gamma must exceed 1");
    cfg.gamma = g;
  } else if (key == "tend") {
    const double t = parse_number(key, value);
    if (!(t > 0.0)) throw ValidationError(key, "tend must be positive");
    cfg.t_end = t;
  } else if (key == "boundary") {
    if (value != "transmissive" && value != "reflective") {
      throw ValidationError(key, "boundary must be transmissive or reflective");
    }
    cfg.boundary = value;
  } else if (key == "scheme") {
    const auto names = split_list(value);
    if (names.empty()) throw ValidationError(key, "empty scheme list");
    for (const auto& n : names) make_scheme(n);  // validates
    cfg.schemes = names;
  } else if (key == "cells") {
    const auto items = split_list(value);
    if (items.empty()) throw ValidationError(key, "empty cell list");
    std::vector<int> cells;
    for (const auto& it : items) {
      const int n = parse_int(key, it);
      if (n < 4) throw ValidationError(key, "need at least 4 cells");
      cells.push_back(n);
    }
    cfg.cells = cells;
  } else if (key == "cfl") {
    const double c = parse_number(key, value);
    if (!(c > 0.0 && c < 1.0)) throw ValidationError(key, "cfl must lie in (0,1)");
    cfg.cfl = c;
  } else if (key == "limiter") {
    if (value != "minmod" && value != "vanleer") {
      throw ValidationError(key, "limiter must be minmod or vanleer");
    }
    cfg.limiter = value;
  } else if (key == "acoustic_threshold") {
    const double v = parse_number(key, value);
    if (!(v >= 0.0)) throw ValidationError(key, "acoustic_threshold must be >= 0");
    cfg.acoustic_threshold = v;
  } else if (key == "efix_delta") {
    const double v = parse_number(key, value);
    if (!(v >= 0.0)) throw ValidationError(key, "efix_delta must be >= 0");
    cfg.efix_delta = v;
  } else if (key == "sweep") {
    cfg.sweep = parse_bool(key, value);
  } else if (key == "dir") {
    cfg.output.dir = value;
  } else if (key == "display_points") {
    const int n = parse_int(key, value);
    if (n < 0) throw ValidationError(key, "display_points must be >= 0");
    cfg.output.display_points = n;
  } else if (key == "plot") {
    cfg.output.emit_plot = parse_bool(key, value);
  } else {
    throw ValidationError(key, "unknown key");
  }
}

BenchConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open config file '" + path.string() + "'", 0);
  }
  static const std::set<std::string> sections = {"problem", "scheme", "output"};
  BenchConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_no);
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (!sections.contains(name)) throw ParseError("unknown section '" + name + "'", line_no);
      continue;  // sections are organizational; keys are globally unique
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line_no);
    if (value.empty()) throw ParseError("empty value for '" + key + "'", line_no);
    apply_key(cfg, key, value, line_no);
  }
  return cfg;
}

ProblemSpec BenchConfig::resolve_problem() const {
  ProblemSpec p = make_problem(problem);
  if (gamma > 0.0) p.gamma = gamma;
  if (t_end > 0.0) p.t_end = t_end;
  if (boundary == "reflective") p.boundary = BoundaryPolicy::Reflective;
  if (boundary == "transmissive") p.boundary = BoundaryPolicy::Transmissive;
  return p;
}

SchemeSpec BenchConfig::resolve_scheme(const std::string& name) const {
  SchemeSpec s = make_scheme(name);
  if (cfl > 0.0) s.cfl = cfl;
  if (limiter == "minmod") s.limiter = Limiter::Minmod;
  if (limiter == "vanleer") s.limiter = Limiter::VanLeer;
  if (acoustic_threshold >= 0.0) s.grp.acoustic_threshold = acoustic_threshold;
  if (efix_delta >= 0.0) s.efix_delta = efix_delta;
  s.validate();
  return s;
}

}  // namespace grp
