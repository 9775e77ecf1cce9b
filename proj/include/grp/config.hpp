#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "grp/bench.hpp"

namespace grp {

struct OutputSpec {
  std::filesystem::path dir = ".";
  int display_points = 66;
  bool emit_plot = true;
};

/// Everything a benchmark invocation needs: problem selection with overrides,
/// scheme list (one entry unless sweeping), resolutions and output policy.
struct BenchConfig {
  std::string problem = "sod";
  double gamma = -1.0;   // < 0: problem default
  double t_end = -1.0;   // < 0: problem default
  std::string boundary;  // empty: problem default

  std::vector<std::string> schemes = {"godunov"};
  std::vector<int> cells = {100};
  double cfl = -1.0;                 // < 0: scheme default
  std::string limiter;               // empty: scheme default
  double acoustic_threshold = -1.0;  // < 0: default
  double efix_delta = -1.0;          // < 0: default
  bool sweep = false;

  OutputSpec output;

  /// Problem with overrides applied.
  ProblemSpec resolve_problem() const;
  /// Scheme preset by name with overrides applied.
  SchemeSpec resolve_scheme(const std::string& name) const;
};

/// Line-based `key = value` file with optional [problem]/[scheme]/[output]
/// sections and # comments. Unknown keys raise ValidationError; malformed
/// lines raise ParseError with the line number. Every key has a default, so
/// a file naming only `problem = sod` is complete.
BenchConfig parse_config(const std::filesystem::path& path);

/// Apply one key (shared by the file parser and CLI flag overrides).
/// line is used for diagnostics only.
void apply_key(BenchConfig& cfg, const std::string& key, const std::string& value, int line);

std::vector<std::string> split_list(const std::string& csv);

}  // namespace grp
