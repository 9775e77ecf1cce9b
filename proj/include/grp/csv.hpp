#pragma once

#include <filesystem>
#include <string>

#include "grp/bench.hpp"

namespace grp {

/// Shortest round-trip decimal form (std::to_chars).
std::string format_double(double v);

/// RFC-4180-style quoting when a field contains commas, quotes or newlines.
std::string csv_field(const std::string& s);

/// Write-temp-then-rename so readers never observe a partial file.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

/// Per-run solution table: header comments (problem, scheme, n_cells, cfl,
/// t_end, version) and columns x,rho,u,p,e,S plus rho_exact,u_exact,p_exact
/// when a reference is attached. Contains no timing, so identical configs
/// produce identical bytes.
std::string run_csv(const RunResult& result, const std::string& version);

/// Display subsample (at most `points` rows) for plotting; norms always come
/// from the full grid.
std::string display_csv(const RunResult& result, const std::string& version, int points);

/// Sweep summary: scheme x resolution with error norms, step counts, wall
/// time and dispatch fallbacks; failed runs carry their message.
std::string summary_csv(const SweepResult& sweep, const std::string& version);

std::string run_basename(const RunResult& result);

/// Gnuplot script rendering density vs x per run with the exact overlay.
std::string gnuplot_script(const SweepResult& sweep, int display_points);

}  // namespace grp
