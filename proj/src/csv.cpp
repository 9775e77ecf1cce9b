#include "grp/csv.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

namespace grp {

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::string run_header(const RunResult& r, const std::string& version) {
  std::string out;
  out += "# problem = " + r.problem + "\n";
  out += "# scheme = " + r.scheme_name + "\n";
  out += "# n_cells = " + std::to_string(r.n_cells) + "\n";
  out += "# gamma = " + format_double(r.gamma) + "\n";
  out += "# cfl = " + format_double(r.cfl) + "\n";
  out += "# t_end = " + format_double(r.t_end) + "\n";
  out += "# version = " + version + "\n";
  return out;
}

void append_rows(std::string& out, const RunResult& r, std::size_t stride) {
  const bool with_exact = !r.exact.empty();
  out += "x,rho,u,p,e,S";
  if (with_exact) out += ",rho_exact,u_exact,p_exact";
  out += "\n";
  for (std::size_t i = 0; i < r.x.size(); i += stride) {
    out += format_double(r.x[i]);
    out += ',' + format_double(r.numerical[i].rho);
    out += ',' + format_double(r.numerical[i].u);
    out += ',' + format_double(r.numerical[i].p);
    out += ',' + format_double(r.internal_energy[i]);
    out += ',' + format_double(r.entropy[i]);
    if (with_exact) {
      out += ',' + format_double(r.exact[i].rho);
      out += ',' + format_double(r.exact[i].u);
      out += ',' + format_double(r.exact[i].p);
    }
    out += '\n';
  }
}

}  // namespace

std::string run_csv(const RunResult& result, const std::string& version) {
  std::string out = run_header(result, version);
  append_rows(out, result, 1);
  return out;
}

std::string display_csv(const RunResult& result, const std::string& version, int points) {
  std::string out = run_header(result, version);
  const std::size_t stride =
      points > 0 ? std::max<std::size_t>(1, result.x.size() / static_cast<std::size_t>(points))
                 : 1;
  append_rows(out, result, stride);
  return out;
}

std::string run_basename(const RunResult& result) {
  return result.problem + "_" + result.scheme_name + "_" + std::to_string(result.n_cells);
}

std::string summary_csv(const SweepResult& sweep, const std::string& version) {
  std::string out = "# version = " + version + "\n";
  out +=
      "problem,scheme,n_cells,cfl,t_end,steps,wall_seconds,l1_rho,l1_u,l1_p,"
      "linf_rho,linf_u,linf_p,acoustic,nonlinear,fallback_acoustic,fallback_godunov,status\n";
  for (const auto& r : sweep.runs) {
    out += csv_field(r.problem) + ',' + csv_field(r.scheme_name) + ',' +
           std::to_string(r.n_cells) + ',' + format_double(r.cfl) + ',' +
           format_double(r.t_end) + ',' + std::to_string(r.steps) + ',' +
           format_double(r.wall_seconds) + ',' + format_double(r.errors.l1_rho) + ',' +
           format_double(r.errors.l1_u) + ',' + format_double(r.errors.l1_p) + ',' +
           format_double(r.errors.linf_rho) + ',' + format_double(r.errors.linf_u) + ',' +
           format_double(r.errors.linf_p) + ',' + std::to_string(r.stats.acoustic) + ',' +
           std::to_string(r.stats.nonlinear) + ',' +
           std::to_string(r.stats.fallback_acoustic) + ',' +
           std::to_string(r.stats.fallback_godunov) + ',' +
           (r.failed ? csv_field("failed: " + r.failure) : std::string("ok")) + "\n";
  }
  return out;
}

std::string gnuplot_script(const SweepResult& sweep, int display_points) {
  std::string out;
  out += "set datafile separator ','\n";
  out += "set datafile commentschars '#'\n";
  out += "set terminal pngcairo size 900,600\n";
  out += "set xlabel 'x'\n";
  out += "set ylabel 'density'\n";
  out += "set key top right\n";
  for (const auto& r : sweep.runs) {
    if (r.failed) continue;
    const std::string base = run_basename(r);
    out += "set output '" + base + ".png'\n";
    out += "set title '" + r.problem + ", " + r.scheme_name + ", " +
           std::to_string(r.n_cells) + " cells'\n";
    const std::string display =
        display_points > 0 ? base + "_display.csv" : base + ".csv";
    // skip 8 = the seven metadata comment lines plus the column-name row
    out += "plot '" + display + "' using 1:2 skip 8 with points pt 7 ps 0.6 title '" +
           r.scheme_name + "'";
    if (!r.exact.empty()) {
      out += ", \\\n     '" + base + ".csv' using 1:7 skip 8 with lines lc 'black' title 'exact'";
    }
    out += "\n";
  }
  return out;
}

}  // namespace grp
