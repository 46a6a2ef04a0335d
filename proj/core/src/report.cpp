#include "muskat/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace muskat {

namespace {
constexpr const char* kHeader =
    "t,sup_f,inf_f,rhs_sup,tilde_h3_gamma,c2_gamma_gamma,fx_c1g,fx_c1g_pow4,tl2_f1,tl2_f2,tl2_f3";
}

void write_series_csv(const RunReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_series_csv: cannot open " + path);
  out << kHeader << "\n";
  char buf[512];
  for (const auto& r : report.series) {
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t,
                  r.sup_f, r.inf_f, r.rhs_sup, r.tilde_h3_gamma, r.c2_gamma_gamma, r.fx_c1g,
                  r.fx_c1g_pow4, r.tl2_f1, r.tl2_f2, r.tl2_f3);
    out << buf;
  }
}

std::vector<SeriesRow> read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_series_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_series_csv: empty file " + path);
  std::vector<SeriesRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
    if (vals.size() != 11) throw std::runtime_error("read_series_csv: malformed row in " + path);
    SeriesRow r;
    r.t = vals[0];
    r.sup_f = vals[1];
    r.inf_f = vals[2];
    r.rhs_sup = vals[3];
    r.tilde_h3_gamma = vals[4];
    r.c2_gamma_gamma = vals[5];
    r.fx_c1g = vals[6];
    r.fx_c1g_pow4 = vals[7];
    r.tl2_f1 = vals[8];
    r.tl2_f2 = vals[9];
    r.tl2_f3 = vals[10];
    rows.push_back(r);
  }
  return rows;
}

std::string snapshot_filename(double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "snap_%.6f.csv", t);
  return buf;
}

}  // namespace muskat
