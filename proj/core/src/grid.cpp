#include "muskat/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace muskat {

GridFunction::GridFunction(double half_period, std::vector<double> samples)
    : half_period_(half_period), samples_(std::move(samples)) {
  if (!(half_period > 0.0)) throw std::invalid_argument("GridFunction: half period must be positive");
  if (samples_.size() < 16) throw std::invalid_argument("GridFunction: need at least 16 samples");
  dx_ = 2.0 * half_period_ / static_cast<double>(samples_.size());
  if (!(dx_ > 0.0)) throw std::invalid_argument("GridFunction: non-positive spacing");
  for (double v : samples_) {
    if (!std::isfinite(v)) throw std::invalid_argument("GridFunction: non-finite sample");
  }
}

GridFunction GridFunction::zeros(double half_period, std::size_t n) {
  return GridFunction(half_period, std::vector<double>(n, 0.0));
}

GridFunction GridFunction::constant(double half_period, std::size_t n, double value) {
  return GridFunction(half_period, std::vector<double>(n, value));
}

double GridFunction::interpolate(double x) const {
  const std::size_t n = samples_.size();
  double p = (x + half_period_) / dx_;
  double base = std::floor(p);
  double u = p - base;  // in [0,1)
  std::ptrdiff_t i0 = static_cast<std::ptrdiff_t>(base);
  // Cubic Lagrange on the stencil {i0-1, i0, i0+1, i0+2}.
  const double w0 = -u * (u - 1.0) * (u - 2.0) / 6.0;
  const double w1 = (u * u - 1.0) * (u - 2.0) / 2.0;
  const double w2 = -u * (u + 1.0) * (u - 2.0) / 2.0;
  const double w3 = u * (u * u - 1.0) / 6.0;
  (void)n;
  return w0 * at_wrapped(i0 - 1) + w1 * at_wrapped(i0) + w2 * at_wrapped(i0 + 1) +
         w3 * at_wrapped(i0 + 2);
}

double GridFunction::min() const { return *std::min_element(samples_.begin(), samples_.end()); }
double GridFunction::max() const { return *std::max_element(samples_.begin(), samples_.end()); }

double GridFunction::sup_abs() const {
  double m = 0.0;
  for (double v : samples_) m = std::max(m, std::fabs(v));
  return m;
}

bool GridFunction::all_finite() const {
  for (double v : samples_)
    if (!std::isfinite(v)) return false;
  return true;
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  if (!a.same_grid(b)) throw std::invalid_argument("GridFunction: grid mismatch");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return GridFunction(a.half_period(), std::move(out));
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  if (!a.same_grid(b)) throw std::invalid_argument("GridFunction: grid mismatch");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return GridFunction(a.half_period(), std::move(out));
}

GridFunction operator*(double s, const GridFunction& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return GridFunction(a.half_period(), std::move(out));
}

GridFunction operator+(const GridFunction& a, double c) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + c;
  return GridFunction(a.half_period(), std::move(out));
}

GridFunction derivative(const GridFunction& g, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("derivative: order must be 1..4");
  const std::size_t n = g.size();
  if (n < static_cast<std::size_t>(2 * k + 8))
    throw std::invalid_argument("derivative: grid too coarse for requested order");
  const double h = g.dx();
  std::vector<double> out(n);
  auto s = [&](std::size_t i, std::ptrdiff_t off) {
    return g.at_wrapped(static_cast<std::ptrdiff_t>(i) + off);
  };
  switch (k) {
    case 1: {
      const double c = 1.0 / (12.0 * h);
      for (std::size_t i = 0; i < n; ++i)
        out[i] = c * (-s(i, 2) + 8.0 * s(i, 1) - 8.0 * s(i, -1) + s(i, -2));
      break;
    }
    case 2: {
      const double c = 1.0 / (12.0 * h * h);
      for (std::size_t i = 0; i < n; ++i)
        out[i] = c * (-s(i, 2) + 16.0 * s(i, 1) - 30.0 * s(i, 0) + 16.0 * s(i, -1) - s(i, -2));
      break;
    }
    case 3: {
      const double c = 1.0 / (8.0 * h * h * h);
      for (std::size_t i = 0; i < n; ++i)
        out[i] = c * (s(i, 3) - 8.0 * s(i, 2) + 13.0 * s(i, 1) - 13.0 * s(i, -1) +
                      8.0 * s(i, -2) - s(i, -3));
      break;
    }
    case 4: {
      const double c = 1.0 / (6.0 * h * h * h * h);
      for (std::size_t i = 0; i < n; ++i)
        out[i] = c * (-s(i, 3) + 12.0 * s(i, 2) - 39.0 * s(i, 1) + 56.0 * s(i, 0) -
                      39.0 * s(i, -1) + 12.0 * s(i, -2) - s(i, -3));
      break;
    }
  }
  return GridFunction(g.half_period(), std::move(out));
}

void write_csv(const GridFunction& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  out << "x,f\n";
  char buf[128];
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", g.x(i), g[i]);
    out << buf;
  }
}

GridFunction read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty file " + path);
  std::vector<double> xs, fs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b)) continue;
    xs.push_back(std::stod(a));
    fs.push_back(std::stod(b));
  }
  if (xs.size() < 16) throw std::runtime_error("read_csv: too few rows in " + path);
  const double dx = xs[1] - xs[0];
  const double half_period = -xs.front();
  const double expected = 2.0 * half_period / static_cast<double>(xs.size());
  if (std::fabs(dx - expected) > 1e-9 * std::fabs(expected))
    throw std::runtime_error("read_csv: grid is not uniform on [-L, L) in " + path);
  return GridFunction(half_period, std::move(fs));
}

}  // namespace muskat
