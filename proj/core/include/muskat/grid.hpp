#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace muskat {

/// Uniformly sampled real function on the truncated periodic domain
/// [-L, L) with period 2L.  Sample i sits at x_i = -L + i*dx, dx = 2L/n.
/// Evaluation wraps periodically, so g(x) and g(x + 2L) agree exactly.
class GridFunction {
public:
  GridFunction(double half_period, std::vector<double> samples);

  static GridFunction zeros(double half_period, std::size_t n);
  static GridFunction constant(double half_period, std::size_t n, double value);

  std::size_t size() const { return samples_.size(); }
  double half_period() const { return half_period_; }
  double period() const { return 2.0 * half_period_; }
  double dx() const { return dx_; }
  double x(std::size_t i) const { return -half_period_ + static_cast<double>(i) * dx_; }

  double operator[](std::size_t i) const { return samples_[i]; }
  double& operator[](std::size_t i) { return samples_[i]; }

  // Periodic indexing for any signed offset.
  double at_wrapped(std::ptrdiff_t i) const {
    std::ptrdiff_t n = static_cast<std::ptrdiff_t>(samples_.size());
    i %= n;
    if (i < 0) i += n;
    return samples_[static_cast<std::size_t>(i)];
  }

  std::span<const double> samples() const { return samples_; }
  std::vector<double>& raw() { return samples_; }
  const std::vector<double>& raw() const { return samples_; }

  /// 4-point periodic Lagrange interpolation at an arbitrary point.
  double interpolate(double x) const;

  double min() const;
  double max() const;
  double sup_abs() const;
  bool all_finite() const;

  bool same_grid(const GridFunction& other) const {
    return size() == other.size() && half_period_ == other.half_period_;
  }

private:
  double half_period_;
  double dx_;
  std::vector<double> samples_;
};

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double s, const GridFunction& a);
GridFunction operator+(const GridFunction& a, double c);

/// k-th derivative (k = 1..4) by 4th-order central differences with
/// periodic wrap.  Requires n >= 2k + 8.
GridFunction derivative(const GridFunction& g, int k);

/// CSV with header "x,f", one row per sample, 17 significant digits.
void write_csv(const GridFunction& g, const std::string& path);
GridFunction read_csv(const std::string& path);

}  // namespace muskat
