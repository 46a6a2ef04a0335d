#include "muskat/profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace muskat {

namespace {

double gaussian_bump(double u) { return std::exp(-u * u); }

// Quintic smoothstep: S(0)=0, S(1)=1 with S'=S''=0 at both ends (C^2 bridge).
double smoothstep5(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

}  // namespace

double evaluate_profile(const ProfileSpec& spec, double x) {
  if (const auto* c = std::get_if<ConstantProfile>(&spec)) return c->c;
  if (const auto* b = std::get_if<BumpProfile>(&spec))
    return b->base + b->amplitude * gaussian_bump((x - b->center) / b->width);
  if (const auto* s = std::get_if<SineProfile>(&spec))
    return s->base + s->amplitude * std::sin(s->wavenumber * x);
  const auto& inv = std::get<InvasionProfile>(spec);
  if (x >= inv.gap_lo && x <= inv.gap_hi) return 0.0;
  if (x > inv.gap_hi) return inv.height_right * smoothstep5((x - inv.gap_hi) / inv.smoothing);
  return inv.height_left * smoothstep5((inv.gap_lo - x) / inv.smoothing);
}

GridFunction sample_profile(const ProfileSpec& spec, const Geometry& geom, double half_period,
                            std::size_t n) {
  if (const auto* inv = std::get_if<InvasionProfile>(&spec)) {
    if (!(inv->smoothing > 0.0)) throw std::invalid_argument("invasion: smoothing must be positive");
    if (!(inv->gap_lo < inv->gap_hi)) throw std::invalid_argument("invasion: empty gap");
    if (inv->gap_lo - inv->smoothing <= -half_period ||
        inv->gap_hi + inv->smoothing >= half_period)
      throw std::invalid_argument("invasion: shoulders do not fit inside [-L, L)");
  }
  std::vector<double> samples(n);
  const double dx = 2.0 * half_period / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    samples[i] = evaluate_profile(spec, -half_period + static_cast<double>(i) * dx);
  GridFunction f(half_period, std::move(samples));
  if (auto violation = range_violation(geom, f))
    throw std::invalid_argument("profile outside geometry range: " + *violation);
  return f;
}

}  // namespace muskat
