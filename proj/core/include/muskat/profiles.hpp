#pragma once

#include <variant>

#include "muskat/geometry.hpp"
#include "muskat/grid.hpp"

namespace muskat {

// Scenario library for initial interfaces.

struct ConstantProfile {
  double c = 0.0;
};

/// Gaussian bump of height A over an optional flat base:
/// base + A*exp(-u^2), u = (x - center)/width.  Numerically compact: the
/// tail is below 1e-27 beyond eight widths, so the far field is the base
/// constant at double precision.
struct BumpProfile {
  double amplitude = 1.0;
  double width = 2.0;
  double center = 0.0;
  double base = 0.0;
};

struct SineProfile {
  double amplitude = 1e-4;
  double wavenumber = 1.0;
  double base = 0.0;
};

/// Interface vanishing on the gap [a, b], rising to the given heights over
/// C^2 quintic-smoothstep shoulders of the given smoothing length.  Models
/// the heavier fluid invading along the impermeable bottom.
struct InvasionProfile {
  double height_left = 1.0;
  double height_right = 1.0;
  double gap_lo = -1.0;
  double gap_hi = 1.0;
  double smoothing = 0.5;
};

using ProfileSpec = std::variant<ConstantProfile, BumpProfile, SineProfile, InvasionProfile>;

/// Pointwise closed-form evaluation of a profile.
double evaluate_profile(const ProfileSpec& spec, double x);

/// Sample a named profile on (L, n) and validate it against the geometry
/// range; rejection carries a diagnostic.
GridFunction sample_profile(const ProfileSpec& spec, const Geometry& geom, double half_period,
                            std::size_t n);

}  // namespace muskat
