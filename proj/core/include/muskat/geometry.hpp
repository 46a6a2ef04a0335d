#pragma once

#include <optional>
#include <string>
#include <variant>

#include "muskat/grid.hpp"

namespace muskat {

struct Plane {};
struct HalfPlane {};
struct Strip {
  double height;  // l > 0
};

using Geometry = std::variant<Plane, HalfPlane, Strip>;

inline bool is_plane(const Geometry& g) { return std::holds_alternative<Plane>(g); }
inline bool is_half_plane(const Geometry& g) { return std::holds_alternative<HalfPlane>(g); }
inline bool is_strip(const Geometry& g) { return std::holds_alternative<Strip>(g); }
inline double strip_height(const Geometry& g) { return std::get<Strip>(g).height; }

inline std::string geometry_name(const Geometry& g) {
  if (is_plane(g)) return "plane";
  if (is_half_plane(g)) return "half_plane";
  return "strip";
}

/// Empty if f lies in the admissible range of the geometry, else a diagnostic.
/// HalfPlane needs f >= 0, Strip(l) needs 0 <= f <= l; the plane is free.
std::optional<std::string> range_violation(const Geometry& geom, const GridFunction& f);

}  // namespace muskat
