#include "muskat/geometry.hpp"

#include <sstream>

namespace muskat {

std::optional<std::string> range_violation(const Geometry& geom, const GridFunction& f) {
  if (is_plane(geom)) return std::nullopt;
  const double lo = f.min();
  if (is_half_plane(geom)) {
    if (lo < 0.0) {
      std::ostringstream msg;
      msg << "half-plane requires f >= 0, min f = " << lo;
      return msg.str();
    }
    return std::nullopt;
  }
  const double l = strip_height(geom);
  const double hi = f.max();
  if (lo < 0.0 || hi > l) {
    std::ostringstream msg;
    msg << "strip(l=" << l << ") requires 0 <= f <= l, range [" << lo << ", " << hi << "]";
    return msg.str();
  }
  return std::nullopt;
}

}  // namespace muskat
