#include "biolink/mac/deployment.hpp"

#include <cmath>
#include <numbers>

#include "biolink/common/errors.hpp"

namespace biolink::mac {

double DeploymentGeometry::zone_volume_cm3() const {
  const double sphere = 4.0 / 3.0 * std::numbers::pi * std::pow(zone_radius_cm, 3);
  return zone_shape == ZoneShape::Hemisphere ? sphere / 2.0 : sphere;
}

std::int64_t global_recommendation(std::int64_t zone_successes, const DeploymentGeometry& geom) {
  if (zone_successes < 0) throw ArgumentError("global_recommendation: zone_successes must be >= 0");
  if (!(geom.zone_radius_cm > 0.0) || !(geom.body_volume_cm3 >= 0.0))
    throw ArgumentError("global_recommendation: invalid geometry");
  return std::llround(static_cast<double>(zone_successes) * geom.zones());
}

}  // namespace biolink::mac
