#pragma once

#include <cstdint>

namespace biolink::mac {

enum class ZoneShape { Hemisphere, Sphere };

struct DeploymentGeometry {
  double body_volume_cm3 = 6.643e5;
  double zone_radius_cm = 5.0;
  ZoneShape zone_shape = ZoneShape::Hemisphere;

  double zone_volume_cm3() const;
  double zones() const { return body_volume_cm3 / zone_volume_cm3(); }
};

/// Body-wide mote count: per-zone successes scaled by the number of
/// interrogation zones, rounded to nearest.
std::int64_t global_recommendation(std::int64_t zone_successes, const DeploymentGeometry& geom);

}  // namespace biolink::mac
