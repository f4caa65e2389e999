#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "rdfusion/errors.hpp"

namespace rdfusion {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// BEV polar grid. Bin i covers [min + i*res, min + (i+1)*res); centers sit at
// the lower edge + res/2.
struct PolarGridSpec {
  int64_t range_bins = 0;
  int64_t azimuth_bins = 0;
  double range_res = 0.0;    // meters per bin
  double azimuth_res = 0.0;  // degrees per bin
  double azimuth_min = 0.0;  // degrees, lower edge of bin 0
  double range_min = 0.0;    // meters, lower edge of bin 0

  void validate() const {
    if (range_bins <= 0 || azimuth_bins <= 0 || range_res <= 0.0 || azimuth_res <= 0.0) {
      throw ConfigError("PolarGridSpec: bin counts and resolutions must be positive");
    }
  }

  double range_max() const { return range_min + static_cast<double>(range_bins) * range_res; }
  double azimuth_max() const { return azimuth_min + static_cast<double>(azimuth_bins) * azimuth_res; }

  bool contains(double range_m, double azimuth_deg) const {
    return range_m >= range_min && range_m < range_max() && azimuth_deg >= azimuth_min &&
           azimuth_deg < azimuth_max();
  }

  int64_t range_bin(double range_m) const {
    return static_cast<int64_t>(std::floor((range_m - range_min) / range_res));
  }
  int64_t azimuth_bin(double azimuth_deg) const {
    return static_cast<int64_t>(std::floor((azimuth_deg - azimuth_min) / azimuth_res));
  }
  double range_center(int64_t bin) const {
    return range_min + (static_cast<double>(bin) + 0.5) * range_res;
  }
  double azimuth_center(int64_t bin) const {
    return azimuth_min + (static_cast<double>(bin) + 0.5) * azimuth_res;
  }
};

// Detection grid: 128x224 at 0.8m / 0.8deg, spanning [-89.6, +89.6) degrees.
inline PolarGridSpec canonical_detection_grid() {
  return PolarGridSpec{128, 224, 0.8, 0.8, -89.6, 0.0};
}

// Segmentation grid: 256x224 at 0.4m over [0, 102.4m] x [-45, 45) degrees.
// 90/224 deg per azimuth bin; the grid is authoritative over the rounded
// per-bin figure quoted elsewhere.
inline PolarGridSpec canonical_segmentation_grid() {
  return PolarGridSpec{256, 224, 0.4, 90.0 / 224.0, -45.0, 0.0};
}

struct CartesianPoint {
  double x = 0.0;  // lateral, meters (right positive)
  double y = 0.0;  // forward, meters
};

// x = r*sin(az), y = r*cos(az). Azimuth in degrees, zero at boresight.
inline CartesianPoint polar_to_cartesian(double range_m, double azimuth_deg) {
  const double a = deg2rad(azimuth_deg);
  return {range_m * std::sin(a), range_m * std::cos(a)};
}

}  // namespace rdfusion
