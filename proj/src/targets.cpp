#include "rdfusion/targets.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include "rdfusion/errors.hpp"

namespace rdfusion {

DetectionTargets encode_detection_targets(const std::vector<VehicleLabel>& labels,
                                          const PolarGridSpec& grid, int64_t cls_dilate) {
  grid.validate();
  auto cls = torch::zeros({1, grid.range_bins, grid.azimuth_bins}, torch::kFloat);
  auto reg = torch::zeros({2, grid.range_bins, grid.azimuth_bins}, torch::kFloat);
  auto cls_a = cls.accessor<float, 3>();
  auto reg_a = reg.accessor<float, 3>();

  // bin -> label occupying it; collisions resolved toward the nearer range
  std::map<std::pair<int64_t, int64_t>, VehicleLabel> cells;
  for (const auto& label : labels) {
    if (!grid.contains(label.range_m, label.azimuth_deg)) {
      std::ostringstream msg;
      msg << "label id " << label.id << " at (" << label.range_m << " m, " << label.azimuth_deg
          << " deg) outside grid coverage";
      throw OutOfGridError(msg.str());
    }
    const auto key = std::make_pair(grid.range_bin(label.range_m), grid.azimuth_bin(label.azimuth_deg));
    auto it = cells.find(key);
    if (it == cells.end()) {
      cells.emplace(key, label);
    } else {
      std::cerr << "[rdfusion] warning: labels " << it->second.id << " and " << label.id
                << " collide in detection bin (" << key.first << "," << key.second
                << "); keeping the nearer one\n";
      if (label.range_m < it->second.range_m) it->second = label;
    }
  }

  for (const auto& [key, label] : cells) {
    const auto [rb, ab] = key;
    cls_a[0][rb][ab] = 1.0f;
    reg_a[0][rb][ab] = static_cast<float>((label.range_m - grid.range_center(rb)) / grid.range_res);
    reg_a[1][rb][ab] =
        static_cast<float>((label.azimuth_deg - grid.azimuth_center(ab)) / grid.azimuth_res);
    for (int64_t dr = -cls_dilate; dr <= cls_dilate; ++dr) {
      for (int64_t da = -cls_dilate; da <= cls_dilate; ++da) {
        const int64_t r = rb + dr, a = ab + da;
        if (r < 0 || r >= grid.range_bins || a < 0 || a >= grid.azimuth_bins) continue;
        cls_a[0][r][a] = std::max(cls_a[0][r][a], 1.0f);
      }
    }
  }
  return {cls, reg};
}

}  // namespace rdfusion
