#pragma once

#include <vector>

#include "rdfusion/types.hpp"

namespace rdfusion {

// Rasterize labels onto the detection grid: one positive cls cell per label at
// its containing bin, regression channels store (true - bin_center) / res per
// axis. Two labels falling into one bin keep the nearer-range one (a warning
// is printed). Throws OutOfGridError for labels outside grid coverage.
DetectionTargets encode_detection_targets(const std::vector<VehicleLabel>& labels,
                                          const PolarGridSpec& grid, int64_t cls_dilate = 0);

}  // namespace rdfusion
