#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <vector>

#include "rdfusion/geometry.hpp"

namespace rdfusion {

inline constexpr int64_t kRxChannels = 16;
inline constexpr int64_t kRdRangeBins = 512;
inline constexpr int64_t kRdDopplerBins = 256;
inline constexpr int64_t kImageRows = 270;
inline constexpr int64_t kImageCols = 480;

struct VehicleLabel {
  double range_m = 0.0;
  double azimuth_deg = 0.0;
  double doppler_mps = 0.0;  // used by synthesis only
  int64_t id = 0;
};

// Complex range-Doppler cube, 16 x 512 x 256 (complex float).
struct ComplexRDTensor {
  torch::Tensor data;  // kComplexFloat, [16, 512, 256]

  static ComplexRDTensor zeros() {
    return {torch::zeros({kRxChannels, kRdRangeBins, kRdDopplerBins}, torch::kComplexFloat)};
  }
  bool canonical_shape() const {
    return data.defined() && data.dim() == 3 && data.size(0) == kRxChannels &&
           data.size(1) == kRdRangeBins && data.size(2) == kRdDopplerBins &&
           data.scalar_type() == torch::kComplexFloat;
  }
};

// Front-view color image, 3 x 270 x 480, values in [0, 1].
struct CameraFrame {
  torch::Tensor image;  // kFloat, [3, 270, 480]

  static CameraFrame zeros() {
    return {torch::zeros({3, kImageRows, kImageCols}, torch::kFloat)};
  }
  bool canonical_shape() const {
    return image.defined() && image.dim() == 3 && image.size(0) == 3 &&
           image.size(1) == kImageRows && image.size(2) == kImageCols &&
           image.scalar_type() == torch::kFloat;
  }
};

// Binary drivable-space mask on the segmentation grid, 1 = free.
struct FreeSpaceMask {
  torch::Tensor mask;  // kUInt8, [1, 256, 224]
};

// Ground truth maps on the detection grid.
struct DetectionTargets {
  torch::Tensor cls_map;  // kFloat, [1, 128, 224], values in [0, 1]
  torch::Tensor reg_map;  // kFloat, [2, 128, 224], (range offset, azimuth offset) in bins
};

struct FrameSample {
  ComplexRDTensor rd;
  CameraFrame camera;
  std::vector<VehicleLabel> labels;
  FreeSpaceMask freespace;
  int64_t frame_id = 0;
  uint64_t seed = 0;
};

struct LatentDistribution {
  torch::Tensor mu;       // [latent_dim]
  torch::Tensor log_var;  // [latent_dim]
};

struct DetectionPrediction {
  torch::Tensor cls;  // [1, 128, 224] sigmoid probabilities
  torch::Tensor reg;  // [2, 128, 224] offsets in bins
};

struct SegmentationPrediction {
  torch::Tensor seg;  // [1, 256, 224] sigmoid probabilities
};

struct Detection {
  double range_m = 0.0;
  double azimuth_deg = 0.0;
  double confidence = 0.0;
};

}  // namespace rdfusion
