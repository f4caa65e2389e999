#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "rdfusion/geometry.hpp"

namespace rdfusion {

using json = nlohmann::json;

// MIMO radar front-end parameters. delta is the per-Tx Doppler-bin shift; the
// 12 Tx signatures of one target land at (d + k*delta) mod d_max, k = 1..12.
struct RadarConfig {
  int64_t n_tx = 12;
  int64_t n_rx = 16;
  int64_t d_max = 256;          // Doppler bins
  int64_t delta = 16;           // Doppler-bin shift per Tx
  double rx_spacing = 0.5;      // receive element spacing, wavelengths
  double noise_sigma = 0.05;    // complex Gaussian noise amplitude (linear)
  double rd_range_res = 0.2;    // meters per RD range bin (512 bins = 102.4 m)
  double doppler_min_mps = -51.2;
  double doppler_res_mps = 0.4;  // m/s per Doppler bin
  uint64_t rng_seed = 0;

  void validate() const;
};

// Scene sampling bounds for the synthetic generator.
struct SceneConfig {
  int64_t n_targets_min = 1;
  int64_t n_targets_max = 4;
  double range_min_m = 8.0;
  double range_max_m = 34.0;
  double azimuth_min_deg = -40.0;
  double azimuth_max_deg = 40.0;
  double doppler_min_mps = -12.0;
  double doppler_max_mps = 12.0;
  double road_half_width_min_m = 7.0;
  double road_half_width_max_m = 11.0;
  double vehicle_length_m = 4.0;
  double vehicle_width_m = 1.8;
  // Minimum separation so footprints (and the IoU-0.5 match regions) of
  // distinct vehicles never overlap.
  double min_separation_long_m = 4.5;
  double min_separation_lat_m = 2.2;

  void validate() const;
};

// Pinhole model for the footprint renderer; flat ground at z = 0.
struct CameraIntrinsics {
  double fx = 240.0;
  double fy = 240.0;
  double cx = 240.0;
  double cy = 60.0;       // horizon row
  double height_m = 1.5;  // mounting height above ground
};

enum class FusionMode { kFusion, kCameraOnly, kRadarOnly };
enum class TaskSet { kDetection, kSegmentation, kMultitask };

std::string to_string(FusionMode m);
std::string to_string(TaskSet t);
FusionMode fusion_mode_from_string(const std::string& s);
TaskSet task_set_from_string(const std::string& s);

struct LossConfig {
  double alpha = 100.0;       // detection regression weight
  double beta = 100.0;        // segmentation weight in the multitask loss
  double focal_gamma = 2.0;
  double focal_alpha = 0.25;
  std::string reduction = "mean";  // "mean" | "sum"
  double kl_weight = 0.0;          // optional latent regularizer, off by default
  double prob_clamp = 1e-7;

  void validate() const;
};

struct OptimizerConfig {
  double lr = 1e-4;
  double lr_decay = 0.9;
  int64_t lr_decay_epochs = 10;
  int64_t batch_size = 4;
  int64_t epochs = 100;

  void validate() const;
};

struct EvalConfig {
  double conf_threshold = 0.2;
  double iou_threshold = 0.5;
  double miou_max_range_m = 50.0;
  double binarize_threshold = 0.5;
};

struct DataConfig {
  int64_t n_frames = 100;
  double train_frac = 0.70;
  double val_frac = 0.15;
  double test_frac = 0.15;
  int64_t prefetch_batches = 2;  // 0 = synchronous loading
  int64_t cls_dilate = 0;        // dilation radius for positive cells

  void validate() const;
};

// Full run configuration. Canonical defaults reproduce the published training
// setup (Adam, lr 1e-4 decayed 0.9 every 10 epochs, batch 4, 100 epochs,
// alpha = beta = 100).
struct RunConfig {
  FusionMode mode = FusionMode::kFusion;
  TaskSet tasks = TaskSet::kMultitask;
  bool variational = true;
  double width_mult = 1.0;
  uint64_t seed = 1234;
  OptimizerConfig optimizer;
  LossConfig loss;
  EvalConfig eval;
  DataConfig data;
  SceneConfig scene;
  RadarConfig radar;
  CameraIntrinsics camera;

  void validate() const;

  bool detection_enabled() const { return tasks != TaskSet::kSegmentation; }
  bool segmentation_enabled() const { return tasks != TaskSet::kDetection; }
};

json to_json(const RunConfig& c);
RunConfig run_config_from_json(const json& j);
RunConfig load_run_config(const std::string& path);
void save_run_config(const RunConfig& c, const std::string& path);

}  // namespace rdfusion
