#include "rdfusion/configs.hpp"

#include <fstream>
#include <set>

#include "rdfusion/errors.hpp"

namespace rdfusion {

namespace {

// Strict field reader: every key in `j` must be consumed by one of the
// declared fields, otherwise the config is rejected.
class StrictObject {
 public:
  StrictObject(const json& j, std::string scope) : j_(j), scope_(std::move(scope)) {
    if (!j.is_object()) throw ConfigError(scope_ + ": expected a JSON object");
  }

  template <typename T>
  void field(const char* key, T& out) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) return;  // keep default
    try {
      out = it->get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(scope_ + "." + key + ": " + e.what());
    }
  }

  const json* child(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) {
        throw ConfigError(scope_ + ": unknown key '" + it.key() + "'");
      }
    }
  }

 private:
  const json& j_;
  std::string scope_;
  std::set<std::string> seen_;
};

}  // namespace

std::string to_string(FusionMode m) {
  switch (m) {
    case FusionMode::kFusion: return "fusion";
    case FusionMode::kCameraOnly: return "camera_only";
    case FusionMode::kRadarOnly: return "radar_only";
  }
  return "fusion";
}

std::string to_string(TaskSet t) {
  switch (t) {
    case TaskSet::kDetection: return "detection";
    case TaskSet::kSegmentation: return "segmentation";
    case TaskSet::kMultitask: return "multitask";
  }
  return "multitask";
}

FusionMode fusion_mode_from_string(const std::string& s) {
  if (s == "fusion") return FusionMode::kFusion;
  if (s == "camera_only") return FusionMode::kCameraOnly;
  if (s == "radar_only") return FusionMode::kRadarOnly;
  throw ConfigError("unknown mode '" + s + "' (expected fusion|camera_only|radar_only)");
}

TaskSet task_set_from_string(const std::string& s) {
  if (s == "detection") return TaskSet::kDetection;
  if (s == "segmentation") return TaskSet::kSegmentation;
  if (s == "multitask") return TaskSet::kMultitask;
  throw ConfigError("unknown tasks '" + s + "' (expected detection|segmentation|multitask)");
}

void RadarConfig::validate() const {
  if (n_tx != 12) throw ConfigError("RadarConfig: n_tx must be 12");
  if (n_rx != 16) throw ConfigError("RadarConfig: n_rx must be 16");
  if (delta <= 0 || delta >= d_max) throw ConfigError("RadarConfig: require 0 < delta < d_max");
  if (noise_sigma < 0.0) throw ConfigError("RadarConfig: noise_sigma must be >= 0");
  if (rd_range_res <= 0.0 || doppler_res_mps <= 0.0) {
    throw ConfigError("RadarConfig: resolutions must be positive");
  }
}

void SceneConfig::validate() const {
  if (n_targets_min < 0 || n_targets_max < n_targets_min) {
    throw ConfigError("SceneConfig: bad target count range");
  }
  if (range_min_m <= 0.0 || range_max_m <= range_min_m) {
    throw ConfigError("SceneConfig: bad range bounds");
  }
  if (azimuth_max_deg <= azimuth_min_deg) throw ConfigError("SceneConfig: bad azimuth bounds");
  if (road_half_width_min_m <= 0.0 || road_half_width_max_m < road_half_width_min_m) {
    throw ConfigError("SceneConfig: bad road width bounds");
  }
  if (vehicle_length_m <= 0.0 || vehicle_width_m <= 0.0) {
    throw ConfigError("SceneConfig: bad vehicle footprint");
  }
}

void LossConfig::validate() const {
  if (alpha < 0.0 || beta < 0.0) throw ConfigError("LossConfig: alpha/beta must be >= 0");
  if (focal_gamma < 0.0) throw ConfigError("LossConfig: focal_gamma must be >= 0");
  if (focal_alpha < 0.0 || focal_alpha > 1.0) throw ConfigError("LossConfig: focal_alpha in [0,1]");
  if (reduction != "mean" && reduction != "sum") {
    throw ConfigError("LossConfig: reduction must be 'mean' or 'sum'");
  }
  if (prob_clamp <= 0.0 || prob_clamp >= 0.5) throw ConfigError("LossConfig: bad prob_clamp");
}

void OptimizerConfig::validate() const {
  if (lr <= 0.0) throw ConfigError("OptimizerConfig: lr must be positive");
  if (lr_decay <= 0.0 || lr_decay > 1.0) throw ConfigError("OptimizerConfig: lr_decay in (0,1]");
  if (lr_decay_epochs <= 0) throw ConfigError("OptimizerConfig: lr_decay_epochs must be positive");
  if (batch_size <= 0 || epochs <= 0) throw ConfigError("OptimizerConfig: batch/epochs positive");
}

void DataConfig::validate() const {
  if (n_frames <= 0) throw ConfigError("DataConfig: n_frames must be positive");
  const double s = train_frac + val_frac + test_frac;
  if (train_frac < 0 || val_frac < 0 || test_frac < 0 || s > 1.0 + 1e-9) {
    throw ConfigError("DataConfig: split fractions must be nonnegative and sum to <= 1");
  }
  if (prefetch_batches < 0) throw ConfigError("DataConfig: prefetch_batches must be >= 0");
  if (cls_dilate < 0) throw ConfigError("DataConfig: cls_dilate must be >= 0");
}

void RunConfig::validate() const {
  if (width_mult <= 0.0 || width_mult > 8.0) throw ConfigError("RunConfig: width_mult in (0,8]");
  optimizer.validate();
  loss.validate();
  data.validate();
  scene.validate();
  radar.validate();
}

json to_json(const RunConfig& c) {
  json j;
  j["mode"] = to_string(c.mode);
  j["tasks"] = to_string(c.tasks);
  j["variational"] = c.variational;
  j["width_mult"] = c.width_mult;
  j["seed"] = c.seed;
  j["optimizer"] = {{"lr", c.optimizer.lr},
                    {"lr_decay", c.optimizer.lr_decay},
                    {"lr_decay_epochs", c.optimizer.lr_decay_epochs},
                    {"batch_size", c.optimizer.batch_size},
                    {"epochs", c.optimizer.epochs}};
  j["loss"] = {{"alpha", c.loss.alpha},
               {"beta", c.loss.beta},
               {"focal_gamma", c.loss.focal_gamma},
               {"focal_alpha", c.loss.focal_alpha},
               {"reduction", c.loss.reduction},
               {"kl_weight", c.loss.kl_weight},
               {"prob_clamp", c.loss.prob_clamp}};
  j["eval"] = {{"conf_threshold", c.eval.conf_threshold},
               {"iou_threshold", c.eval.iou_threshold},
               {"miou_max_range_m", c.eval.miou_max_range_m},
               {"binarize_threshold", c.eval.binarize_threshold}};
  j["data"] = {{"n_frames", c.data.n_frames},
               {"train_frac", c.data.train_frac},
               {"val_frac", c.data.val_frac},
               {"test_frac", c.data.test_frac},
               {"prefetch_batches", c.data.prefetch_batches},
               {"cls_dilate", c.data.cls_dilate}};
  j["scene"] = {{"n_targets_min", c.scene.n_targets_min},
                {"n_targets_max", c.scene.n_targets_max},
                {"range_min_m", c.scene.range_min_m},
                {"range_max_m", c.scene.range_max_m},
                {"azimuth_min_deg", c.scene.azimuth_min_deg},
                {"azimuth_max_deg", c.scene.azimuth_max_deg},
                {"doppler_min_mps", c.scene.doppler_min_mps},
                {"doppler_max_mps", c.scene.doppler_max_mps},
                {"road_half_width_min_m", c.scene.road_half_width_min_m},
                {"road_half_width_max_m", c.scene.road_half_width_max_m},
                {"vehicle_length_m", c.scene.vehicle_length_m},
                {"vehicle_width_m", c.scene.vehicle_width_m},
                {"min_separation_long_m", c.scene.min_separation_long_m},
                {"min_separation_lat_m", c.scene.min_separation_lat_m}};
  j["radar"] = {{"n_tx", c.radar.n_tx},
                {"n_rx", c.radar.n_rx},
                {"d_max", c.radar.d_max},
                {"delta", c.radar.delta},
                {"rx_spacing", c.radar.rx_spacing},
                {"noise_sigma", c.radar.noise_sigma},
                {"rd_range_res", c.radar.rd_range_res},
                {"doppler_min_mps", c.radar.doppler_min_mps},
                {"doppler_res_mps", c.radar.doppler_res_mps},
                {"rng_seed", c.radar.rng_seed}};
  j["camera"] = {{"fx", c.camera.fx},
                 {"fy", c.camera.fy},
                 {"cx", c.camera.cx},
                 {"cy", c.camera.cy},
                 {"height_m", c.camera.height_m}};
  return j;
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  StrictObject root(j, "config");
  std::string mode = to_string(c.mode), tasks = to_string(c.tasks);
  root.field("mode", mode);
  root.field("tasks", tasks);
  c.mode = fusion_mode_from_string(mode);
  c.tasks = task_set_from_string(tasks);
  root.field("variational", c.variational);
  root.field("width_mult", c.width_mult);
  root.field("seed", c.seed);

  if (const json* o = root.child("optimizer")) {
    StrictObject s(*o, "optimizer");
    s.field("lr", c.optimizer.lr);
    s.field("lr_decay", c.optimizer.lr_decay);
    s.field("lr_decay_epochs", c.optimizer.lr_decay_epochs);
    s.field("batch_size", c.optimizer.batch_size);
    s.field("epochs", c.optimizer.epochs);
    s.finish();
  }
  if (const json* o = root.child("loss")) {
    StrictObject s(*o, "loss");
    s.field("alpha", c.loss.alpha);
    s.field("beta", c.loss.beta);
    s.field("focal_gamma", c.loss.focal_gamma);
    s.field("focal_alpha", c.loss.focal_alpha);
    s.field("reduction", c.loss.reduction);
    s.field("kl_weight", c.loss.kl_weight);
    s.field("prob_clamp", c.loss.prob_clamp);
    s.finish();
  }
  if (const json* o = root.child("eval")) {
    StrictObject s(*o, "eval");
    s.field("conf_threshold", c.eval.conf_threshold);
    s.field("iou_threshold", c.eval.iou_threshold);
    s.field("miou_max_range_m", c.eval.miou_max_range_m);
    s.field("binarize_threshold", c.eval.binarize_threshold);
    s.finish();
  }
  if (const json* o = root.child("data")) {
    StrictObject s(*o, "data");
    s.field("n_frames", c.data.n_frames);
    s.field("train_frac", c.data.train_frac);
    s.field("val_frac", c.data.val_frac);
    s.field("test_frac", c.data.test_frac);
    s.field("prefetch_batches", c.data.prefetch_batches);
    s.field("cls_dilate", c.data.cls_dilate);
    s.finish();
  }
  if (const json* o = root.child("scene")) {
    StrictObject s(*o, "scene");
    s.field("n_targets_min", c.scene.n_targets_min);
    s.field("n_targets_max", c.scene.n_targets_max);
    s.field("range_min_m", c.scene.range_min_m);
    s.field("range_max_m", c.scene.range_max_m);
    s.field("azimuth_min_deg", c.scene.azimuth_min_deg);
    s.field("azimuth_max_deg", c.scene.azimuth_max_deg);
    s.field("doppler_min_mps", c.scene.doppler_min_mps);
    s.field("doppler_max_mps", c.scene.doppler_max_mps);
    s.field("road_half_width_min_m", c.scene.road_half_width_min_m);
    s.field("road_half_width_max_m", c.scene.road_half_width_max_m);
    s.field("vehicle_length_m", c.scene.vehicle_length_m);
    s.field("vehicle_width_m", c.scene.vehicle_width_m);
    s.field("min_separation_long_m", c.scene.min_separation_long_m);
    s.field("min_separation_lat_m", c.scene.min_separation_lat_m);
    s.finish();
  }
  if (const json* o = root.child("radar")) {
    StrictObject s(*o, "radar");
    s.field("n_tx", c.radar.n_tx);
    s.field("n_rx", c.radar.n_rx);
    s.field("d_max", c.radar.d_max);
    s.field("delta", c.radar.delta);
    s.field("rx_spacing", c.radar.rx_spacing);
    s.field("noise_sigma", c.radar.noise_sigma);
    s.field("rd_range_res", c.radar.rd_range_res);
    s.field("doppler_min_mps", c.radar.doppler_min_mps);
    s.field("doppler_res_mps", c.radar.doppler_res_mps);
    s.field("rng_seed", c.radar.rng_seed);
    s.finish();
  }
  if (const json* o = root.child("camera")) {
    StrictObject s(*o, "camera");
    s.field("fx", c.camera.fx);
    s.field("fy", c.camera.fy);
    s.field("cx", c.camera.cx);
    s.field("cy", c.camera.cy);
    s.field("height_m", c.camera.height_m);
    s.finish();
  }
  root.finish();
  c.validate();
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("config file not found: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError("config parse error in " + path + ": " + e.what());
  }
  return run_config_from_json(j);
}

void save_run_config(const RunConfig& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot write config: " + path);
  out << to_json(c).dump(2) << "\n";
}

}  // namespace rdfusion
