#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdfusion/configs.hpp"
#include "rdfusion/types.hpp"

namespace rdfusion {

// On-disk frame layout. The RD cube is stored with a fixed header
// (magic "RDF1", u32 version, u32 channels, u32 range_bins, u32 doppler_bins,
// little-endian) followed by float32 little-endian payload, real/imaginary
// interleaved. Images use the same scheme under magic "IMG1"; free-space
// masks are raw 1-byte-per-cell rasters whose dims come from the manifest;
// labels are a JSON array of {id, range_m, azimuth_deg, doppler_mps}.
struct FrameFiles {
  std::string rd;
  std::string image;
  std::string labels;
  std::string mask;
};

constexpr uint32_t kRdFormatVersion = 1;

FrameFiles default_frame_files(int64_t frame_id);

void write_rd_file(const std::filesystem::path& path, const ComplexRDTensor& rd);
ComplexRDTensor read_rd_file(const std::filesystem::path& path);

void write_image_file(const std::filesystem::path& path, const CameraFrame& frame);
CameraFrame read_image_file(const std::filesystem::path& path);

// Accepts the raw float raster above or an 8-bit RGB(A) PNG scaled to [0,1].
CameraFrame load_camera_image(const std::filesystem::path& path);

void write_mask_file(const std::filesystem::path& path, const FreeSpaceMask& mask);
FreeSpaceMask read_mask_file(const std::filesystem::path& path, const PolarGridSpec& grid);

void write_labels_file(const std::filesystem::path& path, const std::vector<VehicleLabel>& labels);
std::vector<VehicleLabel> read_labels_file(const std::filesystem::path& path);

void write_frame(const std::filesystem::path& dir, const FrameSample& sample,
                 const FrameFiles& files, const PolarGridSpec& seg_grid);
FrameSample read_frame(const std::filesystem::path& dir, const FrameFiles& files,
                       const PolarGridSpec& seg_grid, int64_t frame_id, uint64_t seed);

json grid_to_json(const PolarGridSpec& grid);
PolarGridSpec grid_from_json(const json& j);

struct FrameEntry {
  int64_t frame_id = 0;
  uint64_t seed = 0;
  FrameFiles files;
};

// A generated dataset directory: dataset.json manifest plus per-frame files.
class Dataset {
 public:
  static Dataset open(const std::filesystem::path& dir);

  const std::filesystem::path& dir() const { return dir_; }
  const PolarGridSpec& detection_grid() const { return det_grid_; }
  const PolarGridSpec& segmentation_grid() const { return seg_grid_; }
  const json& manifest() const { return manifest_; }

  const std::vector<FrameEntry>& split(const std::string& name) const;
  int64_t size(const std::string& name) const { return static_cast<int64_t>(split(name).size()); }
  FrameSample load(const std::string& split_name, int64_t index) const;

 private:
  std::filesystem::path dir_;
  PolarGridSpec det_grid_;
  PolarGridSpec seg_grid_;
  json manifest_;
  std::vector<FrameEntry> train_, val_, test_;
};

}  // namespace rdfusion
