#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avamap/raster.hpp"

namespace avamap {

struct PatchSpec {
  int size = 64;
  int stride = 32;

  void validate() const;
};

// Window origins along one axis: 0, stride, 2*stride, ..., plus a final
// origin clamped to dim - size when the regular sequence stops short of it.
// The clamp guarantees the windows cover every pixel.
std::vector<int> tile_origins(int dim, int size, int stride);

// Aligned per-event rasters. aux and mask are optional so the same type
// serves training scenes (mask present) and inference inputs (mask absent).
struct SceneStack {
  std::string event_id;
  RasterGrid pre;                   // SAR channels, one acquisition before the event
  RasterGrid post;                  // same channels, after the event
  std::optional<RasterGrid> aux;    // local incidence angle + slope
  std::optional<RasterGrid> mask;   // binary ground truth

  void validate() const;  // all present grids share width/height
};

struct PatchSample {
  std::string event_id;
  int origin_row = 0;
  int origin_col = 0;
  RasterGrid pre;
  RasterGrid post;
  std::optional<RasterGrid> aux;
  RasterGrid mask;
  bool positive = false;  // true iff mask contains at least one 1
};

// Requires scene.mask; throws when the scene is smaller than spec.size.
std::vector<PatchSample> extract_patches(const SceneStack& scene, const PatchSpec& spec);

struct AugmentConfig {
  double flip_prob = 0.5;
  double rot90_prob = 0.5;
  double rotate_deg = 10.0;      // affine rotation range, +/- degrees
  double translate_frac = 0.05;  // +/- fraction of patch size
  double scale_min = 0.9;
  double scale_max = 1.1;
  double shear_deg = 5.0;        // +/- degrees
  double noise_std = 0.05;       // additive, normalized units, SAR only
  double gain_min = 0.95;        // multiplicative, SAR only
  double gain_max = 1.05;
  std::vector<float> sar_fill;   // per-SAR-channel border fill (the channel sentinel)

  static AugmentConfig disabled();
  void validate() const;
};

// One shared geometric draw applied to pre/post/aux/mask (mask resampled
// nearest-neighbor, the rest bilinear); radiometric noise and gain touch only
// the SAR channels. Pure function of (sample, config, seed).
PatchSample augment(const PatchSample& sample, const AugmentConfig& config, std::uint64_t seed);

// Indices of one balanced training epoch: all positives (or positives_cap of
// them) plus an equal number of negatives drawn without replacement with
// per-event quotas as equal as the pools allow. Seeded and reproducible.
std::vector<std::size_t> balanced_epoch(const std::vector<PatchSample>& samples,
                                        std::uint64_t seed, std::size_t positives_cap = 0);

struct ManifestRow {
  std::string event_id;
  std::string split;  // train | val | test
  int origin_row = 0;
  int origin_col = 0;
  bool positive = false;
  std::string path;  // patch raster base path, relative to the manifest
};

void write_manifest(const std::string& path, const std::vector<ManifestRow>& rows);
std::vector<ManifestRow> read_manifest(const std::string& path);

// One container raster per sample: pre channels, post channels, optional aux
// channels, then the mask as the last channel.
void write_patch(const PatchSample& sample, const std::string& base_path);
PatchSample read_patch(const std::string& base_path, bool has_aux);

}  // namespace avamap
