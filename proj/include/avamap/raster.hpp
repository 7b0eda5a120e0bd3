#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace avamap {

// Raised for missing or corrupt files so the CLI can map I/O failures to a
// dedicated exit code.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// True iff a and b have the same bit pattern (distinguishes NaN payloads and
// signed zeros; nodata comparisons use this).
bool bit_equal(float a, float b);

// W x H x C grid of 32-bit floats, channel-major then row-major inside each
// channel. Carries SAR channels, auxiliaries, probabilities and masks alike.
// Treated as immutable once filled; cheap to move, safe to share across
// parallel readers.
struct RasterGrid {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<float> data;  // size = width * height * channels
  std::optional<float> nodata;
  std::optional<std::array<double, 6>> geo_transform;
  std::vector<std::string> channel_names;  // empty, or one per channel

  RasterGrid() = default;
  RasterGrid(int w, int h, int c, float fill = 0.0f);

  std::size_t index(int c, int y, int x) const {
    return (static_cast<std::size_t>(c) * height + y) * width + x;
  }
  std::size_t pixels() const { return static_cast<std::size_t>(width) * height; }

  // Bounds-checked access; throws std::out_of_range.
  float at(int c, int y, int x) const;
  float& at(int c, int y, int x);

  // Unchecked access for hot loops.
  float value(int c, int y, int x) const { return data[index(c, y, x)]; }
  float* plane(int c) { return data.data() + static_cast<std::size_t>(c) * pixels(); }
  const float* plane(int c) const { return data.data() + static_cast<std::size_t>(c) * pixels(); }

  // Finite and not bit-equal to the nodata marker.
  bool is_finite_value(int c, int y, int x) const;

  std::string channel_name(int c) const;

  // Throws std::invalid_argument when the invariants do not hold.
  void validate() const;
};

// Container format: JSON header sidecar `<base>.json` plus raw little-endian
// float32 payload `<base>.bin`. `path` may be the base name or either file.
RasterGrid read_raster(const std::string& path);
void write_raster(const RasterGrid& grid, const std::string& path);

// Bilinear interpolation of a single-channel grid onto a larger grid.
// Pixel values live at cell centers; source center i maps to target center
// i * (target_dim / source_dim), so integer-factor upsampling reproduces the
// source values exactly on the aligned centers. Edge samples clamp.
RasterGrid bilinear_upsample(const RasterGrid& grid, int target_width, int target_height);

}  // namespace avamap
