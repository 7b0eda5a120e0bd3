#include "avamap/raster.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "avamap/fsio.hpp"
#include "json.hpp"

namespace avamap {

namespace {

static_assert(std::endian::native == std::endian::little,
              "payload format is little-endian float32");
static_assert(sizeof(float) == 4);

// Strips a trailing .json or .bin so callers may pass either file or the base.
std::string base_path_of(const std::string& path) {
  if (path.size() > 5 && path.ends_with(".json")) return path.substr(0, path.size() - 5);
  if (path.size() > 4 && path.ends_with(".bin")) return path.substr(0, path.size() - 4);
  return path;
}

}  // namespace

bool bit_equal(float a, float b) {
  std::uint32_t ua = 0, ub = 0;
  std::memcpy(&ua, &a, 4);
  std::memcpy(&ub, &b, 4);
  return ua == ub;
}

RasterGrid::RasterGrid(int w, int h, int c, float fill)
    : width(w), height(h), channels(c),
      data(static_cast<std::size_t>(w) * h * c, fill) {}

float RasterGrid::at(int c, int y, int x) const {
  if (c < 0 || c >= channels || y < 0 || y >= height || x < 0 || x >= width)
    throw std::out_of_range("raster access out of range");
  return data[index(c, y, x)];
}

float& RasterGrid::at(int c, int y, int x) {
  if (c < 0 || c >= channels || y < 0 || y >= height || x < 0 || x >= width)
    throw std::out_of_range("raster access out of range");
  return data[index(c, y, x)];
}

bool RasterGrid::is_finite_value(int c, int y, int x) const {
  const float v = at(c, y, x);
  if (!std::isfinite(v)) return false;
  return !(nodata && bit_equal(v, *nodata));
}

std::string RasterGrid::channel_name(int c) const {
  if (c >= 0 && c < static_cast<int>(channel_names.size())) return channel_names[c];
  return "c" + std::to_string(c);
}

void RasterGrid::validate() const {
  if (width < 1 || height < 1 || channels < 1)
    throw std::invalid_argument("raster dimensions must be >= 1");
  if (data.size() != static_cast<std::size_t>(width) * height * channels)
    throw std::invalid_argument("raster data length does not match dimensions");
  if (!channel_names.empty() && channel_names.size() != static_cast<std::size_t>(channels))
    throw std::invalid_argument("channel_names length does not match channel count");
}

RasterGrid read_raster(const std::string& path) {
  const std::string base = base_path_of(path);
  const std::string header_path = base + ".json";
  const std::string payload_path = base + ".bin";

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(read_text_file(header_path));
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed raster header " + header_path + ": " + e.what());
  }

  RasterGrid grid;
  try {
    grid.width = header.at("width").get<int>();
    grid.height = header.at("height").get<int>();
    grid.channels = header.at("channels").get<int>();
    const std::string dtype = header.at("dtype").get<std::string>();
    if (dtype != "f32le") throw IoError("unsupported dtype tag: " + dtype);
    if (!header.at("nodata").is_null()) grid.nodata = header["nodata"].get<float>();
    if (!header.at("geo_transform").is_null()) {
      const auto gt = header["geo_transform"];
      if (!gt.is_array() || gt.size() != 6) throw IoError("geo_transform must have 6 entries");
      std::array<double, 6> arr{};
      for (int i = 0; i < 6; ++i) arr[i] = gt[i].get<double>();
      grid.geo_transform = arr;
    }
    grid.channel_names = header.at("channel_names").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError("invalid raster header " + header_path + ": " + e.what());
  }
  if (grid.width < 1 || grid.height < 1 || grid.channels < 1)
    throw IoError("invalid raster dimensions in " + header_path);
  if (grid.channel_names.size() != static_cast<std::size_t>(grid.channels))
    throw IoError("channel_names length mismatch in " + header_path);

  std::ifstream in(payload_path, std::ios::binary | std::ios::ate);
  if (!in) throw IoError("cannot open: " + payload_path);
  const std::size_t bytes = static_cast<std::size_t>(in.tellg());
  const std::size_t expected =
      static_cast<std::size_t>(grid.width) * grid.height * grid.channels * 4;
  if (bytes != expected)
    throw IoError("payload size mismatch in " + payload_path + ": got " +
                  std::to_string(bytes) + " bytes, header declares " + std::to_string(expected));
  grid.data.resize(expected / 4);
  in.seekg(0);
  in.read(reinterpret_cast<char*>(grid.data.data()), static_cast<std::streamsize>(bytes));
  if (!in) throw IoError("short read: " + payload_path);
  return grid;
}

void write_raster(const RasterGrid& grid, const std::string& path) {
  grid.validate();
  const std::string base = base_path_of(path);

  nlohmann::json header;
  header["width"] = grid.width;
  header["height"] = grid.height;
  header["channels"] = grid.channels;
  header["dtype"] = "f32le";
  header["nodata"] = grid.nodata ? nlohmann::json(*grid.nodata) : nlohmann::json(nullptr);
  header["geo_transform"] = grid.geo_transform
      ? nlohmann::json(std::vector<double>(grid.geo_transform->begin(), grid.geo_transform->end()))
      : nlohmann::json(nullptr);
  nlohmann::json names = nlohmann::json::array();
  for (int c = 0; c < grid.channels; ++c) names.push_back(grid.channel_name(c));
  header["channel_names"] = names;

  atomic_write_bytes(base + ".bin", grid.data.data(), grid.data.size() * 4);
  atomic_write_text(base + ".json", header.dump(2) + "\n");
}

RasterGrid bilinear_upsample(const RasterGrid& grid, int target_width, int target_height) {
  grid.validate();
  if (grid.channels != 1)
    throw std::invalid_argument("bilinear_upsample expects a single-channel grid");
  if (target_width < grid.width || target_height < grid.height)
    throw std::invalid_argument("bilinear_upsample target must not be smaller than source");

  RasterGrid out(target_width, target_height, 1);
  out.nodata = grid.nodata;
  out.channel_names = grid.channel_names;

  const float* src = grid.plane(0);
  float* dst = out.plane(0);
  // Multiply before dividing so that aligned centers land on exact integers.
  for (int yo = 0; yo < target_height; ++yo) {
    double sy = static_cast<double>(static_cast<long long>(yo) * grid.height) / target_height;
    sy = std::clamp(sy, 0.0, static_cast<double>(grid.height - 1));
    const int y0 = static_cast<int>(sy);
    const int y1 = std::min(y0 + 1, grid.height - 1);
    const double fy = sy - y0;
    for (int xo = 0; xo < target_width; ++xo) {
      double sx = static_cast<double>(static_cast<long long>(xo) * grid.width) / target_width;
      sx = std::clamp(sx, 0.0, static_cast<double>(grid.width - 1));
      const int x0 = static_cast<int>(sx);
      const int x1 = std::min(x0 + 1, grid.width - 1);
      const double fx = sx - x0;
      const double top = src[y0 * grid.width + x0] * (1.0 - fx) + src[y0 * grid.width + x1] * fx;
      const double bot = src[y1 * grid.width + x0] * (1.0 - fx) + src[y1 * grid.width + x1] * fx;
      dst[yo * target_width + xo] = static_cast<float>(top * (1.0 - fy) + bot * fy);
    }
  }
  return out;
}

}  // namespace avamap
