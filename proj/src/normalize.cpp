#include "avamap/normalize.hpp"

#include <cmath>

#include "avamap/fsio.hpp"
#include "json.hpp"

namespace avamap {

bool is_valid_observation(float v, const std::optional<float>& nodata, bool db_window) {
  if (!std::isfinite(v)) return false;
  if (nodata && bit_equal(v, *nodata)) return false;
  if (db_window && (v < kValidMinDb || v > kValidMaxDb)) return false;
  return true;
}

ChannelStats compute_stats(const std::vector<const RasterGrid*>& scenes, int channel,
                           bool db_window) {
  std::size_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const RasterGrid* scene : scenes) {
    if (channel < 0 || channel >= scene->channels)
      throw std::invalid_argument("channel index out of range");
    std::size_t n = 0;
    double s = 0.0, s2 = 0.0;
    const float* p = scene->plane(channel);
    const std::size_t px = scene->pixels();
    for (std::size_t i = 0; i < px; ++i) {
      const float v = p[i];
      if (!is_valid_observation(v, scene->nodata, db_window)) continue;
      ++n;
      s += v;
      s2 += static_cast<double>(v) * v;
    }
    count += n;
    sum += s;
    sum_sq += s2;
  }
  if (count < 2) throw std::invalid_argument("fewer than 2 valid observations for channel");
  const double mean = sum / static_cast<double>(count);
  const double variance = std::max(0.0, sum_sq / static_cast<double>(count) - mean * mean);
  const double std_dev = std::sqrt(variance);
  if (std_dev <= 0.0) throw std::invalid_argument("constant channel: standard deviation is zero");

  ChannelStats stats;
  stats.mean = mean;
  stats.std_dev = std_dev;
  stats.db_window = db_window;
  stats.sentinel = db_window ? (kSentinelDb - mean) / std_dev : 0.0;
  return stats;
}

RasterGrid normalize_channel(const RasterGrid& grid, const ChannelStats& stats, int channel) {
  if (channel < 0 || channel >= grid.channels)
    throw std::invalid_argument("channel index out of range");
  RasterGrid out(grid.width, grid.height, 1);
  out.geo_transform = grid.geo_transform;
  if (!grid.channel_names.empty()) out.channel_names = {grid.channel_name(channel)};

  const float* src = grid.plane(channel);
  float* dst = out.plane(0);
  const float sentinel = static_cast<float>(stats.sentinel);
  const std::size_t px = grid.pixels();
  for (std::size_t i = 0; i < px; ++i) {
    const float v = src[i];
    dst[i] = is_valid_observation(v, grid.nodata, stats.db_window)
                 ? static_cast<float>((v - stats.mean) / stats.std_dev)
                 : sentinel;
  }
  return out;
}

void write_stats(const StatsMap& stats, const std::string& path) {
  nlohmann::json doc;
  for (const auto& [name, s] : stats) {
    doc[name] = {{"mean", s.mean},
                 {"std", s.std_dev},
                 {"sentinel", s.sentinel},
                 {"db_window", s.db_window}};
  }
  atomic_write_text(path, doc.dump(2) + "\n");
}

StatsMap read_stats(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed stats file " + path + ": " + e.what());
  }
  StatsMap stats;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    ChannelStats s;
    s.mean = it.value().at("mean").get<double>();
    s.std_dev = it.value().at("std").get<double>();
    s.sentinel = it.value().at("sentinel").get<double>();
    s.db_window = it.value().value("db_window", true);
    stats[it.key()] = s;
  }
  return stats;
}

}  // namespace avamap
