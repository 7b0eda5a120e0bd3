#pragma once

#include <map>
#include <string>
#include <vector>

#include "avamap/raster.hpp"

namespace avamap {

// SAR backscatter is usable only inside this dB window; radar shadow and
// layover fall far below it, preprocessing artifacts above it.
inline constexpr double kValidMinDb = -40.0;
inline constexpr double kValidMaxDb = 20.0;
inline constexpr double kSentinelDb = -50.0;

// Per-channel normalization parameters. For dB channels (db_window=true) the
// sentinel is the normalized image of -50 dB and therefore lies strictly
// below every valid normalized value. Auxiliary channels accept any finite
// value and use 0 as their fill marker.
struct ChannelStats {
  double mean = 0.0;
  double std_dev = 1.0;
  double sentinel = 0.0;
  bool db_window = true;
};

bool is_valid_observation(float v, const std::optional<float>& nodata, bool db_window);

// Mean and population standard deviation over valid observations of one
// channel across all given scenes, merged from per-scene (count, sum,
// sum-of-squares) triples. Throws when fewer than two valid observations
// exist or the channel is constant.
ChannelStats compute_stats(const std::vector<const RasterGrid*>& scenes, int channel,
                           bool db_window = true);

// Returns the normalized channel as a single-channel grid: valid values map
// to (v - mean) / std, invalid values to exactly the sentinel.
RasterGrid normalize_channel(const RasterGrid& grid, const ChannelStats& stats, int channel);

// Keyed by channel name ("vv", "vh", "lia", "slope", ...).
using StatsMap = std::map<std::string, ChannelStats>;

void write_stats(const StatsMap& stats, const std::string& path);
StatsMap read_stats(const std::string& path);

}  // namespace avamap
