#include "shield/advisory.hpp"

#include <algorithm>
#include <stdexcept>

namespace shield {

RiskProfile build_risk_profile(std::span<const CrimeRecord> records) {
  RiskProfile profile;
  if (records.empty()) return profile;

  profile.window_start_s = records.front().timestamp_s;
  profile.window_end_s = records.front().timestamp_s;
  double max_raw = 0.0;
  for (const auto& rec : records) {
    profile.window_start_s = std::min(profile.window_start_s, rec.timestamp_s);
    profile.window_end_s = std::max(profile.window_end_s, rec.timestamp_s);
    auto& row = profile.risk[rec.location];
    double& cell = row[static_cast<std::size_t>(hour_of_day(rec.timestamp_s))];
    cell += 1.0 + rec.severity / 255.0;
    max_raw = std::max(max_raw, cell);
  }
  for (auto& [loc, row] : profile.risk) {
    for (double& cell : row) cell /= max_raw;
  }
  return profile;
}

double risk_score(const RiskProfile& profile, LocationId location, int hour) {
  if (hour < 0 || hour >= 24) {
    throw std::out_of_range("hour out of range 0-23: " + std::to_string(hour));
  }
  auto it = profile.risk.find(location);
  if (it == profile.risk.end()) return 0.0;
  return it->second[static_cast<std::size_t>(hour)];
}

std::vector<std::pair<LocationId, double>> rank_locations(const RiskProfile& profile,
                                                          std::optional<int> hour) {
  if (hour && (*hour < 0 || *hour >= 24)) {
    throw std::out_of_range("hour out of range 0-23: " + std::to_string(*hour));
  }
  std::vector<std::pair<LocationId, double>> out;
  out.reserve(profile.risk.size());
  for (const auto& [loc, row] : profile.risk) {
    double agg = 0.0;
    if (hour) {
      agg = row[static_cast<std::size_t>(*hour)];
    } else {
      for (double cell : row) agg += cell;
      agg /= 24.0;
    }
    out.emplace_back(loc, agg);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

bool is_cautionary(const RiskProfile& profile, const CautionPolicy& policy,
                   LocationId location, int hour) {
  return risk_score(profile, location, hour) >= policy.theta_caution;
}

}  // namespace shield
