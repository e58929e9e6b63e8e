#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "shield/trace_io.hpp"
#include "shield/types.hpp"

namespace shield {

// Location x hour-of-day crime risk, normalized so the hottest cell is 1.
struct RiskProfile {
  std::map<LocationId, std::array<double, 24>> risk;
  std::int64_t window_start_s = 0;
  std::int64_t window_end_s = 0;
};

struct CautionPolicy {
  double theta_caution = 0.5;
};

// raw[l][h] = sum over records at (l,h) of (1 + severity/255), then divided by
// the global max. Empty log yields an empty (all-zero) profile.
RiskProfile build_risk_profile(std::span<const CrimeRecord> records);

// Unknown locations score 0. Throws std::out_of_range for hour outside 0-23.
double risk_score(const RiskProfile& profile, LocationId location, int hour);

// Aggregate = the hour's risk, or the mean over all 24 hours when hour is
// absent. Descending, ties by ascending location id.
std::vector<std::pair<LocationId, double>> rank_locations(
    const RiskProfile& profile, std::optional<int> hour = std::nullopt);

// true iff risk >= theta_caution (theta 0 fires everywhere, 0 >= 0).
bool is_cautionary(const RiskProfile& profile, const CautionPolicy& policy,
                   LocationId location, int hour);

}  // namespace shield
