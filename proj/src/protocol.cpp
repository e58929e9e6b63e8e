#include "shield/protocol.hpp"

#include <stdexcept>

#include "shield/errors.hpp"

namespace shield {

void ScanPolicy::validate() const {
  if (!(emergency_interval_s >= 0.0 && emergency_interval_s <= i_min_s &&
        i_min_s <= i_max_s)) {
    throw ConfigError("scan policy must satisfy 0 <= emergency <= i_min <= i_max");
  }
}

void LinkParams::validate() const {
  if (range_m <= 0.0) throw ConfigError("link range_m must be > 0");
  if (scan_lat_min_s > scan_lat_max_s) {
    throw ConfigError("link scan_min_s must be <= scan_max_s");
  }
  if (msg_bytes == 0) throw ConfigError("link msg_bytes must be > 0");
}

double EnergyLedger::total_energy() const {
  double sum = 0.0;
  for (const auto& [node, entry] : per_node) sum += entry.energy_units;
  return sum;
}

double scan_interval(const ScanPolicy& policy, double risk, bool emergency_active) {
  if (emergency_active) return policy.emergency_interval_s;
  return policy.i_max_s - risk * (policy.i_max_s - policy.i_min_s);
}

bool in_range(const LinkParams& link, double distance_m) {
  if (distance_m < 0.0) throw std::invalid_argument("distance must be >= 0");
  return distance_m <= link.range_m;
}

std::optional<double> scan_latency(const LinkParams& link, double distance_m, Rng& rng) {
  if (!in_range(link, distance_m)) return std::nullopt;
  return rng.uniform(link.scan_lat_min_s, link.scan_lat_max_s);
}

std::optional<double> transfer_time(const LinkParams& link, double distance_m,
                                    std::size_t n_bytes) {
  if (n_bytes == 0) throw std::invalid_argument("n_bytes must be > 0");
  if (!in_range(link, distance_m)) return std::nullopt;
  double base = link.c0_s + link.c1_s_per_m * distance_m;
  return base * (static_cast<double>(n_bytes) / static_cast<double>(link.msg_bytes));
}

void charge_scan(EnergyLedger& ledger, const EnergyParams& params, NodeId node) {
  auto& entry = ledger.per_node[node];
  entry.scans += 1;
  entry.energy_units += params.e_scan;
}

void charge_transfer(EnergyLedger& ledger, const EnergyParams& params, NodeId node,
                     std::size_t n_bytes) {
  auto& entry = ledger.per_node[node];
  entry.bytes += n_bytes;
  entry.energy_units += params.e_byte * static_cast<double>(n_bytes);
}

}  // namespace shield
