#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include "shield/rng.hpp"
#include "shield/types.hpp"

namespace shield {

// Scan cadence adapts to local crime risk; an active emergency overrides it.
struct ScanPolicy {
  double i_min_s = 10.0;            // interval at risk 1
  double i_max_s = 120.0;           // interval at risk 0
  double emergency_interval_s = 1.0;

  void validate() const;  // throws ConfigError
};

// Short-range link calibration: discovery takes 6-10 s up to 50 m, and a
// 184-byte one-hop transfer takes c0 + c1*d seconds, so scan + transfer stays
// inside the 13-20 s envelope with a 15-20 s mean over uniform distances.
struct LinkParams {
  double range_m = 50.0;
  double scan_lat_min_s = 6.0;
  double scan_lat_max_s = 10.0;
  double c0_s = 7.0;
  double c1_s_per_m = 0.06;
  std::size_t msg_bytes = 184;

  void validate() const;
};

struct EnergyParams {
  double e_scan = 1.0;   // units per scan
  double e_byte = 0.01;  // units per byte transferred
};

struct EnergyLedger {
  struct Entry {
    std::uint64_t scans = 0;
    std::uint64_t bytes = 0;
    double energy_units = 0.0;
  };
  std::map<NodeId, Entry> per_node;

  double total_energy() const;
};

// Emergency active -> emergency interval; otherwise linear in risk between
// i_max (risk 0) and i_min (risk 1).
double scan_interval(const ScanPolicy& policy, double risk, bool emergency_active);

// Inclusive 50 m cutoff. Negative distances are a caller bug.
bool in_range(const LinkParams& link, double distance_m);

// Uniform draw in [scan_lat_min, scan_lat_max] when in range, nullopt past
// the cutoff (peer not discovered).
std::optional<double> scan_latency(const LinkParams& link, double distance_m, Rng& rng);

// (c0 + c1*d) scaled by n_bytes/msg_bytes when in range.
std::optional<double> transfer_time(const LinkParams& link, double distance_m,
                                    std::size_t n_bytes);

void charge_scan(EnergyLedger& ledger, const EnergyParams& params, NodeId node);
void charge_transfer(EnergyLedger& ledger, const EnergyParams& params, NodeId node,
                     std::size_t n_bytes);

}  // namespace shield
