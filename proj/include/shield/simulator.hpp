#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shield/advisory.hpp"
#include "shield/dissemination.hpp"
#include "shield/protocol.hpp"
#include "shield/trace_io.hpp"
#include "shield/trust.hpp"
#include "shield/types.hpp"

namespace shield {

struct IncidentSpec {
  std::int64_t time_s = 0;
  LocationId location = 0;
  int severity = 128;
  MsgType kind = MsgType::Emergency;
  std::optional<NodeId> node;  // victim; resolved from location when absent
  std::string payload = "SOS";
  std::optional<std::uint8_t> trust_filter;  // overrides the kind's default
  std::optional<std::uint8_t> service_mask;
};

struct TraceWorldPaths {
  std::filesystem::path encounters;
  std::filesystem::path crime;
};

struct SimConfig {
  // exactly one world source
  std::optional<SyntheticWorldConfig> synthetic;
  std::optional<TraceWorldPaths> traces;

  ScanPolicy scan;
  LinkParams link;
  EnergyParams energy;
  TrustParams trust;
  CautionPolicy caution;
  ServiceRegistry services;
  std::vector<IncidentSpec> incidents;

  std::uint64_t seed = 1;
  std::int64_t duration_s = 0;
  double availability_deadline_s = 120.0;

  void validate() const;  // throws ConfigError
};

// Parses the JSON config documented in the README; unknown keys are errors.
SimConfig sim_config_from_json_text(const std::string& text);
SimConfig load_sim_config(const std::filesystem::path& path);

// Flat event log, one row per simulation event. detail is k=v;k=v pairs.
struct LogRow {
  std::int64_t t_ms = 0;
  std::string event;
  NodeId node = 0;
  std::string detail;
};

struct EventLog {
  std::vector<LogRow> rows;
};

void write_event_log(std::ostream& out, const EventLog& log);
EventLog parse_event_log(const std::filesystem::path& path);

struct IncidentMetrics {
  int index = 0;
  std::int64_t time_s = 0;
  NodeId origin = 0;
  LocationId location = 0;
  int severity = 0;
  std::string kind;  // "emergency" | "alert"
  std::string msg_id_hex;
  std::optional<double> response_time_s;  // absent when nothing qualified
  bool available = false;
  std::uint64_t delivery_count = 0;
  std::uint64_t duplicate_count = 0;
};

struct NodeEnergy {
  NodeId node = 0;
  std::uint64_t scans = 0;
  std::uint64_t bytes = 0;
  double energy_units = 0.0;
};

struct MetricsReport {
  std::vector<IncidentMetrics> incidents;
  std::uint64_t total_scans = 0;
  std::uint64_t total_transfers = 0;
  std::uint64_t total_deliveries = 0;
  std::uint64_t total_duplicates = 0;
  std::uint64_t total_expired_drops = 0;
  std::uint64_t privacy_violations = 0;
  std::vector<NodeEnergy> energy;  // ascending node id
  double total_energy_units = 0.0;
  double availability_deadline_s = 120.0;
};

// Stable serialization (sorted keys); reruns of the same config+seed produce
// identical bytes.
std::string to_json_string(const MetricsReport& report);

struct MetricsParams {
  EnergyParams energy;
  double availability_deadline_s = 120.0;
};

// Rebuilds the full report from the event log alone; the live run uses this
// same path, so a parsed log replays to an identical report.
MetricsReport compute_metrics(const EventLog& log, const MetricsParams& params);

struct SimResult {
  EventLog log;
  MetricsReport report;
  EnergyLedger ledger;  // live ledger; must agree with the log-derived totals
};

SimResult run_simulation(const SimConfig& config);

}  // namespace shield
