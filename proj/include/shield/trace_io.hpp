#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "shield/types.hpp"

namespace shield {

// One observed co-location of two nodes. Pairs are canonical (node_a < node_b)
// after parsing; duration is strictly positive.
struct EncounterEvent {
  NodeId node_a = 0;
  NodeId node_b = 0;
  std::int64_t start_s = 0;
  std::int64_t duration_s = 0;
  LocationId location = 0;

  auto operator<=>(const EncounterEvent&) const = default;
};

struct CrimeRecord {
  std::int64_t timestamp_s = 0;
  LocationId location = 0;
  std::string crime_type;
  int severity = 0;  // 0-255

  auto operator<=>(const CrimeRecord&) const = default;
};

struct DensitySample {
  int hour_bin = 0;         // 0-23
  std::int64_t count = 0;   // active users observed in that hour bin

  auto operator<=>(const DensitySample&) const = default;
};

struct ScheduledIncident {
  std::int64_t time_s = 0;
  LocationId location = 0;
  std::string type;  // short crime code, e.g. ASSAULT
  int severity = 0;

  auto operator<=>(const ScheduledIncident&) const = default;
};

// Stand-in for the unavailable campus datasets: a community-structured world
// with diurnal activity, a crime history, and a density series.
struct SyntheticWorldConfig {
  unsigned n_nodes = 40;
  unsigned n_communities = 4;
  unsigned n_locations = 12;
  std::int64_t sim_duration_s = 7 * 86400;
  double p_home = 0.8;          // probability a move stays in the home zone
  unsigned n_crimes = 2000;     // historical crime-log size
  double density_coupling = 0.65;  // crime-hour mass drawn from the density shape
  std::vector<ScheduledIncident> incident_schedule;
  std::uint64_t rng_seed = 42;

  void validate() const;  // throws ConfigError
};

struct SyntheticWorld {
  SyntheticWorldConfig cfg;
  std::vector<unsigned> community;  // node -> community id
  // Slot-major schedules; location is meaningful only where active.
  std::vector<std::vector<LocationId>> slot_location;  // [node][slot]
  std::vector<std::vector<std::uint8_t>> slot_active;  // [node][slot]
  std::vector<EncounterEvent> encounters;
  std::vector<CrimeRecord> crimes;
  std::vector<DensitySample> density;  // 24 bins

  std::int64_t n_slots() const { return cfg.sim_duration_s / kSlotSeconds; }
};

// Parsers. All reject malformed rows with the offending line number.
std::vector<EncounterEvent> parse_encounter_trace(const std::filesystem::path& path);
std::vector<CrimeRecord> parse_crime_log(const std::filesystem::path& path);
std::vector<DensitySample> parse_density_series(const std::filesystem::path& path);
std::vector<std::pair<NodeId, unsigned>> parse_community_map(const std::filesystem::path& path);

// Serializers, inverse of the parsers (LF endings, header row).
void write_encounter_trace(std::ostream& out, std::span<const EncounterEvent> events);
void write_crime_log(std::ostream& out, std::span<const CrimeRecord> records);
void write_density_series(std::ostream& out, std::span<const DensitySample> samples);
void write_community_map(std::ostream& out,
                         std::span<const std::pair<NodeId, unsigned>> communities);

// JSON loaders for the gen-traces config (same object shape is embedded
// under "world.synthetic" in a simulation config).
SyntheticWorldConfig world_config_from_json_text(const std::string& text);
SyntheticWorldConfig load_world_config(const std::filesystem::path& path);

// Deterministic for a fixed config (all randomness flows from cfg.rng_seed).
SyntheticWorld generate_synthetic_world(const SyntheticWorldConfig& cfg);

// Writes encounters.csv, crime.csv, density.csv, communities.csv into dir.
void write_world(const SyntheticWorld& world, const std::filesystem::path& dir);

// Hour-of-day activity weights of the synthetic population (24 values in
// (0,1)): a daytime bell plus a smaller nighttime bump.
const std::array<double, 24>& activity_curve();

}  // namespace shield
