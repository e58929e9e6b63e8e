#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <utility>

#include "shield/errors.hpp"
#include "shield/rng.hpp"
#include "shield/trace_io.hpp"

namespace shield {

namespace {

constexpr const char* kCrimeCodes[] = {"ASSAULT", "BURGLARY", "THEFT", "VANDALISM",
                                       "HARASSMENT"};

// Dwell at one location for 10-60 minutes before moving on.
constexpr std::uint64_t kDwellMinSlots = 10;
constexpr std::uint64_t kDwellMaxSlots = 60;

double wrapped_hour_distance(double a, double b) {
  double d = std::fabs(a - b);
  return std::min(d, 24.0 - d);
}

double bell(double h, double center, double sigma) {
  double d = wrapped_hour_distance(h, center);
  return std::exp(-d * d / (2.0 * sigma * sigma));
}

int sample_cdf24(const std::array<double, 24>& cdf, double u) {
  for (int h = 0; h < 24; ++h) {
    if (u < cdf[static_cast<std::size_t>(h)]) return h;
  }
  return 23;
}

}  // namespace

const std::array<double, 24>& activity_curve() {
  // Daytime bell (campus hours) plus a smaller nighttime bump (dorm activity);
  // the bump keeps midnight density well above zero, matching campus WLAN
  // series and letting the crime-hour coupling stay positive without moving
  // the crime peak away from midnight.
  static const std::array<double, 24> act = [] {
    std::array<double, 24> a{};
    for (int h = 0; h < 24; ++h) {
      a[static_cast<std::size_t>(h)] =
          0.10 + 0.72 * bell(h, 14.0, 4.0) + 0.28 * bell(h, 0.0, 2.5);
    }
    return a;
  }();
  return act;
}

void SyntheticWorldConfig::validate() const {
  if (n_nodes == 0) throw ConfigError("n_nodes must be >= 1");
  if (n_communities == 0 || n_communities > n_nodes) {
    throw ConfigError("n_communities must be in [1, n_nodes]");
  }
  if (n_locations < n_communities) {
    throw ConfigError("n_locations must be >= n_communities");
  }
  if (sim_duration_s <= 0) throw ConfigError("sim_duration_s must be > 0");
  if (p_home < 0.0 || p_home > 1.0) throw ConfigError("p_home must be in [0,1]");
  if (density_coupling < 0.0 || density_coupling > 1.0) {
    throw ConfigError("density_coupling must be in [0,1]");
  }
  for (const auto& inc : incident_schedule) {
    if (inc.time_s < 0) throw ConfigError("scheduled incident time must be >= 0");
    if (inc.severity < 0 || inc.severity > 255) {
      throw ConfigError("scheduled incident severity out of range 0-255");
    }
    if (inc.location >= n_locations) {
      throw ConfigError("scheduled incident location out of range");
    }
  }
}

SyntheticWorld generate_synthetic_world(const SyntheticWorldConfig& cfg) {
  cfg.validate();
  SyntheticWorld world;
  world.cfg = cfg;

  const std::int64_t n_slots = cfg.sim_duration_s / kSlotSeconds;
  const auto& act = activity_curve();

  world.community.resize(cfg.n_nodes);
  for (unsigned n = 0; n < cfg.n_nodes; ++n) world.community[n] = n % cfg.n_communities;

  // Home zones partition the location set round-robin across communities.
  std::vector<std::vector<LocationId>> home_locs(cfg.n_communities);
  for (LocationId l = 0; l < cfg.n_locations; ++l) {
    home_locs[l % cfg.n_communities].push_back(l);
  }

  world.slot_location.assign(cfg.n_nodes, std::vector<LocationId>(
                                              static_cast<std::size_t>(n_slots), 0));
  world.slot_active.assign(cfg.n_nodes, std::vector<std::uint8_t>(
                                            static_cast<std::size_t>(n_slots), 0));

  for (unsigned n = 0; n < cfg.n_nodes; ++n) {
    Rng rng = stream_rng(cfg.rng_seed, "mobility", n);
    const auto& home = home_locs[world.community[n]];
    bool active = false;
    LocationId loc = 0;
    std::int64_t dwell_left = 0;

    auto pick_location = [&] {
      if (rng.bernoulli(cfg.p_home)) {
        loc = home[rng.uniform_int(home.size())];
      } else {
        loc = static_cast<LocationId>(rng.uniform_int(cfg.n_locations));
      }
      dwell_left = static_cast<std::int64_t>(
          kDwellMinSlots + rng.uniform_int(kDwellMaxSlots - kDwellMinSlots + 1));
    };

    for (std::int64_t slot = 0; slot < n_slots; ++slot) {
      if (slot % 60 == 0) {
        int hour = static_cast<int>((slot / 60) % 24);
        bool was_active = active;
        active = rng.bernoulli(act[static_cast<std::size_t>(hour)]);
        if (active && !was_active) dwell_left = 0;  // fresh arrival
      }
      if (!active) continue;
      if (dwell_left <= 0) pick_location();
      world.slot_location[n][static_cast<std::size_t>(slot)] = loc;
      world.slot_active[n][static_cast<std::size_t>(slot)] = 1;
      --dwell_left;
    }
  }

  // Encounters: one event per maximal run of co-located slots. The recorded
  // location is the run's first slot.
  std::map<std::pair<NodeId, NodeId>, std::pair<std::int64_t, LocationId>> open_runs;
  std::vector<std::pair<NodeId, NodeId>> current;
  std::map<LocationId, std::vector<NodeId>> by_location;
  for (std::int64_t slot = 0; slot < n_slots; ++slot) {
    by_location.clear();
    for (unsigned n = 0; n < cfg.n_nodes; ++n) {
      if (world.slot_active[n][static_cast<std::size_t>(slot)]) {
        by_location[world.slot_location[n][static_cast<std::size_t>(slot)]].push_back(n);
      }
    }
    current.clear();
    for (const auto& [loc, nodes] : by_location) {
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
          auto key = std::make_pair(nodes[i], nodes[j]);
          current.push_back(key);
          if (!open_runs.count(key)) open_runs[key] = {slot, loc};
        }
      }
    }
    std::sort(current.begin(), current.end());
    for (auto it = open_runs.begin(); it != open_runs.end();) {
      if (!std::binary_search(current.begin(), current.end(), it->first)) {
        const auto& [start_slot, loc] = it->second;
        world.encounters.push_back({it->first.first, it->first.second,
                                    start_slot * kSlotSeconds,
                                    (slot - start_slot) * kSlotSeconds, loc});
        it = open_runs.erase(it);
      } else {
        ++it;
      }
    }
  }
  for (const auto& [pair, run] : open_runs) {
    world.encounters.push_back({pair.first, pair.second, run.first * kSlotSeconds,
                                (n_slots - run.first) * kSlotSeconds, run.second});
  }
  std::sort(world.encounters.begin(), world.encounters.end(),
            [](const EncounterEvent& a, const EncounterEvent& b) {
              return std::tie(a.start_s, a.node_a, a.node_b) <
                     std::tie(b.start_s, b.node_a, b.node_b);
            });

  // Density: active node-hours per hour-of-day bin (activity is decided per
  // hour, so 60 active slots == one node-hour).
  {
    std::array<std::int64_t, 24> slot_counts{};
    for (unsigned n = 0; n < cfg.n_nodes; ++n) {
      for (std::int64_t slot = 0; slot < n_slots; ++slot) {
        if (world.slot_active[n][static_cast<std::size_t>(slot)]) {
          slot_counts[static_cast<std::size_t>((slot / 60) % 24)]++;
        }
      }
    }
    for (int h = 0; h < 24; ++h) {
      world.density.push_back({h, slot_counts[static_cast<std::size_t>(h)] / 60});
    }
  }

  // Crime history. Hour-of-day is a three-way mixture: with probability
  // density_coupling the hour follows the population activity shape, else
  // 50/50 uniform or wrapped normal centered on the midnight bin (sigma 2 h).
  {
    Rng rng = stream_rng(cfg.rng_seed, "crime");
    const std::int64_t n_days = (cfg.sim_duration_s + 86399) / 86400;

    std::array<double, 24> act_cdf{};
    double act_sum = 0.0;
    for (double a : act) act_sum += a;
    double acc = 0.0;
    for (int h = 0; h < 24; ++h) {
      acc += act[static_cast<std::size_t>(h)] / act_sum;
      act_cdf[static_cast<std::size_t>(h)] = acc;
    }

    // Harmonic location weights: low-numbered locations are the hot spots.
    std::vector<double> loc_cdf(cfg.n_locations);
    {
      double wsum = 0.0;
      for (unsigned l = 0; l < cfg.n_locations; ++l) wsum += 1.0 / (1.0 + l);
      double a2 = 0.0;
      for (unsigned l = 0; l < cfg.n_locations; ++l) {
        a2 += (1.0 / (1.0 + l)) / wsum;
        loc_cdf[l] = a2;
      }
    }
    auto sample_location = [&](double u) {
      for (unsigned l = 0; l < cfg.n_locations; ++l) {
        if (u < loc_cdf[l]) return static_cast<LocationId>(l);
      }
      return static_cast<LocationId>(cfg.n_locations - 1);
    };

    for (unsigned k = 0; k < cfg.n_crimes; ++k) {
      std::int64_t day = static_cast<std::int64_t>(rng.uniform_int(
          static_cast<std::uint64_t>(n_days)));
      int hour;
      if (rng.uniform() < cfg.density_coupling) {
        hour = sample_cdf24(act_cdf, rng.uniform());
      } else if (rng.uniform() < 0.5) {
        hour = static_cast<int>(rng.uniform_int(24));
      } else {
        double g = rng.gaussian(0.5, 2.0);
        double w = std::fmod(g, 24.0);
        if (w < 0) w += 24.0;
        hour = static_cast<int>(w);
      }
      CrimeRecord rec;
      rec.timestamp_s = day * 86400 + hour * 3600 +
                        static_cast<std::int64_t>(rng.uniform_int(3600));
      rec.location = sample_location(rng.uniform());
      rec.crime_type = kCrimeCodes[rng.uniform_int(std::size(kCrimeCodes))];
      rec.severity = static_cast<int>(rng.uniform_int(256));
      world.crimes.push_back(std::move(rec));
    }
    for (const auto& inc : cfg.incident_schedule) {
      world.crimes.push_back({inc.time_s, inc.location, inc.type, inc.severity});
    }
    std::sort(world.crimes.begin(), world.crimes.end());
  }

  return world;
}

}  // namespace shield
