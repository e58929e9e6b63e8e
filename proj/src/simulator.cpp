#include "shield/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "shield/csv.hpp"
#include "shield/errors.hpp"
#include "shield/log.hpp"

namespace shield {

namespace {

std::int64_t ms_from_s(double seconds) {
  return static_cast<std::int64_t>(std::llround(seconds * 1000.0));
}

// ---------------------------------------------------------------------------
// World views: where everybody is and who can hear whom, slot-granular.

class ContactWorld {
 public:
  virtual ~ContactWorld() = default;
  virtual const std::vector<NodeId>& node_ids() const = 0;
  virtual bool is_active(NodeId n, std::int64_t t_s) const = 0;
  virtual std::optional<LocationId> location_of(NodeId n, std::int64_t t_s) const = 0;
  virtual std::vector<NodeId> contacts_of(NodeId n, std::int64_t t_s) const = 0;
  virtual const std::vector<EncounterEvent>& history() const = 0;
  virtual const std::vector<CrimeRecord>& crimes() const = 0;
  // (t_s, node, active, location) transitions, ascending time
  virtual std::vector<std::tuple<std::int64_t, NodeId, bool, LocationId>> change_points(
      std::int64_t horizon_s) const = 0;
};

class SyntheticContactWorld final : public ContactWorld {
 public:
  explicit SyntheticContactWorld(SyntheticWorld world) : world_(std::move(world)) {
    for (unsigned n = 0; n < world_.cfg.n_nodes; ++n) ids_.push_back(n);
  }

  const std::vector<NodeId>& node_ids() const override { return ids_; }

  bool is_active(NodeId n, std::int64_t t_s) const override {
    std::int64_t slot = t_s / kSlotSeconds;
    if (n >= ids_.size() || slot < 0 || slot >= world_.n_slots()) return false;
    return world_.slot_active[static_cast<std::size_t>(n)]
                             [static_cast<std::size_t>(slot)] != 0;
  }

  std::optional<LocationId> location_of(NodeId n, std::int64_t t_s) const override {
    if (!is_active(n, t_s)) return std::nullopt;
    std::int64_t slot = t_s / kSlotSeconds;
    return world_.slot_location[static_cast<std::size_t>(n)]
                               [static_cast<std::size_t>(slot)];
  }

  std::vector<NodeId> contacts_of(NodeId n, std::int64_t t_s) const override {
    std::vector<NodeId> out;
    auto loc = location_of(n, t_s);
    if (!loc) return out;
    for (NodeId peer : ids_) {
      if (peer == n) continue;
      if (location_of(peer, t_s) == loc) out.push_back(peer);
    }
    return out;
  }

  const std::vector<EncounterEvent>& history() const override {
    return world_.encounters;
  }

  const std::vector<CrimeRecord>& crimes() const override { return world_.crimes; }

  std::vector<std::tuple<std::int64_t, NodeId, bool, LocationId>> change_points(
      std::int64_t horizon_s) const override {
    std::vector<std::tuple<std::int64_t, NodeId, bool, LocationId>> out;
    std::int64_t slots = std::min(world_.n_slots(), horizon_s / kSlotSeconds);
    for (NodeId n : ids_) {
      bool prev_active = false;
      LocationId prev_loc = 0;
      for (std::int64_t slot = 0; slot < slots; ++slot) {
        bool active = world_.slot_active[static_cast<std::size_t>(n)]
                                        [static_cast<std::size_t>(slot)] != 0;
        LocationId loc = world_.slot_location[static_cast<std::size_t>(n)]
                                             [static_cast<std::size_t>(slot)];
        if (slot == 0 || active != prev_active || (active && loc != prev_loc)) {
          out.emplace_back(slot * kSlotSeconds, n, active, loc);
        }
        prev_active = active;
        prev_loc = loc;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  SyntheticWorld world_;
  std::vector<NodeId> ids_;
};

class TraceContactWorld final : public ContactWorld {
 public:
  TraceContactWorld(std::vector<EncounterEvent> events, std::vector<CrimeRecord> crimes)
      : events_(std::move(events)), crimes_(std::move(crimes)) {
    std::set<NodeId> ids;
    for (const auto& ev : events_) {
      ids.insert(ev.node_a);
      ids.insert(ev.node_b);
      intervals_[ev.node_a].push_back({ev.start_s, ev.start_s + ev.duration_s,
                                       ev.node_b, ev.location});
      intervals_[ev.node_b].push_back({ev.start_s, ev.start_s + ev.duration_s,
                                       ev.node_a, ev.location});
    }
    ids_.assign(ids.begin(), ids.end());
    for (auto& [n, list] : intervals_) {
      std::sort(list.begin(), list.end(), [](const Interval& a, const Interval& b) {
        return std::tie(a.start_s, a.peer) < std::tie(b.start_s, b.peer);
      });
    }
  }

  const std::vector<NodeId>& node_ids() const override { return ids_; }

  // Trace replay has no duty-cycle information; every node is on.
  bool is_active(NodeId, std::int64_t) const override { return true; }

  std::optional<LocationId> location_of(NodeId n, std::int64_t t_s) const override {
    auto it = intervals_.find(n);
    if (it == intervals_.end()) return std::nullopt;
    // last encounter context at or before t sets the node's location
    std::optional<LocationId> loc;
    for (const auto& iv : it->second) {
      if (iv.start_s > t_s) break;
      loc = iv.location;
    }
    return loc;
  }

  std::vector<NodeId> contacts_of(NodeId n, std::int64_t t_s) const override {
    std::vector<NodeId> out;
    auto it = intervals_.find(n);
    if (it == intervals_.end()) return out;
    for (const auto& iv : it->second) {
      if (iv.start_s > t_s) break;
      if (t_s < iv.end_s) out.push_back(iv.peer);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  const std::vector<EncounterEvent>& history() const override { return events_; }
  const std::vector<CrimeRecord>& crimes() const override { return crimes_; }

  std::vector<std::tuple<std::int64_t, NodeId, bool, LocationId>> change_points(
      std::int64_t horizon_s) const override {
    std::vector<std::tuple<std::int64_t, NodeId, bool, LocationId>> out;
    for (const auto& [n, list] : intervals_) {
      std::optional<LocationId> prev;
      for (const auto& iv : list) {
        if (iv.start_s >= horizon_s) break;
        if (!prev || *prev != iv.location) {
          out.emplace_back(iv.start_s, n, true, iv.location);
          prev = iv.location;
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Interval {
    std::int64_t start_s;
    std::int64_t end_s;  // exclusive
    NodeId peer;
    LocationId location;
  };
  std::vector<EncounterEvent> events_;
  std::vector<CrimeRecord> crimes_;
  std::map<NodeId, std::vector<Interval>> intervals_;
  std::vector<NodeId> ids_;
};

// ---------------------------------------------------------------------------
// Event queue. Ties break by (kind rank, node id, insertion order).

enum class EventKind : int {
  NodeMove = 0,
  IncidentStart = 1,
  TransferComplete = 2,
  ScanDue = 3,
  MessageExpire = 4,
};

struct QueuedEvent {
  std::int64_t t_ms = 0;
  EventKind kind = EventKind::ScanDue;
  NodeId node = 0;
  std::uint64_t seq = 0;

  bool move_active = false;
  LocationId move_loc = 0;
  int incident_idx = -1;
  DistressMessage msg;
  NodeId from = 0;
  MsgId expire_id{};
};

struct EventAfter {
  bool operator()(const QueuedEvent& a, const QueuedEvent& b) const {
    return std::tie(a.t_ms, a.kind, a.node, a.seq) >
           std::tie(b.t_ms, b.kind, b.node, b.seq);
  }
};

struct NodeState {
  std::int64_t next_scan_ms = -1;
  SeenSet seen;
  std::vector<DistressMessage> carried;
  std::set<std::pair<MsgId, NodeId>> offered;
};

std::string detail_str(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out.push_back(';');
    out += k;
    out.push_back('=');
    out += v;
  }
  return out;
}

std::map<std::string, std::string> parse_detail(const std::string& detail) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < detail.size()) {
    std::size_t semi = detail.find(';', pos);
    if (semi == std::string::npos) semi = detail.size();
    std::string_view item(detail.data() + pos, semi - pos);
    std::size_t eq = item.find('=');
    if (eq != std::string_view::npos) {
      out.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    }
    pos = semi + 1;
  }
  return out;
}

}  // namespace

void SimConfig::validate() const {
  if (synthetic.has_value() == traces.has_value()) {
    throw ConfigError("exactly one of world.synthetic / world.traces is required");
  }
  if (synthetic) synthetic->validate();
  if (duration_s <= 0) throw ConfigError("duration_s must be > 0");
  if (availability_deadline_s <= 0) {
    throw ConfigError("availability_deadline_s must be > 0");
  }
  scan.validate();
  link.validate();
  trust.validate();
  if (caution.theta_caution < 0.0 || caution.theta_caution > 1.0) {
    throw ConfigError("caution theta must be in [0,1]");
  }
  if (energy.e_scan < 0.0 || energy.e_byte < 0.0) {
    throw ConfigError("energy constants must be >= 0");
  }
  for (const auto& inc : incidents) {
    if (inc.severity < 0 || inc.severity > 255) {
      throw ConfigError("incident severity out of range 0-255");
    }
    if (inc.time_s < 0 || inc.time_s >= duration_s) {
      throw ConfigError("incident time must be in [0, duration)");
    }
    if (inc.payload.size() > kMaxPayload) {
      throw ConfigError("incident payload exceeds " + std::to_string(kMaxPayload) +
                        " bytes");
    }
  }
}

SimResult run_simulation(const SimConfig& config) {
  config.validate();

  std::unique_ptr<ContactWorld> world;
  if (config.synthetic) {
    world = std::make_unique<SyntheticContactWorld>(
        generate_synthetic_world(*config.synthetic));
  } else {
    world = std::make_unique<TraceContactWorld>(
        parse_encounter_trace(config.traces->encounters),
        parse_crime_log(config.traces->crime));
  }
  const auto& ids = world->node_ids();
  if (ids.empty()) throw ConfigError("world has no nodes");
  for (const auto& inc : config.incidents) {
    if (inc.node && !std::binary_search(ids.begin(), ids.end(), *inc.node)) {
      throw ConfigError("incident node " + std::to_string(*inc.node) +
                        " not present in world");
    }
  }

  auto [enc_matrix, dur_matrix] = build_matrices(world->history());
  TrustMatrix trust(enc_matrix, dur_matrix, config.trust, config.services);
  RiskProfile profile = build_risk_profile(world->crimes());

  const std::int64_t end_ms = config.duration_s * 1000;
  SimResult result;
  EnergyLedger& ledger = result.ledger;
  std::map<NodeId, NodeState> state;
  std::map<NodeId, Rng> node_rng;
  for (NodeId n : ids) {
    state[n];
    node_rng.emplace(n, stream_rng(config.seed, "node", n));
  }

  std::priority_queue<QueuedEvent, std::vector<QueuedEvent>, EventAfter> queue;
  std::uint64_t seq = 0;
  auto push = [&](QueuedEvent ev) {
    ev.seq = seq++;
    queue.push(std::move(ev));
  };

  auto log_row = [&](std::int64_t t_ms, const char* event, NodeId node,
                     std::string detail) {
    result.log.rows.push_back({t_ms, event, node, std::move(detail)});
  };

  auto risk_at = [&](NodeId n, std::int64_t t_s) {
    auto loc = world->location_of(n, t_s);
    if (!loc) return 0.0;
    return risk_score(profile, *loc, hour_of_day(t_s));
  };

  auto emergency_active = [&](const NodeState& st, std::int64_t t_s) {
    for (const auto& m : st.carried) {
      if (m.msg_type == MsgType::Emergency &&
          static_cast<std::uint64_t>(t_s) <= m.expires_at_s()) {
        return true;
      }
    }
    return false;
  };

  auto schedule_scan = [&](NodeId n, std::int64_t at_ms) {
    state[n].next_scan_ms = at_ms;
    QueuedEvent ev;
    ev.t_ms = at_ms;
    ev.kind = EventKind::ScanDue;
    ev.node = n;
    push(std::move(ev));
  };

  // Mobility transitions.
  for (const auto& [t_s, n, active, loc] : world->change_points(config.duration_s)) {
    QueuedEvent ev;
    ev.t_ms = t_s * 1000;
    ev.kind = EventKind::NodeMove;
    ev.node = n;
    ev.move_active = active;
    ev.move_loc = loc;
    push(std::move(ev));
  }

  // First scans: jittered within the node's initial interval so the
  // population does not scan in lockstep.
  for (NodeId n : ids) {
    double interval = scan_interval(config.scan, risk_at(n, 0), false);
    double offset = node_rng.at(n).uniform(0.0, interval);
    schedule_scan(n, ms_from_s(offset));
  }

  for (std::size_t i = 0; i < config.incidents.size(); ++i) {
    QueuedEvent ev;
    ev.t_ms = config.incidents[i].time_s * 1000;
    ev.kind = EventKind::IncidentStart;
    ev.node = config.incidents[i].node.value_or(0);
    ev.incident_idx = static_cast<int>(i);
    push(std::move(ev));
  }

  auto resolve_victim = [&](const IncidentSpec& inc, std::int64_t t_s) -> NodeId {
    if (inc.node) return *inc.node;
    for (NodeId n : ids) {
      if (world->location_of(n, t_s) == std::optional<LocationId>(inc.location)) {
        return n;
      }
    }
    for (NodeId n : ids) {
      if (world->is_active(n, t_s)) return n;
    }
    return ids.front();
  };

  while (!queue.empty() && queue.top().t_ms < end_ms) {
    QueuedEvent ev = queue.top();
    queue.pop();
    const std::int64_t t_s = ev.t_ms / 1000;

    switch (ev.kind) {
      case EventKind::NodeMove: {
        if (!ev.move_active) {
          log_row(ev.t_ms, "move", ev.node, "active=0");
          break;
        }
        bool caution =
            is_cautionary(profile, config.caution, ev.move_loc, hour_of_day(t_s));
        log_row(ev.t_ms, "move", ev.node,
                detail_str({{"active", "1"},
                            {"loc", std::to_string(ev.move_loc)},
                            {"caution", caution ? "1" : "0"}}));
        break;
      }

      case EventKind::IncidentStart: {
        const IncidentSpec& inc = config.incidents[static_cast<std::size_t>(ev.incident_idx)];
        NodeId victim = resolve_victim(inc, t_s);
        Rng irng = stream_rng(config.seed, "incident",
                              static_cast<std::uint64_t>(ev.incident_idx));
        DistressMessage msg =
            create_distress(victim, inc.kind, inc.severity, inc.location, inc.payload,
                            static_cast<std::uint64_t>(t_s), irng);
        if (inc.trust_filter) msg.trust_filter = *inc.trust_filter;
        if (inc.service_mask) msg.service_mask = *inc.service_mask;
        auto& st = state[victim];
        st.seen.insert(msg.msg_id);
        st.carried.push_back(msg);
        log_row(ev.t_ms, "incident", victim,
                detail_str({{"idx", std::to_string(ev.incident_idx)},
                            {"msg", to_hex(msg.msg_id)},
                            {"loc", std::to_string(inc.location)},
                            {"sev", std::to_string(inc.severity)},
                            {"kind", inc.kind == MsgType::Emergency ? "emergency"
                                                                    : "alert"}}));
        QueuedEvent expire;
        expire.t_ms = static_cast<std::int64_t>(msg.expires_at_s() + 1) * 1000;
        expire.kind = EventKind::MessageExpire;
        expire.node = victim;
        expire.expire_id = msg.msg_id;
        push(std::move(expire));
        // panic scan right now; emergency cadence takes over afterwards
        schedule_scan(victim, ev.t_ms);
        break;
      }

      case EventKind::ScanDue: {
        auto& st = state[ev.node];
        if (ev.t_ms != st.next_scan_ms) break;  // superseded scan timer
        Rng& rng = node_rng.at(ev.node);
        if (world->is_active(ev.node, t_s)) {
          charge_scan(ledger, config.energy, ev.node);
          auto loc = world->location_of(ev.node, t_s);
          auto found = world->contacts_of(ev.node, t_s);
          log_row(ev.t_ms, "scan", ev.node,
                  detail_str({{"loc", loc ? std::to_string(*loc) : "none"},
                              {"found", std::to_string(found.size())}}));
          for (NodeId peer : found) {
            // co-located nodes share an AP zone: distance within radio range
            double d = rng.uniform(0.0, config.link.range_m);
            auto latency = scan_latency(config.link, d, rng);
            if (!latency) continue;
            for (const auto& m : st.carried) {
              if (static_cast<std::uint64_t>(t_s) > m.expires_at_s()) continue;
              if (st.offered.count({m.msg_id, peer})) continue;
              if (!should_forward(m, ev.node, peer, trust,
                                  static_cast<std::uint64_t>(t_s), state[peer].seen)) {
                continue;
              }
              auto tt = transfer_time(config.link, d, kWireSize);
              st.offered.insert({m.msg_id, peer});
              charge_transfer(ledger, config.energy, ev.node, kWireSize);
              QueuedEvent done;
              done.t_ms = ev.t_ms + ms_from_s(*latency + *tt);
              done.kind = EventKind::TransferComplete;
              done.node = peer;
              done.from = ev.node;
              done.msg = m;
              log_row(ev.t_ms, "transfer_start", ev.node,
                      detail_str({{"msg", to_hex(m.msg_id)},
                                  {"to", std::to_string(peer)},
                                  {"bytes", std::to_string(kWireSize)},
                                  {"eta_ms", std::to_string(done.t_ms)}}));
              push(std::move(done));
            }
          }
        }
        double interval =
            scan_interval(config.scan, risk_at(ev.node, t_s), emergency_active(st, t_s));
        std::int64_t next = ev.t_ms + std::max<std::int64_t>(1, ms_from_s(interval));
        schedule_scan(ev.node, next);
        break;
      }

      case EventKind::TransferComplete: {
        DistressMessage msg = ev.msg;
        const NodeId to = ev.node;
        const NodeId from = ev.from;
        // Independent audit of the relay's filter decision; any hit here is a
        // protocol bug surfaced in the report.
        bool relay_class =
            (msg.trust_filter & class_bit(trust.classify(from, to))) != 0;
        bool relay_service = (msg.trust_filter & filter_bits::kService) != 0 &&
                             (msg.service_mask & service_bit(trust.service_tag(to))) != 0;
        bool violation = !(relay_class || relay_service);
        bool origin_class =
            (msg.trust_filter & class_bit(trust.classify(msg.origin, to))) != 0;
        bool qualifying = origin_class || relay_service;
        auto outcome = on_receive(state[to].seen, msg, static_cast<std::uint64_t>(t_s));
        if (outcome == ReceiveOutcome::AcceptNew) {
          state[to].carried.push_back(msg);
          if (msg.msg_type == MsgType::Emergency &&
              static_cast<std::uint64_t>(t_s) <= msg.expires_at_s()) {
            std::int64_t fast =
                ev.t_ms + std::max<std::int64_t>(
                              1, ms_from_s(config.scan.emergency_interval_s));
            if (state[to].next_scan_ms > fast) schedule_scan(to, fast);
          }
        }
        log_row(ev.t_ms, "deliver", to,
                detail_str({{"msg", to_hex(msg.msg_id)},
                            {"from", std::to_string(from)},
                            {"outcome", to_string(outcome)},
                            {"hop", std::to_string(msg.hop_count)},
                            {"qualifying", qualifying ? "1" : "0"},
                            {"violation", violation ? "1" : "0"}}));
        break;
      }

      case EventKind::MessageExpire: {
        for (auto& [n, st] : state) {
          std::erase_if(st.carried, [&](const DistressMessage& m) {
            return m.msg_id == ev.expire_id;
          });
        }
        log_row(ev.t_ms, "expire", ev.node,
                detail_str({{"msg", to_hex(ev.expire_id)}}));
        break;
      }
    }
  }

  result.report = compute_metrics(
      result.log, {config.energy, config.availability_deadline_s});
  log_info("simulation done: " + std::to_string(result.log.rows.size()) +
           " log rows, " + std::to_string(result.report.total_deliveries) +
           " deliveries");
  return result;
}

void write_event_log(std::ostream& out, const EventLog& log) {
  out << "t_ms,event,node,detail\n";
  for (const auto& row : log.rows) {
    out << row.t_ms << ',' << row.event << ',' << row.node << ',' << row.detail
        << '\n';
  }
}

EventLog parse_event_log(const std::filesystem::path& path) {
  EventLog log;
  csv::for_each_row(path, "t_ms,event,node,detail",
                    [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    if (f.size() != 4) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 4 fields");
    }
    const std::string ctx = path.string() + ":" + std::to_string(line_no);
    log.rows.push_back({csv::parse_int<std::int64_t>(f[0], ctx), std::string(f[1]),
                        csv::parse_int<NodeId>(f[2], ctx), std::string(f[3])});
  });
  return log;
}

MetricsReport compute_metrics(const EventLog& log, const MetricsParams& params) {
  MetricsReport report;
  report.availability_deadline_s = params.availability_deadline_s;

  struct IncidentAccum {
    IncidentMetrics metrics;
    std::int64_t t_ms = 0;
    std::optional<std::int64_t> first_qualifying_ms;
  };
  std::vector<IncidentAccum> incidents;
  std::map<std::string, std::size_t> incident_by_msg;
  std::map<NodeId, NodeEnergy> energy;

  for (const auto& row : log.rows) {
    if (row.event == "scan") {
      auto& e = energy[row.node];
      e.node = row.node;
      e.scans += 1;
      report.total_scans += 1;
    } else if (row.event == "transfer_start") {
      auto kv = parse_detail(row.detail);
      auto& e = energy[row.node];
      e.node = row.node;
      e.bytes += static_cast<std::uint64_t>(std::stoull(kv.at("bytes")));
      report.total_transfers += 1;
    } else if (row.event == "incident") {
      auto kv = parse_detail(row.detail);
      IncidentAccum acc;
      acc.t_ms = row.t_ms;
      acc.metrics.index = std::stoi(kv.at("idx"));
      acc.metrics.time_s = row.t_ms / 1000;
      acc.metrics.origin = row.node;
      acc.metrics.location = static_cast<LocationId>(std::stoul(kv.at("loc")));
      acc.metrics.severity = std::stoi(kv.at("sev"));
      acc.metrics.kind = kv.at("kind");
      acc.metrics.msg_id_hex = kv.at("msg");
      incident_by_msg[acc.metrics.msg_id_hex] = incidents.size();
      incidents.push_back(std::move(acc));
    } else if (row.event == "deliver") {
      auto kv = parse_detail(row.detail);
      const std::string& outcome = kv.at("outcome");
      if (kv.at("violation") == "1") report.privacy_violations += 1;
      auto it = incident_by_msg.find(kv.at("msg"));
      IncidentAccum* acc =
          it == incident_by_msg.end() ? nullptr : &incidents[it->second];
      if (outcome == "accept") {
        report.total_deliveries += 1;
        if (acc) {
          acc->metrics.delivery_count += 1;
          if (kv.at("qualifying") == "1" && !acc->first_qualifying_ms) {
            acc->first_qualifying_ms = row.t_ms;
          }
        }
      } else if (outcome == "duplicate") {
        report.total_duplicates += 1;
        if (acc) acc->metrics.duplicate_count += 1;
      } else if (outcome == "expired") {
        report.total_expired_drops += 1;
      }
    }
  }

  for (auto& acc : incidents) {
    if (acc.first_qualifying_ms) {
      double response =
          static_cast<double>(*acc.first_qualifying_ms - acc.t_ms) / 1000.0;
      acc.metrics.response_time_s = response;
      acc.metrics.available = response <= params.availability_deadline_s;
    }
    report.incidents.push_back(std::move(acc.metrics));
  }
  std::sort(report.incidents.begin(), report.incidents.end(),
            [](const IncidentMetrics& a, const IncidentMetrics& b) {
              return a.index < b.index;
            });

  for (auto& [n, e] : energy) {
    e.energy_units = params.energy.e_scan * static_cast<double>(e.scans) +
                     params.energy.e_byte * static_cast<double>(e.bytes);
    report.total_energy_units += e.energy_units;
    report.energy.push_back(e);
  }
  return report;
}

std::string to_json_string(const MetricsReport& report) {
  nlohmann::json j;
  j["availability_deadline_s"] = report.availability_deadline_s;
  j["n_incidents"] = report.incidents.size();
  auto incidents = nlohmann::json::array();
  for (const auto& m : report.incidents) {
    nlohmann::json e;
    e["index"] = m.index;
    e["time_s"] = m.time_s;
    e["origin"] = m.origin;
    e["location"] = m.location;
    e["severity"] = m.severity;
    e["kind"] = m.kind;
    e["msg_id"] = m.msg_id_hex;
    if (m.response_time_s) e["response_time_s"] = *m.response_time_s;
    e["available"] = m.available;
    e["delivery_count"] = m.delivery_count;
    e["duplicate_count"] = m.duplicate_count;
    incidents.push_back(std::move(e));
  }
  j["incidents"] = std::move(incidents);
  nlohmann::json totals;
  totals["scans"] = report.total_scans;
  totals["transfers"] = report.total_transfers;
  totals["deliveries"] = report.total_deliveries;
  totals["duplicates"] = report.total_duplicates;
  totals["expired_drops"] = report.total_expired_drops;
  totals["privacy_violations"] = report.privacy_violations;
  totals["energy_units"] = report.total_energy_units;
  j["totals"] = std::move(totals);
  auto energy = nlohmann::json::array();
  for (const auto& e : report.energy) {
    nlohmann::json entry;
    entry["node"] = e.node;
    entry["scans"] = e.scans;
    entry["bytes"] = e.bytes;
    entry["energy_units"] = e.energy_units;
    energy.push_back(std::move(entry));
  }
  j["energy"] = std::move(energy);
  return j.dump(2) + "\n";
}

}  // namespace shield
