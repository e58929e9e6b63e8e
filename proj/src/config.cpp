#include <fstream>
#include <sstream>

#include "json.hpp"
#include "shield/errors.hpp"
#include "shield/simulator.hpp"
#include "shield/trace_io.hpp"

namespace shield {

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (key == k) {
        known = true;
        break;
      }
    }
    if (!known) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

json parse_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("invalid JSON in " + what);
  if (!j.is_object()) throw ConfigError(what + " must be a JSON object");
  return j;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
void get_if_present(const json& j, const char* key, T& out) {
  if (auto it = j.find(key); it != j.end()) out = it->get<T>();
}

std::vector<ScheduledIncident> parse_schedule(const json& arr) {
  std::vector<ScheduledIncident> out;
  for (const auto& e : arr) {
    check_keys(e, {"time_s", "location", "type", "severity"}, "incident_schedule entry");
    ScheduledIncident inc;
    get_if_present(e, "time_s", inc.time_s);
    get_if_present(e, "location", inc.location);
    get_if_present(e, "type", inc.type);
    get_if_present(e, "severity", inc.severity);
    out.push_back(std::move(inc));
  }
  return out;
}

SyntheticWorldConfig world_config_from_json(const json& j) {
  check_keys(j,
             {"n_nodes", "n_communities", "n_locations", "sim_duration_s", "p_home",
              "n_crimes", "density_coupling", "incident_schedule", "rng_seed"},
             "world config");
  SyntheticWorldConfig cfg;
  get_if_present(j, "n_nodes", cfg.n_nodes);
  get_if_present(j, "n_communities", cfg.n_communities);
  get_if_present(j, "n_locations", cfg.n_locations);
  get_if_present(j, "sim_duration_s", cfg.sim_duration_s);
  get_if_present(j, "p_home", cfg.p_home);
  get_if_present(j, "n_crimes", cfg.n_crimes);
  get_if_present(j, "density_coupling", cfg.density_coupling);
  get_if_present(j, "rng_seed", cfg.rng_seed);
  if (auto it = j.find("incident_schedule"); it != j.end()) {
    cfg.incident_schedule = parse_schedule(*it);
  }
  cfg.validate();
  return cfg;
}

std::uint8_t parse_filter_names(const json& arr) {
  std::uint8_t mask = 0;
  for (const auto& e : arr) {
    const std::string name = e.get<std::string>();
    if (name == "Friend") mask |= filter_bits::kFriend;
    else if (name == "Acquaintance") mask |= filter_bits::kAcquaintance;
    else if (name == "Stranger") mask |= filter_bits::kStranger;
    else if (name == "Service") mask |= filter_bits::kService;
    else throw ConfigError("unknown trust filter name '" + name + "'");
  }
  return mask;
}

std::uint8_t parse_service_names(const json& arr) {
  std::uint8_t mask = 0;
  for (const auto& e : arr) {
    ServiceTag tag = service_tag_from_string(e.get<std::string>());
    if (tag == ServiceTag::None) throw ConfigError("'None' is not a service mask entry");
    mask |= service_bit(tag);
  }
  return mask;
}

}  // namespace

SyntheticWorldConfig world_config_from_json_text(const std::string& text) {
  return world_config_from_json(parse_text(text, "world config"));
}

SyntheticWorldConfig load_world_config(const std::filesystem::path& path) {
  return world_config_from_json_text(slurp(path));
}

SimConfig sim_config_from_json_text(const std::string& text) {
  json j = parse_text(text, "simulation config");
  check_keys(j,
             {"world", "scan", "link", "energy", "trust", "caution", "services",
              "incidents", "seed", "duration_s", "availability_deadline_s"},
             "simulation config");

  SimConfig cfg;
  auto wit = j.find("world");
  if (wit == j.end()) throw ConfigError("simulation config needs a 'world' section");
  check_keys(*wit, {"synthetic", "traces"}, "world section");
  if (auto s = wit->find("synthetic"); s != wit->end()) {
    cfg.synthetic = world_config_from_json(*s);
  }
  if (auto t = wit->find("traces"); t != wit->end()) {
    check_keys(*t, {"encounters", "crime"}, "traces section");
    TraceWorldPaths paths;
    paths.encounters = t->value("encounters", std::string{});
    paths.crime = t->value("crime", std::string{});
    cfg.traces = std::move(paths);
  }

  if (auto s = j.find("scan"); s != j.end()) {
    check_keys(*s, {"i_min_s", "i_max_s", "emergency_s"}, "scan section");
    get_if_present(*s, "i_min_s", cfg.scan.i_min_s);
    get_if_present(*s, "i_max_s", cfg.scan.i_max_s);
    get_if_present(*s, "emergency_s", cfg.scan.emergency_interval_s);
  }
  if (auto l = j.find("link"); l != j.end()) {
    check_keys(*l, {"range_m", "scan_min_s", "scan_max_s", "c0_s", "c1_s_per_m",
                    "msg_bytes"},
               "link section");
    get_if_present(*l, "range_m", cfg.link.range_m);
    get_if_present(*l, "scan_min_s", cfg.link.scan_lat_min_s);
    get_if_present(*l, "scan_max_s", cfg.link.scan_lat_max_s);
    get_if_present(*l, "c0_s", cfg.link.c0_s);
    get_if_present(*l, "c1_s_per_m", cfg.link.c1_s_per_m);
    get_if_present(*l, "msg_bytes", cfg.link.msg_bytes);
  }
  if (auto e = j.find("energy"); e != j.end()) {
    check_keys(*e, {"e_scan", "e_byte"}, "energy section");
    get_if_present(*e, "e_scan", cfg.energy.e_scan);
    get_if_present(*e, "e_byte", cfg.energy.e_byte);
  }
  if (auto t = j.find("trust"); t != j.end()) {
    check_keys(*t, {"alpha", "theta_friend", "theta_acq"}, "trust section");
    get_if_present(*t, "alpha", cfg.trust.alpha);
    get_if_present(*t, "theta_friend", cfg.trust.theta_friend);
    get_if_present(*t, "theta_acq", cfg.trust.theta_acq);
  }
  if (auto c = j.find("caution"); c != j.end()) {
    check_keys(*c, {"theta"}, "caution section");
    get_if_present(*c, "theta", cfg.caution.theta_caution);
  }
  if (auto s = j.find("services"); s != j.end()) {
    for (const auto& [key, value] : s->items()) {
      NodeId node = 0;
      try {
        node = std::stoull(key);
      } catch (const std::exception&) {
        throw ConfigError("service registry keys must be node ids, got '" + key + "'");
      }
      cfg.services[node] = service_tag_from_string(value.get<std::string>());
    }
  }
  if (auto arr = j.find("incidents"); arr != j.end()) {
    for (const auto& e : *arr) {
      check_keys(e,
                 {"time_s", "location", "severity", "kind", "node", "payload",
                  "trust_filter", "service_mask"},
                 "incident entry");
      IncidentSpec inc;
      get_if_present(e, "time_s", inc.time_s);
      get_if_present(e, "location", inc.location);
      get_if_present(e, "severity", inc.severity);
      get_if_present(e, "payload", inc.payload);
      if (auto n = e.find("node"); n != e.end()) inc.node = n->get<NodeId>();
      if (auto k = e.find("kind"); k != e.end()) {
        const std::string kind = k->get<std::string>();
        if (kind == "emergency") inc.kind = MsgType::Emergency;
        else if (kind == "alert") inc.kind = MsgType::Alert;
        else throw ConfigError("incident kind must be 'emergency' or 'alert'");
      }
      if (auto f = e.find("trust_filter"); f != e.end()) {
        inc.trust_filter = parse_filter_names(*f);
      }
      if (auto m = e.find("service_mask"); m != e.end()) {
        inc.service_mask = parse_service_names(*m);
      }
      cfg.incidents.push_back(std::move(inc));
    }
  }
  get_if_present(j, "seed", cfg.seed);
  get_if_present(j, "duration_s", cfg.duration_s);
  get_if_present(j, "availability_deadline_s", cfg.availability_deadline_s);

  cfg.validate();
  return cfg;
}

SimConfig load_sim_config(const std::filesystem::path& path) {
  return sim_config_from_json_text(slurp(path));
}

}  // namespace shield
