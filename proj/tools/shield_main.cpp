// shield: encounter-trust emergency alert toolchain.
//
// Subcommands: gen-traces, simulate, trust, rank, analyze. stdout carries only
// data (CSV or JSON); diagnostics go to stderr, gated by SHIELD_LOG.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "shield/advisory.hpp"
#include "shield/analytics.hpp"
#include "shield/csv.hpp"
#include "shield/encounter.hpp"
#include "shield/errors.hpp"
#include "shield/log.hpp"
#include "shield/simulator.hpp"
#include "shield/trace_io.hpp"
#include "shield/trust.hpp"

namespace {

using shield::ConfigError;
using shield::ParseError;

// shortest round-trip representation, no locale surprises
std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path.string());
  out << content;
}

int cmd_gen_traces(const std::string& config_path, const std::string& out_dir,
                   std::optional<std::uint64_t> seed) {
  auto cfg = shield::load_world_config(config_path);
  if (seed) cfg.rng_seed = *seed;
  auto world = shield::generate_synthetic_world(cfg);
  shield::write_world(world, out_dir);
  shield::log_info("wrote world (" + std::to_string(world.encounters.size()) +
                   " encounters, " + std::to_string(world.crimes.size()) +
                   " crimes) to " + out_dir);
  return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 std::optional<std::uint64_t> seed, const std::string& log_path) {
  auto cfg = shield::load_sim_config(config_path);
  if (seed) {
    cfg.seed = *seed;
    if (cfg.synthetic) cfg.synthetic->rng_seed = *seed;
  }
  auto result = shield::run_simulation(cfg);
  write_file(out_path, shield::to_json_string(result.report));
  if (!log_path.empty()) {
    std::ofstream out(log_path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + log_path);
    shield::write_event_log(out, result.log);
  }
  return 0;
}

int cmd_trust(const std::string& encounters_path, shield::NodeId node,
              const std::string& services_path, double alpha, double theta_friend,
              double theta_acq) {
  auto events = shield::parse_encounter_trace(encounters_path);
  auto [m, d] = shield::build_matrices(events);
  shield::ServiceRegistry services;
  if (!services_path.empty()) {
    shield::csv::for_each_row(services_path, "node,service_tag",
                              [&](std::size_t line_no,
                                  const std::vector<std::string_view>& f) {
      if (f.size() != 2) {
        throw ParseError(services_path + ":" + std::to_string(line_no) +
                         ": expected 2 fields");
      }
      auto id = shield::csv::parse_int<shield::NodeId>(
          f[0], services_path + ":" + std::to_string(line_no));
      services[id] = shield::service_tag_from_string(std::string(f[1]));
    });
  }
  shield::TrustParams params{alpha, theta_friend, theta_acq};
  shield::TrustMatrix trust(m, d, params, services);

  // one row per known peer, strongest first (ties by id)
  struct Row {
    shield::NodeId peer;
    double score;
  };
  std::vector<Row> rows;
  for (shield::NodeId peer : trust.nodes()) {
    if (peer == node) continue;
    rows.push_back({peer, trust.score(node, peer)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.peer < b.peer;
  });
  std::cout << "peer,score,class,service_tag\n";
  for (const auto& row : rows) {
    std::cout << row.peer << ',' << fmt_double(row.score) << ','
              << shield::to_string(trust.classify(node, row.peer)) << ','
              << shield::to_string(trust.service_tag(row.peer)) << '\n';
  }
  return 0;
}

int cmd_rank(const std::string& crime_path, std::optional<int> hour,
             const std::string& profile_out) {
  auto records = shield::parse_crime_log(crime_path);
  auto profile = shield::build_risk_profile(records);
  std::cout << "location,aggregate_risk\n";
  for (const auto& [loc, risk] : shield::rank_locations(profile, hour)) {
    std::cout << loc << ',' << fmt_double(risk) << '\n';
  }
  if (!profile_out.empty()) {
    nlohmann::json j;
    for (const auto& [loc, row] : profile.risk) {
      auto arr = nlohmann::json::array();
      for (double cell : row) arr.push_back(cell);
      j[std::to_string(loc)] = std::move(arr);
    }
    write_file(profile_out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_analyze(const std::string& crime_path, const std::string& density_path,
                const std::string& out_path, bool with_spearman) {
  auto crimes = shield::parse_crime_log(crime_path);
  auto density = shield::parse_density_series(density_path);
  auto report = shield::correlation_report(crimes, density);

  nlohmann::json j;
  j["pearson_r"] = report.pearson_r;
  j["n_bins"] = report.n_bins;
  j["peak_crime_hour"] = report.peak_crime_hour;
  j["peak_density_hour"] = report.peak_density_hour;
  auto to_arr = [](const shield::HourlyHistogram& h) {
    auto arr = nlohmann::json::array();
    for (double v : h) arr.push_back(v);
    return arr;
  };
  j["crime_histogram"] = to_arr(report.crime_histogram);
  j["density_histogram"] = to_arr(report.density_histogram);
  if (with_spearman) {
    j["spearman_r"] = shield::spearman(report.crime_histogram, report.density_histogram);
  }
  write_file(out_path, j.dump(2) + "\n");
  shield::log_info("pearson_r = " + fmt_double(report.pearson_r));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shield: proximity trust and emergency alert toolchain"};
  app.require_subcommand(1);

  // gen-traces
  auto* gen = app.add_subcommand("gen-traces", "generate a synthetic world");
  std::string gen_config, gen_out;
  std::optional<std::uint64_t> gen_seed;
  gen->add_option("--config", gen_config, "world config JSON")->required();
  gen->add_option("--out", gen_out, "output directory")->required();
  gen->add_option("--seed", gen_seed, "override config rng_seed");

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a simulation");
  std::string sim_config, sim_out, sim_log;
  std::optional<std::uint64_t> sim_seed;
  sim->add_option("--config", sim_config, "simulation config JSON")->required();
  sim->add_option("--out", sim_out, "metrics report JSON path")->required();
  sim->add_option("--seed", sim_seed, "override config seed");
  sim->add_option("--log", sim_log, "also write the event log CSV here");

  // trust
  auto* tr = app.add_subcommand("trust", "print a node's trust table");
  std::string tr_encounters, tr_services;
  shield::NodeId tr_node = 0;
  double tr_alpha = 0.5, tr_tf = 0.6, tr_ta = 0.2;
  tr->add_option("--encounters", tr_encounters, "encounter trace CSV")->required();
  tr->add_option("--node", tr_node, "source node id")->required();
  tr->add_option("--services", tr_services, "service tag CSV (node,service_tag)");
  tr->add_option("--alpha", tr_alpha, "count/duration blend weight");
  tr->add_option("--theta-friend", tr_tf, "friend threshold");
  tr->add_option("--theta-acq", tr_ta, "acquaintance threshold");

  // rank
  auto* rk = app.add_subcommand("rank", "rank locations by crime risk");
  std::string rk_crime, rk_profile;
  std::optional<int> rk_hour;
  rk->add_option("--crime", rk_crime, "crime log CSV")->required();
  rk->add_option("--hour", rk_hour, "restrict to one hour 0-23")
      ->check(CLI::Range(0, 23));
  rk->add_option("--profile-out", rk_profile, "export risk profile JSON here");

  // analyze
  auto* an = app.add_subcommand("analyze", "crime/density correlation report");
  std::string an_crime, an_density, an_out;
  bool an_spearman = false;
  an->add_option("--crime", an_crime, "crime log CSV")->required();
  an->add_option("--density", an_density, "density series CSV")->required();
  an->add_option("--out", an_out, "report JSON path")->required();
  an->add_flag("--spearman", an_spearman, "add spearman_r to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage to stderr
    return 1;
  }

  try {
    if (gen->parsed()) return cmd_gen_traces(gen_config, gen_out, gen_seed);
    if (sim->parsed()) return cmd_simulate(sim_config, sim_out, sim_seed, sim_log);
    if (tr->parsed()) return cmd_trust(tr_encounters, tr_node, tr_services, tr_alpha,
                                       tr_tf, tr_ta);
    if (rk->parsed()) return cmd_rank(rk_crime, rk_hour, rk_profile);
    if (an->parsed()) return cmd_analyze(an_crime, an_density, an_out, an_spearman);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
