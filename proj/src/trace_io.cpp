#include "shield/trace_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>

#include "shield/csv.hpp"
#include "shield/errors.hpp"

namespace shield {

namespace {

std::string at_line(const std::filesystem::path& path, std::size_t line_no) {
  return path.string() + ":" + std::to_string(line_no);
}

void expect_field_count(const std::filesystem::path& path, std::size_t line_no,
                        const std::vector<std::string_view>& fields, std::size_t want) {
  if (fields.size() != want) {
    throw ParseError(at_line(path, line_no) + ": expected " + std::to_string(want) +
                     " fields, got " + std::to_string(fields.size()));
  }
}

}  // namespace

std::vector<EncounterEvent> parse_encounter_trace(const std::filesystem::path& path) {
  std::vector<EncounterEvent> events;
  csv::for_each_row(path, "node_a,node_b,start,duration,location",
                    [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    expect_field_count(path, line_no, f, 5);
    const std::string ctx = at_line(path, line_no);
    EncounterEvent ev;
    ev.node_a = csv::parse_int<NodeId>(f[0], ctx);
    ev.node_b = csv::parse_int<NodeId>(f[1], ctx);
    ev.start_s = csv::parse_int<std::int64_t>(f[2], ctx);
    ev.duration_s = csv::parse_int<std::int64_t>(f[3], ctx);
    ev.location = csv::parse_int<LocationId>(f[4], ctx);
    if (ev.node_a == ev.node_b) {
      throw ParseError(ctx + ": self-encounter for node " + std::to_string(ev.node_a));
    }
    if (ev.duration_s <= 0) {
      throw ParseError(ctx + ": duration must be > 0, got " + std::to_string(ev.duration_s));
    }
    if (ev.start_s < 0) {
      throw ParseError(ctx + ": start must be >= 0");
    }
    if (ev.node_a > ev.node_b) std::swap(ev.node_a, ev.node_b);
    events.push_back(std::move(ev));
  });
  std::stable_sort(events.begin(), events.end(),
                   [](const EncounterEvent& a, const EncounterEvent& b) {
                     return a.start_s < b.start_s;
                   });
  return events;
}

std::vector<CrimeRecord> parse_crime_log(const std::filesystem::path& path) {
  std::vector<CrimeRecord> records;
  csv::for_each_row(path, "timestamp,location,crime_type,severity",
                    [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    expect_field_count(path, line_no, f, 4);
    const std::string ctx = at_line(path, line_no);
    CrimeRecord rec;
    rec.timestamp_s = csv::parse_int<std::int64_t>(f[0], ctx);
    rec.location = csv::parse_int<LocationId>(f[1], ctx);
    rec.crime_type = std::string(f[2]);
    rec.severity = csv::parse_int<int>(f[3], ctx);
    if (rec.timestamp_s < 0) {
      throw ParseError(ctx + ": timestamp must be >= 0");
    }
    if (rec.severity < 0 || rec.severity > 255) {
      throw ParseError(ctx + ": severity out of range 0-255, got " +
                       std::to_string(rec.severity));
    }
    records.push_back(std::move(rec));
  });
  std::stable_sort(records.begin(), records.end(),
                   [](const CrimeRecord& a, const CrimeRecord& b) {
                     return a.timestamp_s < b.timestamp_s;
                   });
  return records;
}

std::vector<DensitySample> parse_density_series(const std::filesystem::path& path) {
  std::array<std::int64_t, 24> counts{};
  std::set<int> seen;
  csv::for_each_row(path, "hour,count",
                    [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    expect_field_count(path, line_no, f, 2);
    const std::string ctx = at_line(path, line_no);
    int hour = csv::parse_int<int>(f[0], ctx);
    std::int64_t count = csv::parse_int<std::int64_t>(f[1], ctx);
    if (hour < 0 || hour >= 24) {
      throw ParseError(ctx + ": hour out of range 0-23, got " + std::to_string(hour));
    }
    if (!seen.insert(hour).second) {
      throw ParseError(ctx + ": duplicate hour " + std::to_string(hour));
    }
    if (count < 0) {
      throw ParseError(ctx + ": count must be >= 0");
    }
    counts[static_cast<std::size_t>(hour)] = count;
  });
  std::vector<DensitySample> samples;
  samples.reserve(24);
  for (int h = 0; h < 24; ++h) {
    samples.push_back({h, counts[static_cast<std::size_t>(h)]});
  }
  return samples;
}

std::vector<std::pair<NodeId, unsigned>> parse_community_map(const std::filesystem::path& path) {
  std::vector<std::pair<NodeId, unsigned>> out;
  csv::for_each_row(path, "node,community",
                    [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    expect_field_count(path, line_no, f, 2);
    const std::string ctx = at_line(path, line_no);
    out.emplace_back(csv::parse_int<NodeId>(f[0], ctx),
                     csv::parse_int<unsigned>(f[1], ctx));
  });
  std::sort(out.begin(), out.end());
  return out;
}

void write_encounter_trace(std::ostream& out, std::span<const EncounterEvent> events) {
  out << "node_a,node_b,start,duration,location\n";
  for (const auto& ev : events) {
    out << ev.node_a << ',' << ev.node_b << ',' << ev.start_s << ',' << ev.duration_s
        << ',' << ev.location << '\n';
  }
}

void write_crime_log(std::ostream& out, std::span<const CrimeRecord> records) {
  out << "timestamp,location,crime_type,severity\n";
  for (const auto& rec : records) {
    out << rec.timestamp_s << ',' << rec.location << ',' << rec.crime_type << ','
        << rec.severity << '\n';
  }
}

void write_density_series(std::ostream& out, std::span<const DensitySample> samples) {
  out << "hour,count\n";
  for (const auto& s : samples) {
    out << s.hour_bin << ',' << s.count << '\n';
  }
}

void write_community_map(std::ostream& out,
                         std::span<const std::pair<NodeId, unsigned>> communities) {
  out << "node,community\n";
  for (const auto& [node, comm] : communities) {
    out << node << ',' << comm << '\n';
  }
}

void write_world(const SyntheticWorld& world, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + (dir / name).string());
    return out;
  };
  {
    auto out = open("encounters.csv");
    write_encounter_trace(out, world.encounters);
  }
  {
    auto out = open("crime.csv");
    write_crime_log(out, world.crimes);
  }
  {
    auto out = open("density.csv");
    write_density_series(out, world.density);
  }
  {
    std::vector<std::pair<NodeId, unsigned>> communities;
    communities.reserve(world.community.size());
    for (NodeId n = 0; n < world.community.size(); ++n) {
      communities.emplace_back(n, world.community[static_cast<std::size_t>(n)]);
    }
    auto out = open("communities.csv");
    write_community_map(out, communities);
  }
}

}  // namespace shield
