#include "shield/encounter.hpp"

#include <ostream>
#include <set>

namespace shield {

void write_matrices_csv(std::ostream& out, const EncounterMatrix& m,
                        const DurationMatrix& d) {
  out << "node_a,node_b,count,duration_s\n";
  std::set<std::pair<NodeId, NodeId>> keys;
  for (const auto& [a, b, v] : m.entries()) keys.insert({a, b});
  for (const auto& [a, b, v] : d.entries()) keys.insert({a, b});
  for (const auto& [a, b] : keys) {
    out << a << ',' << b << ',' << m.at(a, b) << ',' << d.at(a, b) << '\n';
  }
}

}  // namespace shield
