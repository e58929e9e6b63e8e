#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "shield/trace_io.hpp"
#include "shield/types.hpp"

namespace shield {

// Sparse symmetric pairwise tally. Both directions are stored so row queries
// (per-node max, rank distribution) stay cheap; the diagonal is forbidden.
template <typename V>
class SymmetricMatrix {
 public:
  void add(NodeId a, NodeId b, V value) {
    if (a == b) throw std::invalid_argument("diagonal entry not allowed");
    adj_[a][b] += value;
    adj_[b][a] += value;
  }

  V at(NodeId a, NodeId b) const {
    auto row = adj_.find(a);
    if (row == adj_.end()) return V{};
    auto cell = row->second.find(b);
    return cell == row->second.end() ? V{} : cell->second;
  }

  const std::map<NodeId, V>* row(NodeId i) const {
    auto it = adj_.find(i);
    return it == adj_.end() ? nullptr : &it->second;
  }

  V row_max(NodeId i) const {
    V best{};
    if (const auto* r = row(i)) {
      for (const auto& [peer, v] : *r) best = std::max(best, v);
    }
    return best;
  }

  // Canonical (a<b) entries in ascending key order.
  std::vector<std::tuple<NodeId, NodeId, V>> entries() const {
    std::vector<std::tuple<NodeId, NodeId, V>> out;
    for (const auto& [a, r] : adj_) {
      for (const auto& [b, v] : r) {
        if (a < b) out.emplace_back(a, b, v);
      }
    }
    return out;
  }

  std::vector<NodeId> nodes() const {
    std::vector<NodeId> out;
    out.reserve(adj_.size());
    for (const auto& [n, r] : adj_) out.push_back(n);
    return out;
  }

  V total() const {
    V sum{};
    for (const auto& [a, r] : adj_) {
      for (const auto& [b, v] : r) {
        if (a < b) sum += v;
      }
    }
    return sum;
  }

  std::size_t pair_count() const {
    std::size_t n = 0;
    for (const auto& [a, r] : adj_) {
      for (const auto& [b, v] : r) {
        if (a < b) ++n;
      }
    }
    return n;
  }

 private:
  std::map<NodeId, std::map<NodeId, V>> adj_;
};

using EncounterMatrix = SymmetricMatrix<std::uint64_t>;
using DurationMatrix = SymmetricMatrix<std::int64_t>;

inline void add_event(EncounterMatrix& m, DurationMatrix& d, const EncounterEvent& ev) {
  m.add(ev.node_a, ev.node_b, 1);
  d.add(ev.node_a, ev.node_b, ev.duration_s);
}

inline std::pair<EncounterMatrix, DurationMatrix> build_matrices(
    std::span<const EncounterEvent> events) {
  EncounterMatrix m;
  DurationMatrix d;
  for (const auto& ev : events) add_event(m, d, ev);
  return {std::move(m), std::move(d)};
}

inline std::pair<std::uint64_t, std::int64_t> pair_stats(const EncounterMatrix& m,
                                                         const DurationMatrix& d,
                                                         NodeId i, NodeId j) {
  return {m.at(i, j), d.at(i, j)};
}

// Node i's peers by descending value, ties broken by ascending peer id.
template <typename V>
std::vector<std::pair<NodeId, V>> rank_distribution(const SymmetricMatrix<V>& matrix,
                                                    NodeId i) {
  std::vector<std::pair<NodeId, V>> out;
  if (const auto* r = matrix.row(i)) {
    out.assign(r->begin(), r->end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
  }
  return out;
}

// Matrices serialize to CSV rows node_a,node_b,count,duration_s.
void write_matrices_csv(std::ostream& out, const EncounterMatrix& m,
                        const DurationMatrix& d);

}  // namespace shield
