#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shield/encounter.hpp"
#include "shield/types.hpp"

namespace shield {

enum class TrustClass : std::uint8_t { Stranger = 0, Acquaintance = 1, Friend = 2 };

enum class ServiceTag : std::uint8_t { None = 0, Medical, Security, Rescue, Vigil };

const char* to_string(TrustClass c);
const char* to_string(ServiceTag t);
ServiceTag service_tag_from_string(const std::string& s);  // throws ParseError

// Bit assignments shared with the wire format's trust_filter / service_mask.
namespace filter_bits {
constexpr std::uint8_t kFriend = 1u << 0;
constexpr std::uint8_t kAcquaintance = 1u << 1;
constexpr std::uint8_t kStranger = 1u << 2;
constexpr std::uint8_t kService = 1u << 3;
}  // namespace filter_bits

std::uint8_t class_bit(TrustClass c);
std::uint8_t service_bit(ServiceTag t);  // None -> 0

struct TrustParams {
  double alpha = 0.5;
  double theta_friend = 0.6;
  double theta_acq = 0.2;

  void validate() const;  // throws ConfigError
};

// T(i,j) = alpha * M[i,j]/max_k M[i,k] + (1-alpha) * D[i,j]/max_k D[i,k].
// A node with no encounters trusts nobody (score 0 everywhere).
double trust_score(const EncounterMatrix& m, const DurationMatrix& d, NodeId i,
                   NodeId j, double alpha);

// Friend iff score >= theta_friend; Acquaintance iff theta_acq <= score.
TrustClass classify(double score, double theta_friend, double theta_acq);

struct TrustFilter {
  std::uint8_t class_mask = 0;    // filter_bits class bits
  std::uint8_t service_mask = 0;  // service_bit() bits, honored only with kService
};

using ServiceRegistry = std::map<NodeId, ServiceTag>;

// Directional trust view over a frozen encounter history. Scores are
// normalized per source node, so the matrix is not symmetric.
class TrustMatrix {
 public:
  TrustMatrix(const EncounterMatrix& m, const DurationMatrix& d, TrustParams params,
              ServiceRegistry services = {});

  double score(NodeId i, NodeId j) const;
  TrustClass classify(NodeId i, NodeId j) const;
  ServiceTag service_tag(NodeId n) const;
  const TrustParams& params() const { return params_; }

  // {j : class(i,j) in class mask} union {j : tag(j) in service mask}, minus i.
  // The service mask is applied only when the filter's Service bit is set.
  std::vector<NodeId> trusted_set(NodeId i, TrustFilter filter) const;

  // All node ids known to the matrix (from encounters and the registry).
  const std::vector<NodeId>& nodes() const { return nodes_; }

 private:
  struct RowNorm {
    std::uint64_t max_count = 0;
    std::int64_t max_duration = 0;
  };

  EncounterMatrix counts_;
  DurationMatrix durations_;
  TrustParams params_;
  ServiceRegistry services_;
  std::map<NodeId, RowNorm> norms_;
  std::vector<NodeId> nodes_;
};

}  // namespace shield
