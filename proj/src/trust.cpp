#include "shield/trust.hpp"

#include <algorithm>
#include <set>

#include "shield/errors.hpp"

namespace shield {

const char* to_string(TrustClass c) {
  switch (c) {
    case TrustClass::Friend: return "Friend";
    case TrustClass::Acquaintance: return "Acquaintance";
    case TrustClass::Stranger: return "Stranger";
  }
  return "Stranger";
}

const char* to_string(ServiceTag t) {
  switch (t) {
    case ServiceTag::None: return "None";
    case ServiceTag::Medical: return "Medical";
    case ServiceTag::Security: return "Security";
    case ServiceTag::Rescue: return "Rescue";
    case ServiceTag::Vigil: return "Vigil";
  }
  return "None";
}

ServiceTag service_tag_from_string(const std::string& s) {
  if (s == "None") return ServiceTag::None;
  if (s == "Medical") return ServiceTag::Medical;
  if (s == "Security") return ServiceTag::Security;
  if (s == "Rescue") return ServiceTag::Rescue;
  if (s == "Vigil") return ServiceTag::Vigil;
  throw ParseError("unknown service tag: '" + s + "'");
}

std::uint8_t class_bit(TrustClass c) {
  switch (c) {
    case TrustClass::Friend: return filter_bits::kFriend;
    case TrustClass::Acquaintance: return filter_bits::kAcquaintance;
    case TrustClass::Stranger: return filter_bits::kStranger;
  }
  return filter_bits::kStranger;
}

std::uint8_t service_bit(ServiceTag t) {
  switch (t) {
    case ServiceTag::None: return 0;
    case ServiceTag::Medical: return 1u << 0;
    case ServiceTag::Security: return 1u << 1;
    case ServiceTag::Rescue: return 1u << 2;
    case ServiceTag::Vigil: return 1u << 3;
  }
  return 0;
}

void TrustParams::validate() const {
  if (alpha < 0.0 || alpha > 1.0) throw ConfigError("alpha must be in [0,1]");
  if (!(theta_acq >= 0.0 && theta_acq < theta_friend && theta_friend <= 1.0)) {
    throw ConfigError("thresholds must satisfy 0 <= theta_acq < theta_friend <= 1");
  }
}

double trust_score(const EncounterMatrix& m, const DurationMatrix& d, NodeId i,
                   NodeId j, double alpha) {
  if (i == j) return 0.0;
  std::uint64_t max_count = m.row_max(i);
  std::int64_t max_duration = d.row_max(i);
  if (max_count == 0 || max_duration == 0) return 0.0;
  double count_part = static_cast<double>(m.at(i, j)) / static_cast<double>(max_count);
  double duration_part =
      static_cast<double>(d.at(i, j)) / static_cast<double>(max_duration);
  return alpha * count_part + (1.0 - alpha) * duration_part;
}

TrustClass classify(double score, double theta_friend, double theta_acq) {
  TrustParams p;
  p.theta_friend = theta_friend;
  p.theta_acq = theta_acq;
  p.validate();
  if (score >= theta_friend) return TrustClass::Friend;
  if (score >= theta_acq) return TrustClass::Acquaintance;
  return TrustClass::Stranger;
}

TrustMatrix::TrustMatrix(const EncounterMatrix& m, const DurationMatrix& d,
                         TrustParams params, ServiceRegistry services)
    : counts_(m), durations_(d), params_(params), services_(std::move(services)) {
  params_.validate();
  std::set<NodeId> ids;
  for (NodeId n : counts_.nodes()) {
    norms_[n] = {counts_.row_max(n), durations_.row_max(n)};
    ids.insert(n);
  }
  for (const auto& [n, tag] : services_) ids.insert(n);
  nodes_.assign(ids.begin(), ids.end());
}

double TrustMatrix::score(NodeId i, NodeId j) const {
  if (i == j) return 0.0;
  auto it = norms_.find(i);
  if (it == norms_.end() || it->second.max_count == 0 || it->second.max_duration == 0) {
    return 0.0;
  }
  double count_part = static_cast<double>(counts_.at(i, j)) /
                      static_cast<double>(it->second.max_count);
  double duration_part = static_cast<double>(durations_.at(i, j)) /
                         static_cast<double>(it->second.max_duration);
  return params_.alpha * count_part + (1.0 - params_.alpha) * duration_part;
}

TrustClass TrustMatrix::classify(NodeId i, NodeId j) const {
  return shield::classify(score(i, j), params_.theta_friend, params_.theta_acq);
}

ServiceTag TrustMatrix::service_tag(NodeId n) const {
  auto it = services_.find(n);
  return it == services_.end() ? ServiceTag::None : it->second;
}

std::vector<NodeId> TrustMatrix::trusted_set(NodeId i, TrustFilter filter) const {
  std::vector<NodeId> out;
  for (NodeId j : nodes_) {
    if (j == i) continue;
    bool by_class = (filter.class_mask & class_bit(classify(i, j))) != 0;
    bool by_service = (filter.class_mask & filter_bits::kService) != 0 &&
                      (filter.service_mask & service_bit(service_tag(j))) != 0;
    if (by_class || by_service) out.push_back(j);
  }
  return out;
}

}  // namespace shield
