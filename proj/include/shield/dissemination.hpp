#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "shield/rng.hpp"
#include "shield/trust.hpp"
#include "shield/types.hpp"

namespace shield {

using MsgId = std::array<std::uint8_t, 16>;

std::string to_hex(const MsgId& id);
MsgId msg_id_from_hex(std::string_view hex);  // throws ParseError

enum class MsgType : std::uint8_t { Alert = 0, Emergency = 1 };

// Fixed 184-byte wire record, big-endian integers:
//   [0]      version (0x01)
//   [1:17]   msg_id
//   [17:25]  origin node id
//   [25]     msg_type        [26] severity
//   [27]     hop_count       [28] max_hops
//   [29:33]  ttl_s
//   [33:41]  created_at (seconds)
//   [41]     trust_filter    [42] service_mask
//   [43:47]  location id
//   [47:184] payload, UTF-8, zero-padded
struct DistressMessage {
  std::uint8_t version = 1;
  MsgId msg_id{};
  NodeId origin = 0;
  MsgType msg_type = MsgType::Alert;
  std::uint8_t severity = 0;
  std::uint8_t hop_count = 0;
  std::uint8_t max_hops = 1;
  std::uint32_t ttl_s = 0;
  std::uint64_t created_at_s = 0;
  std::uint8_t trust_filter = 0;
  std::uint8_t service_mask = 0;
  LocationId location = 0;
  std::string payload;  // <= 137 bytes; trailing NULs are padding, not content

  std::uint64_t expires_at_s() const { return created_at_s + ttl_s; }

  bool operator==(const DistressMessage&) const = default;
};

constexpr std::size_t kWireSize = 184;
constexpr std::size_t kHeaderSize = 47;
constexpr std::size_t kMaxPayload = kWireSize - kHeaderSize;  // 137
constexpr std::uint8_t kWireVersion = 1;

// Throws ParseError on payload > 137 bytes or violated header invariants.
std::array<std::uint8_t, kWireSize> encode(const DistressMessage& msg);

// Inverse of encode; strips payload padding. Throws ParseError on wrong
// length, unknown version, invalid type, or hop_count > max_hops.
DistressMessage decode(std::span<const std::uint8_t> bytes);

// Fills the severity-derived fields: max_hops = 1 + severity/64, ttl =
// 300 + 10*severity, hop_count 0, random msg_id, default filters by type
// (Emergency: Friend|Acquaintance|Service, Alert: Friend only).
DistressMessage create_distress(NodeId origin, MsgType type, int severity,
                                LocationId location, std::string_view payload,
                                std::uint64_t now_s, Rng& rng);

// Ids a node has already processed. Grows monotonically within a run.
using SeenSet = std::set<MsgId>;

// All must hold: not expired, hops left, candidate hasn't seen it, and the
// relay's own class for the candidate passes the filter (or the service mask
// does). Relays use their own trust view, not the origin's.
bool should_forward(const DistressMessage& msg, NodeId relay, NodeId candidate,
                    const TrustMatrix& trust, std::uint64_t now_s,
                    const SeenSet& candidate_seen);

enum class ReceiveOutcome { AcceptNew, DuplicateDrop, ExpiredDrop };

const char* to_string(ReceiveOutcome o);

// Applied on every relayed copy: expired copies drop silently, duplicates
// drop, fresh copies are recorded in seen and get hop_count incremented.
ReceiveOutcome on_receive(SeenSet& seen, DistressMessage& msg, std::uint64_t now_s);

}  // namespace shield
