#include "shield/dissemination.hpp"

#include <algorithm>

#include "shield/errors.hpp"

namespace shield {

namespace {

void put_u32(std::uint8_t* p, std::uint32_t v) {
  p[0] = static_cast<std::uint8_t>(v >> 24);
  p[1] = static_cast<std::uint8_t>(v >> 16);
  p[2] = static_cast<std::uint8_t>(v >> 8);
  p[3] = static_cast<std::uint8_t>(v);
}

void put_u64(std::uint8_t* p, std::uint64_t v) {
  put_u32(p, static_cast<std::uint32_t>(v >> 32));
  put_u32(p + 4, static_cast<std::uint32_t>(v));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

std::uint64_t get_u64(const std::uint8_t* p) {
  return (static_cast<std::uint64_t>(get_u32(p)) << 32) | get_u32(p + 4);
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(const MsgId& id) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(32);
  for (std::uint8_t b : id) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0f]);
  }
  return out;
}

MsgId msg_id_from_hex(std::string_view hex) {
  if (hex.size() != 32) throw ParseError("msg id hex must be 32 chars");
  MsgId id{};
  for (std::size_t i = 0; i < 16; ++i) {
    int hi = hex_digit(hex[2 * i]);
    int lo = hex_digit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw ParseError("bad hex in msg id");
    id[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return id;
}

const char* to_string(ReceiveOutcome o) {
  switch (o) {
    case ReceiveOutcome::AcceptNew: return "accept";
    case ReceiveOutcome::DuplicateDrop: return "duplicate";
    case ReceiveOutcome::ExpiredDrop: return "expired";
  }
  return "accept";
}

std::array<std::uint8_t, kWireSize> encode(const DistressMessage& msg) {
  if (msg.version != kWireVersion) {
    throw ParseError("unsupported message version " + std::to_string(msg.version));
  }
  if (msg.msg_type != MsgType::Alert && msg.msg_type != MsgType::Emergency) {
    throw ParseError("invalid msg_type");
  }
  if (msg.hop_count > msg.max_hops) {
    throw ParseError("hop_count exceeds max_hops");
  }
  if (msg.payload.size() > kMaxPayload) {
    throw ParseError("payload too long: " + std::to_string(msg.payload.size()) +
                     " > " + std::to_string(kMaxPayload));
  }
  std::array<std::uint8_t, kWireSize> out{};
  out[0] = msg.version;
  std::copy(msg.msg_id.begin(), msg.msg_id.end(), out.begin() + 1);
  put_u64(out.data() + 17, msg.origin);
  out[25] = static_cast<std::uint8_t>(msg.msg_type);
  out[26] = msg.severity;
  out[27] = msg.hop_count;
  out[28] = msg.max_hops;
  put_u32(out.data() + 29, msg.ttl_s);
  put_u64(out.data() + 33, msg.created_at_s);
  out[41] = msg.trust_filter;
  out[42] = msg.service_mask;
  put_u32(out.data() + 43, msg.location);
  std::copy(msg.payload.begin(), msg.payload.end(), out.begin() + kHeaderSize);
  return out;
}

DistressMessage decode(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kWireSize) {
    throw ParseError("wire record must be " + std::to_string(kWireSize) +
                     " bytes, got " + std::to_string(bytes.size()));
  }
  DistressMessage msg;
  msg.version = bytes[0];
  if (msg.version != kWireVersion) {
    throw ParseError("unsupported message version " + std::to_string(msg.version));
  }
  std::copy(bytes.begin() + 1, bytes.begin() + 17, msg.msg_id.begin());
  msg.origin = get_u64(bytes.data() + 17);
  if (bytes[25] > 1) throw ParseError("invalid msg_type " + std::to_string(bytes[25]));
  msg.msg_type = static_cast<MsgType>(bytes[25]);
  msg.severity = bytes[26];
  msg.hop_count = bytes[27];
  msg.max_hops = bytes[28];
  if (msg.hop_count > msg.max_hops) {
    throw ParseError("hop_count exceeds max_hops");
  }
  msg.ttl_s = get_u32(bytes.data() + 29);
  msg.created_at_s = get_u64(bytes.data() + 33);
  msg.trust_filter = bytes[41];
  msg.service_mask = bytes[42];
  msg.location = get_u32(bytes.data() + 43);
  std::size_t payload_len = kMaxPayload;
  while (payload_len > 0 && bytes[kHeaderSize + payload_len - 1] == 0) --payload_len;
  msg.payload.assign(bytes.begin() + kHeaderSize,
                     bytes.begin() + kHeaderSize + payload_len);
  return msg;
}

DistressMessage create_distress(NodeId origin, MsgType type, int severity,
                                LocationId location, std::string_view payload,
                                std::uint64_t now_s, Rng& rng) {
  if (severity < 0 || severity > 255) {
    throw ParseError("severity out of range 0-255");
  }
  if (payload.size() > kMaxPayload) {
    throw ParseError("payload too long: " + std::to_string(payload.size()) + " > " +
                     std::to_string(kMaxPayload));
  }
  DistressMessage msg;
  msg.origin = origin;
  msg.msg_type = type;
  msg.severity = static_cast<std::uint8_t>(severity);
  msg.hop_count = 0;
  msg.max_hops = static_cast<std::uint8_t>(1 + severity / 64);  // 1-4
  msg.ttl_s = static_cast<std::uint32_t>(300 + 10 * severity);
  msg.created_at_s = now_s;
  msg.location = location;
  msg.payload.assign(payload);
  for (auto& b : msg.msg_id) b = static_cast<std::uint8_t>(rng.uniform_int(256));
  if (type == MsgType::Emergency) {
    msg.trust_filter = filter_bits::kFriend | filter_bits::kAcquaintance |
                       filter_bits::kService;
    msg.service_mask = service_bit(ServiceTag::Medical) |
                       service_bit(ServiceTag::Security) |
                       service_bit(ServiceTag::Rescue) | service_bit(ServiceTag::Vigil);
  } else {
    msg.trust_filter = filter_bits::kFriend;
    msg.service_mask = 0;
  }
  return msg;
}

bool should_forward(const DistressMessage& msg, NodeId relay, NodeId candidate,
                    const TrustMatrix& trust, std::uint64_t now_s,
                    const SeenSet& candidate_seen) {
  if (candidate == relay) return false;
  if (now_s > msg.expires_at_s()) return false;
  if (msg.hop_count >= msg.max_hops) return false;
  if (candidate_seen.count(msg.msg_id)) return false;
  bool by_class = (msg.trust_filter & class_bit(trust.classify(relay, candidate))) != 0;
  bool by_service = (msg.trust_filter & filter_bits::kService) != 0 &&
                    (msg.service_mask & service_bit(trust.service_tag(candidate))) != 0;
  return by_class || by_service;
}

ReceiveOutcome on_receive(SeenSet& seen, DistressMessage& msg, std::uint64_t now_s) {
  if (now_s > msg.expires_at_s()) return ReceiveOutcome::ExpiredDrop;
  if (!seen.insert(msg.msg_id).second) return ReceiveOutcome::DuplicateDrop;
  msg.hop_count += 1;
  return ReceiveOutcome::AcceptNew;
}

}  // namespace shield
