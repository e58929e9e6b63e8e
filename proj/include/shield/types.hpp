#pragma once

#include <cstdint>

namespace shield {

using NodeId = std::uint64_t;
using LocationId = std::uint32_t;

// Mobility is time-slotted; one slot = one minute.
constexpr std::int64_t kSlotSeconds = 60;

// t_s is seconds since simulation start; t=0 is midnight.
inline int hour_of_day(std::int64_t t_s) {
  return static_cast<int>((t_s / 3600) % 24);
}

}  // namespace shield
