#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "shield/errors.hpp"

namespace shield::csv {

// Minimal comma-separated reader for the trace formats: UTF-8, LF endings,
// mandatory header row, no quoting (no field may contain a comma).

std::vector<std::string_view> split_fields(std::string_view line);

// Calls on_row(line_number, fields) for every non-empty data row. Throws
// ParseError if the file is missing or the header does not match.
void for_each_row(const std::filesystem::path& path,
                  std::string_view expected_header,
                  const std::function<void(std::size_t,
                                           const std::vector<std::string_view>&)>& on_row);

// Strict integer field parse: rejects empty fields, trailing junk, fractions.
template <typename Int>
Int parse_int(std::string_view field, const std::string& context) {
  Int value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw ParseError(context + ": expected integer, got '" + std::string(field) + "'");
  }
  return value;
}

double parse_double(std::string_view field, const std::string& context);

}  // namespace shield::csv
