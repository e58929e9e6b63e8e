#include "shield/csv.hpp"

#include <fstream>

namespace shield::csv {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

void for_each_row(const std::filesystem::path& path,
                  std::string_view expected_header,
                  const std::function<void(std::size_t,
                                           const std::vector<std::string_view>&)>& on_row) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path.string());
  }
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError(path.string() + ": empty file, expected header '" +
                     std::string(expected_header) + "'");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected_header) {
    throw ParseError(path.string() + ": bad header '" + line + "', expected '" +
                     std::string(expected_header) + "'");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    on_row(line_no, split_fields(line));
  }
}

double parse_double(std::string_view field, const std::string& context) {
  double value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw ParseError(context + ": expected number, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace shield::csv
