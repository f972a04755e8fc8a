#include "ordtree/text.hpp"

#include <string>

#include "ordtree/error.hpp"

namespace ordtree::text {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view line) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_space(line[end])) ++end;

    std::string_view token = line.substr(pos, end - pos);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("token " + std::to_string(values.size()) + " ('" + std::string(token) +
                           "') is not an integer",
                       values.size());
    }
    values.push_back(value);
    pos = end;
  }
  return values;
}

std::string_view chomp(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace ordtree::text
