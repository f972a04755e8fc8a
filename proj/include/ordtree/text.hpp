#pragma once

// Small helpers shared by the line-oriented text formats.

#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordtree::text {

/// Parses whitespace-separated decimal integers. Throws ParseError naming the
/// 0-based token index of the first token that is not an integer.
std::vector<std::int64_t> parse_int_list(std::string_view line);

template <typename Int>
void append_int(std::string& out, Int value) {
  char buf[24];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, end);
}

template <typename Int>
void append_joined(std::string& out, std::span<const Int> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out.push_back(' ');
    append_int(out, values[i]);
  }
}

/// Strips a trailing '\r' so CRLF input behaves like LF input.
std::string_view chomp(std::string_view line);

}  // namespace ordtree::text
