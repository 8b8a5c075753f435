#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "resolvekit/errors.hpp"

namespace resolvekit::detail {

struct ContentLine {
  std::size_t number;  // 1-based
  std::vector<long long> values;
};

// Splits a stream into non-blank lines of integers. '#' starts a comment
// that runs to end of line.
inline std::vector<ContentLine> read_integer_lines(std::istream& in) {
  std::vector<ContentLine> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view text(raw);
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);

    ContentLine line{number, {}};
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
      if (pos == text.size()) break;
      std::size_t end = pos;
      while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\r') ++end;
      const std::string_view token = text.substr(pos, end - pos);
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(number, "expected an integer, got '" + std::string(token) + "'");
      }
      line.values.push_back(value);
      pos = end;
    }
    if (!line.values.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace resolvekit::detail
