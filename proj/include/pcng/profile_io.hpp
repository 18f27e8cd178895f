#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pcng/game.hpp"

namespace pcng {

/// Malformed profile text. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//
//   n=<players>
//   <u> -> <v>        one line per initiated channel, 0-based, u initiates
//
// Blank lines and lines starting with '#' are ignored. Output lists links in
// increasing (u, v) order, so format/parse round-trips exactly.

StrategyProfile parse_profile(std::string_view text);
StrategyProfile read_profile_file(const std::string& path);
std::string format_profile(const StrategyProfile& profile);

}  // namespace pcng
