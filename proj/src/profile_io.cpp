#include "pcng/profile_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pcng {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

StrategyProfile parse_profile(std::string_view text) {
  std::vector<PlayerSet> strategies;
  bool have_header = false;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      int n = 0;
      if (line.substr(0, 2) != "n=" || !parse_int(line.substr(2), n)) {
        throw ParseError(line_no, "expected header 'n=<players>'");
      }
      if (n < 1 || n > kMaxPlayers) throw ParseError(line_no, "player count out of range [1, 64]");
      strategies.resize(static_cast<std::size_t>(n));
      have_header = true;
      continue;
    }

    const auto arrow = line.find("->");
    int u = 0;
    int v = 0;
    if (arrow == std::string_view::npos || !parse_int(line.substr(0, arrow), u) ||
        !parse_int(line.substr(arrow + 2), v)) {
      throw ParseError(line_no, "expected link '<u> -> <v>'");
    }
    const int n = static_cast<int>(strategies.size());
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line_no, "player id out of range");
    if (u == v) throw ParseError(line_no, "self-link");
    if (strategies[static_cast<std::size_t>(u)].contains(v)) throw ParseError(line_no, "duplicate link");
    strategies[static_cast<std::size_t>(u)].insert(v);
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n=<players>'");
  return StrategyProfile(std::move(strategies));
}

StrategyProfile read_profile_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open profile file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_profile(buffer.str());
}

std::string format_profile(const StrategyProfile& profile) {
  std::string out = "n=" + std::to_string(profile.n()) + "\n";
  for (Player u = 0; u < profile.n(); ++u) {
    for (Player v : profile.strategy(u)) {
      out += std::to_string(u) + " -> " + std::to_string(v) + "\n";
    }
  }
  return out;
}

}  // namespace pcng
