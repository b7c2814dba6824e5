#ifndef MATCHCRIT_GRAPH6_HPP
#define MATCHCRIT_GRAPH6_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "matchcrit/graph.hpp"

namespace matchcrit {

class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(std::size_t offset, const std::string& what)
      : std::invalid_argument("graph6 error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, 10) == ">>graph6<<") pos = 10;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte = [&](std::size_t i) -> int {
    if (i >= text.size()) throw Graph6Error(i, "unexpected end of input");
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error(i, "character out of range 63..126");
    return c - 63;
  };

  if (pos >= text.size()) throw Graph6Error(pos, "empty input");
  long long n = 0;
  if (text[pos] != '~') {
    n = byte(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] != '~') {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | byte(pos + static_cast<std::size_t>(i));
    if (n < 63) throw Graph6Error(pos, "non-canonical header for n < 63");
    pos += 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | byte(pos + static_cast<std::size_t>(i));
    if (n < 258048) throw Graph6Error(pos, "non-canonical header for n < 258048");
    pos += 8;
  }
  if (n > 100000) throw Graph6Error(pos, "graph too large for dense representation");

  const long long bits = n * (n - 1) / 2;
  const std::size_t chars = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != chars)
    throw Graph6Error(text.size() < pos + chars ? text.size() : pos + chars,
                      "expected " + std::to_string(chars) + " data bytes, found " + std::to_string(text.size() - pos));

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((byte(at) >> (5 - k % 6)) & 1) g.connect(u, v);
    }
  for (; k < static_cast<long long>(chars) * 6; ++k) {
    std::size_t at = pos + static_cast<std::size_t>(k / 6);
    if ((byte(at) >> (5 - k % 6)) & 1) throw Graph6Error(at, "nonzero padding bit");
  }
  return g;
}

inline std::string write_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace matchcrit

#endif  // MATCHCRIT_GRAPH6_HPP
