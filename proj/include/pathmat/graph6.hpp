#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pathmat/graph.hpp"

namespace pathmat {

/// Input error carrying the byte offset of the offending character.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

inline int g6_value(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw parse_error("character outside graph6 range", pos);
  return c - 63;
}

inline std::string_view strip_line_ending(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  return text;
}

}  // namespace detail

/// Decode one graph6 string: size header chr(63+n) for n <= 62 or '~' plus
/// three bytes for 63 <= n <= 258047, followed by the upper triangle in
/// column-major order, six bits per character, each character offset by 63.
inline Graph parse_graph6(std::string_view text) {
  text = detail::strip_line_ending(text);
  if (text.empty()) throw parse_error("empty graph6 input", 0);

  long long n = 0;
  std::size_t pos = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw parse_error("graph6 inputs beyond 258047 vertices are not supported", 1);
    if (text.size() < 4) throw parse_error("truncated graph6 size header", text.size());
    for (pos = 1; pos <= 3; ++pos) n = (n << 6) | detail::g6_value(text, pos);
    if (n < 63) throw parse_error("non-canonical long-form size header", 1);
  } else {
    n = detail::g6_value(text, 0);
    pos = 1;
  }

  const long long bits = n * (n - 1) / 2;
  const auto need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < need)
    throw parse_error("truncated graph6 edge data", text.size());
  if (text.size() - pos > need)
    throw parse_error("trailing characters after graph6 data", pos + need);

  std::vector<Edge> edges;
  long long idx = 0;
  int value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++idx) {
      const int within = static_cast<int>(idx % 6);
      if (within == 0) value = detail::g6_value(text, pos + static_cast<std::size_t>(idx / 6));
      if ((value >> (5 - within)) & 1) edges.emplace_back(i, j);
    }
  }
  // padding in the final character must be zero
  for (; idx < static_cast<long long>(need) * 6; ++idx) {
    const int within = static_cast<int>(idx % 6);
    const std::size_t at = pos + static_cast<std::size_t>(idx / 6);
    if (within == 0) value = detail::g6_value(text, at);
    if ((value >> (5 - within)) & 1)
      throw parse_error("nonzero padding bits in graph6 data", at);
  }

  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 258047)
    throw std::invalid_argument("graph6 encoding supports at most 258047 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

/// Edge-list text: first line is the vertex count, then one "u v" pair per
/// line (0-based). Duplicate lines collapse to a single edge.
inline Graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line_start = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (pos <= text.size()) {
    if (pos == text.size() || text[pos] == '\n') {
      std::string_view line = text.substr(line_start, pos - line_start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
      if (!blank) {
        std::istringstream ss{std::string(line)};
        if (n < 0) {
          if (!(ss >> n) || n < 0)
            throw parse_error("expected a vertex count on the first line", line_start);
          std::string rest;
          if (ss >> rest) throw parse_error("unexpected tokens after vertex count", line_start);
        } else {
          int u = 0, v = 0;
          if (!(ss >> u >> v))
            throw parse_error("expected an edge line \"u v\"", line_start);
          std::string rest;
          if (ss >> rest) throw parse_error("unexpected tokens after edge", line_start);
          if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u), line_start);
          if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("edge endpoint out of range", line_start);
          edges.emplace_back(u, v);
        }
      }
      line_start = pos + 1;
    }
    if (pos == text.size()) break;
    ++pos;
  }
  if (n < 0) throw parse_error("empty edge-list input", 0);
  return Graph(n, std::move(edges));
}

/// A line is treated as graph6 when its first character lies in the graph6
/// byte range; edge-list lines start with a digit (below that range).
inline bool looks_like_graph6(std::string_view first_line) {
  first_line = detail::strip_line_ending(first_line);
  if (first_line.empty()) return false;
  const auto c = static_cast<unsigned char>(first_line.front());
  return c >= 63 && c <= 126;
}

/// Auto-detecting parse of a single graph. graph6 inputs are one graph per
/// line; only the first non-blank line is consumed.
inline Graph parse_graph_auto(std::string_view text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw parse_error("empty graph input", 0);
  std::size_t end = text.find('\n', start);
  std::string_view first_line =
      text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
  if (looks_like_graph6(first_line)) return parse_graph6(first_line);
  return parse_edge_list(text.substr(start));
}

}  // namespace pathmat
