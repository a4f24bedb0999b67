#ifndef PVC_GRAPH6_HPP
#define PVC_GRAPH6_HPP

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

/// Largest order representable with the one-byte graph6 size header.
inline constexpr int kMaxGraph6Order = 62;

// graph6: byte n+63, then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed big-endian in 6-bit groups, each +63.

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw std::invalid_argument("graph6 encoding limited to n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("graph6: empty line");
  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw std::invalid_argument("graph6: multi-byte size headers (n > 62) are not supported");
  if (header < 63 || header > 125) throw std::invalid_argument("graph6: bad size byte");
  const int n = header - 63;
  if (n < 1) throw std::invalid_argument("graph6: graph must have at least one vertex");
  const int bits = n * (n - 1) / 2;
  const std::size_t want = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != want)
    throw std::invalid_argument("graph6: expected " + std::to_string(want) + " bytes for n=" + std::to_string(n) +
                                ", got " + std::to_string(text.size()));
  std::vector<int> groups;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of printable range");
    groups.push_back(c - 63);
  }
  if (bits % 6 != 0) {
    const int pad = 6 - bits % 6;
    if (groups.back() & ((1 << pad) - 1)) throw std::invalid_argument("graph6: stray bits set in padding");
  }
  std::vector<Edge> es;
  int k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((groups[k / 6] >> (5 - k % 6)) & 1) es.emplace_back(i, j);
  return Graph(n, es);
}

/// Edge-list text: "n m" followed by m pairs "u v", whitespace separated.
/// Semicolons are treated as whitespace so "4 3; 0 1; 1 2; 2 3" also parses.
inline Graph parse_edge_list(std::string_view text) {
  std::string cleaned(text);
  for (char& ch : cleaned)
    if (ch == ';' || ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  long n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected header 'n m'");
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  std::vector<Edge> es;
  for (long i = 0; i < m; ++i) {
    long u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
    es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("edge list: trailing data '" + extra + "'");
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("edge list: order out of range");
  return Graph(static_cast<int>(n), es);
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

/// Edge list when the first non-blank byte is a digit, graph6 otherwise.
inline Graph parse_graph_auto(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) return parse_edge_list(text);
  std::string_view rest = text.substr(i);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
  return parse_graph6(rest);
}

/// Reads one graph6 graph per non-empty line; '#' starts a comment line.
inline std::vector<Graph> read_graph6_corpus(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace pvc

#endif  // PVC_GRAPH6_HPP
