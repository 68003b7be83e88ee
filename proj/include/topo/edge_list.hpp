#pragma once

// Edge-list text format:
//
//   # comment
//   p <vertex_count> <edge_count>
//   e <u> <v>
//   ...
//
// Ids are 0-based. Files whose labels are not all integers in
// [0, vertex_count) are remapped onto 0..L-1 in sorted label order (integer
// labels numerically first, then the rest lexicographically); vertices beyond
// the L labels that occur are isolated.

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "topo/graph.hpp"

namespace topo {

namespace detail {

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct LabelOrder {
  bool operator()(const std::string& a, const std::string& b) const {
    auto na = parse_uint(a), nb = parse_uint(b);
    if (na.has_value() != nb.has_value()) return na.has_value();
    if (na && *na != *nb) return *na < *nb;
    return a < b;
  }
};

}  // namespace detail

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

inline Graph read_edge_list(std::istream& in) {
  std::optional<std::uint64_t> declared_vertices, declared_edges;
  std::vector<std::pair<std::string, std::string>> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag.front() == '#') continue;
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw ParseError(lineno, "expected exactly two fields after '" + tag + "'");
    if (tag == "p") {
      if (declared_vertices) throw ParseError(lineno, "repeated problem line");
      declared_vertices = detail::parse_uint(a);
      declared_edges = detail::parse_uint(b);
      if (!declared_vertices || !declared_edges)
        throw ParseError(lineno, "problem line needs non-negative integer counts");
    } else if (tag == "e") {
      if (!declared_vertices) throw ParseError(lineno, "edge before problem line");
      raw.emplace_back(std::move(a), std::move(b));
    } else {
      throw ParseError(lineno, "unknown record '" + tag + "'");
    }
  }
  if (!declared_vertices) throw ParseError(lineno, "missing problem line");
  if (raw.size() != *declared_edges)
    throw ParseError(lineno, "problem line declares " + std::to_string(*declared_edges) +
                                 " edges but " + std::to_string(raw.size()) + " were given");

  const std::uint64_t n = *declared_vertices;
  bool zero_based = true;
  for (const auto& [a, b] : raw)
    for (const auto* s : {&a, &b}) {
      auto id = detail::parse_uint(*s);
      if (!id || *id >= n) zero_based = false;
    }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (zero_based) {
    for (const auto& [a, b] : raw)
      edges.emplace_back(static_cast<Vertex>(*detail::parse_uint(a)),
                         static_cast<Vertex>(*detail::parse_uint(b)));
  } else {
    std::map<std::string, Vertex, detail::LabelOrder> ids;
    for (const auto& [a, b] : raw) {
      ids.emplace(a, 0);
      ids.emplace(b, 0);
    }
    if (ids.size() > n) throw VertexOutOfRange(ids.size() - 1, n);
    Vertex next = 0;
    for (auto& [label, id] : ids) id = next++;
    for (const auto& [a, b] : raw) edges.emplace_back(ids.at(a), ids.at(b));
  }
  return Graph::from_edge_list(n, edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

}  // namespace topo
