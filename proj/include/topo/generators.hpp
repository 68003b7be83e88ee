#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "topo/error.hpp"
#include "topo/graph.hpp"
#include "topo/orbits.hpp"

namespace topo {

/// Vertex layout of J(n, m): cycle vertices 0..nm-1 in cyclic order, hubs at
/// multiples of n, center at nm.
struct JahangirLabeling {
  int n;
  int m;

  std::size_t cycle_length() const noexcept { return std::size_t(n) * std::size_t(m); }
  Vertex center() const noexcept { return static_cast<Vertex>(cycle_length()); }
  Vertex hub(int i) const noexcept { return static_cast<Vertex>(i * n); }
  bool is_hub(Vertex v) const noexcept { return v < center() && v % n == 0; }
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

inline void check_jahangir(int n, int m) {
  require(n >= 1, "jahangir: n must be >= 1 (got " + std::to_string(n) + ")");
  require(m >= 3, "jahangir: m must be >= 3 (got " + std::to_string(m) + ")");
}

}  // namespace detail

/// Cycle C_{nm} plus a center adjacent to every n-th cycle vertex.
inline Graph jahangir(int n, int m) {
  detail::check_jahangir(n, m);
  const JahangirLabeling lab{n, m};
  const auto len = static_cast<Vertex>(lab.cycle_length());
  std::vector<Edge> edges;
  edges.reserve(std::size_t(m) * (n + 1));
  for (Vertex i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  for (int i = 0; i < m; ++i) edges.emplace_back(lab.hub(i), lab.center());
  return Graph::from_edge_list(len + 1, edges);
}

inline Graph cycle(int k) {
  detail::require(k >= 3, "cycle: length must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::from_edge_list(k, edges);
}

inline Graph path(int k) {
  detail::require(k >= 1, "path: vertex count must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(k, edges);
}

/// k leaves 0..k-1 around center k.
inline Graph star(int k) {
  detail::require(k >= 1, "star: leaf count must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, k);
  return Graph::from_edge_list(k + 1, edges);
}

inline Graph complete(int k) {
  detail::require(k >= 1, "complete: vertex count must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(k, edges);
}

/// Rim 0..k-1, center k. Same graph as jahangir(1, k).
inline Graph wheel(int k) {
  detail::require(k >= 3, "wheel: rim length must be >= 3");
  return jahangir(1, k);
}

/// Edge probability num/den with 0 < num <= den.
struct Probability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

/// Seeded random connected graph on k vertices.
///
/// Procedure (fixed, so results are reproducible anywhere):
///  1. rng = std::mt19937_64(seed).
///  2. For each pair (i, j), i < j, in lexicographic order, draw r = rng();
///     the edge is present iff r % den < num.
///  3. Number components by their smallest vertex, in increasing order. For
///     each consecutive pair of components add the edge joining their
///     smallest vertices.
inline Graph random_connected(int k, Probability p, std::uint64_t seed) {
  detail::require(k >= 1, "random_connected: vertex count must be >= 1");
  detail::require(p.den > 0 && p.num > 0 && p.num <= p.den,
                  "random_connected: edge probability must be in (0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rng() % p.den < p.num) {
        edges.emplace_back(i, j);
        adj[i].push_back(j);
        adj[j].push_back(i);
      }

  std::vector<Vertex> roots;
  std::vector<char> seen(k, 0);
  std::vector<Vertex> stack;
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    roots.push_back(s);
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  for (std::size_t c = 0; c + 1 < roots.size(); ++c) edges.emplace_back(roots[c], roots[c + 1]);
  return Graph::from_edge_list(k, edges);
}

/// Orbits of the rotation i -> i+n (mod nm) on J(n, m): one orbit of size m
/// per residue class mod n, plus the fixed center.
inline OrbitSpec rotation_orbits(int n, int m) {
  detail::check_jahangir(n, m);
  const JahangirLabeling lab{n, m};
  OrbitSpec spec;
  for (int r = 0; r < n; ++r) {
    Orbit o{static_cast<Vertex>(r), {}};
    for (int i = 0; i < m; ++i) o.members.push_back(static_cast<Vertex>(r + i * n));
    spec.orbits.push_back(std::move(o));
  }
  spec.orbits.push_back({lab.center(), {lab.center()}});
  return spec;
}

}  // namespace topo
