#pragma once

#include <vector>

#include "topo/error.hpp"
#include "topo/graph.hpp"

namespace topo {

struct Orbit {
  Vertex representative;
  std::vector<Vertex> members;

  std::size_t size() const noexcept { return members.size(); }
};

/// Partition of the vertex set into orbits of some automorphism group.
///
/// Only the partition shape is checked; whether the orbits really come from
/// automorphisms is the caller's claim.
struct OrbitSpec {
  std::vector<Orbit> orbits;

  static OrbitSpec singletons(std::size_t vertex_count) {
    OrbitSpec spec;
    spec.orbits.reserve(vertex_count);
    for (Vertex v = 0; v < vertex_count; ++v) spec.orbits.push_back({v, {v}});
    return spec;
  }

  std::size_t total_size() const noexcept {
    std::size_t s = 0;
    for (const auto& o : orbits) s += o.size();
    return s;
  }

  /// Throws MalformedOrbits unless the orbits partition 0..vertex_count-1 and
  /// each representative lies in its own orbit.
  void validate(std::size_t vertex_count) const {
    std::vector<char> seen(vertex_count, 0);
    for (const auto& o : orbits) {
      if (o.members.empty()) throw MalformedOrbits("empty orbit");
      bool has_rep = false;
      for (Vertex v : o.members) {
        if (v >= vertex_count)
          throw MalformedOrbits("orbit member " + std::to_string(v) + " out of range");
        if (seen[v]) throw MalformedOrbits("vertex " + std::to_string(v) + " in two orbits");
        seen[v] = 1;
        has_rep = has_rep || v == o.representative;
      }
      if (!has_rep)
        throw MalformedOrbits("representative " + std::to_string(o.representative) +
                              " not in its orbit");
    }
    if (total_size() != vertex_count)
      throw MalformedOrbits("orbit sizes sum to " + std::to_string(total_size()) +
                            ", expected " + std::to_string(vertex_count));
  }
};

}  // namespace topo
