#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "topo/error.hpp"
#include "topo/graph.hpp"
#include "topo/orbits.hpp"

namespace topo {

/// Number of unordered vertex pairs at each distance.
///
/// counts()[k] is the number of pairs {u, v}, u != v, with d(u, v) = k. The
/// entry at k = 0 is always zero and the last entry is nonzero, so
/// diameter() == counts().size() - 1 (0 for graphs with fewer than two
/// vertices).
class DistanceDistribution {
 public:
  DistanceDistribution() : counts_{0} {}

  /// Takes a dense histogram indexed by distance; trailing zeros are dropped.
  explicit DistanceDistribution(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) counts_.push_back(0);
    counts_[0] = 0;
    while (counts_.size() > 1 && counts_.back() == 0) counts_.pop_back();
  }

  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  std::uint64_t count(std::size_t k) const noexcept { return k < counts_.size() ? counts_[k] : 0; }

  std::size_t diameter() const noexcept { return counts_.size() - 1; }

  std::uint64_t total_pairs() const noexcept {
    std::uint64_t s = 0;
    for (auto c : counts_) s += c;
    return s;
  }

  friend bool operator==(const DistanceDistribution&, const DistanceDistribution&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

namespace detail {

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

/// Reusable BFS buffers. dist is reset only on the vertices the previous run
/// touched.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(std::size_t n) : dist_(n, kUnreached) { queue_.reserve(n); }

  /// Runs BFS from source and adds one to hist[d] for every reached vertex at
  /// distance d >= 1. Throws Disconnected if some vertex is unreachable.
  void accumulate(const Graph& g, Vertex source, std::vector<std::uint64_t>& hist,
                  std::uint64_t weight = 1) {
    run(g, source);
    for (Vertex v : queue_) {
      const auto d = dist_[v];
      if (d == 0) continue;
      if (hist.size() <= d) hist.resize(d + 1, 0);
      hist[d] += weight;
    }
  }

  void run(const Graph& g, Vertex source) {
    for (Vertex v : queue_) dist_[v] = kUnreached;
    queue_.clear();
    dist_[source] = 0;
    queue_.push_back(source);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      const auto next = dist_[v] + 1;
      for (Vertex w : g.neighbors(v))
        if (dist_[w] == kUnreached) {
          dist_[w] = next;
          queue_.push_back(w);
        }
    }
    if (queue_.size() != dist_.size()) {
      auto it = std::find(dist_.begin(), dist_.end(), kUnreached);
      throw Disconnected(static_cast<std::uint64_t>(it - dist_.begin()));
    }
  }

  const std::vector<std::uint32_t>& distances() const noexcept { return dist_; }

 private:
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> queue_;
};

inline void add_into(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t k = 0; k < from.size(); ++k) into[k] += from[k];
}

inline DistanceDistribution halve_ordered(std::vector<std::uint64_t> ordered) {
  for (auto& c : ordered) {
    if (c % 2 != 0) throw std::logic_error("odd ordered pair count; distance histogram is corrupt");
    c /= 2;
  }
  return DistanceDistribution(std::move(ordered));
}

}  // namespace detail

/// Single-source BFS distances; result[v] = d(source, v).
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.vertex_count()) throw VertexOutOfRange(source, g.vertex_count());
  detail::BfsWorkspace ws(g.vertex_count());
  ws.run(g, source);
  return ws.distances();
}

struct DistributionOptions {
  /// Worker threads for the all-sources sweep. 0 means hardware concurrency.
  /// The result does not depend on this value.
  unsigned threads = 1;
};

/// All-pairs distance distribution, one BFS per vertex.
inline DistanceDistribution distance_distribution(const Graph& g, DistributionOptions opts = {}) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return {};

  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : opts.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  // Worker w handles sources w, w+T, w+2T, ...; histograms are summed in
  // worker order afterwards, so the total is schedule independent.
  std::vector<std::vector<std::uint64_t>> partial(threads);
  auto sweep = [&](unsigned w) {
    detail::BfsWorkspace ws(n);
    for (std::size_t s = w; s < n; s += threads)
      ws.accumulate(g, static_cast<Vertex>(s), partial[w]);
  };

  if (threads == 1) {
    sweep(0);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
          try {
            sweep(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<std::uint64_t> ordered;
  for (const auto& h : partial) detail::add_into(ordered, h);
  return detail::halve_ordered(std::move(ordered));
}

inline std::size_t diameter(const Graph& g, DistributionOptions opts = {}) {
  return distance_distribution(g, opts).diameter();
}

struct OrbitSweepStats {
  std::size_t bfs_runs = 0;
};

/// Distance distribution from one BFS per orbit representative, each
/// histogram weighted by its orbit size. Equal to distance_distribution(g)
/// whenever the orbits are induced by automorphisms of g; that claim is not
/// checked.
inline DistanceDistribution orbit_distance_distribution(const Graph& g, const OrbitSpec& orbits,
                                                        OrbitSweepStats* stats = nullptr) {
  orbits.validate(g.vertex_count());
  if (stats) stats->bfs_runs = 0;
  if (g.vertex_count() < 2) return {};

  detail::BfsWorkspace ws(g.vertex_count());
  std::vector<std::uint64_t> ordered;
  for (const auto& o : orbits.orbits) {
    ws.accumulate(g, o.representative, ordered, o.size());
    if (stats) ++stats->bfs_runs;
  }
  return detail::halve_ordered(std::move(ordered));
}

}  // namespace topo
