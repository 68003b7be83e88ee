#pragma once

// Test-only reference computations. Nothing here shares code with the BFS
// sweep or the Newton interpolation it checks.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "topo/graph.hpp"
#include "topo/numeric.hpp"
#include "topo/polynomial.hpp"

namespace oracle {

/// All-pairs distances by Floyd-Warshall over a dense matrix.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const topo::Graph& g) {
  constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 4;
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i][j] >= inf) throw std::runtime_error("oracle: disconnected");
  return d;
}

/// counts[k] for k = 0..diameter over pairs i < j (counts[0] == 0).
inline std::vector<std::uint64_t> pair_counts(const topo::Graph& g) {
  const auto d = floyd_warshall(g);
  std::vector<std::uint64_t> counts{0};
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (counts.size() <= d[i][j]) counts.resize(d[i][j] + 1, 0);
      ++counts[d[i][j]];
    }
  return counts;
}

/// Sum of d(u, v) over unordered pairs, straight from the matrix.
inline std::uint64_t wiener(const topo::Graph& g) {
  const auto d = floyd_warshall(g);
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) w += d[i][j];
  return w;
}

/// Solves the Vandermonde system sum_j c_j x_i^j = y_i by Gauss-Jordan
/// elimination over the rationals.
inline topo::RationalPolynomial vandermonde_fit(const std::vector<long long>& xs,
                                                const std::vector<topo::Rational>& ys) {
  using topo::Rational;
  const std::size_t n = xs.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = p;
      p *= xs[i];
    }
    a[i][n] = ys[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = a[i][n] / a[i][i];
  return topo::RationalPolynomial(std::move(coeffs));
}

}  // namespace oracle
