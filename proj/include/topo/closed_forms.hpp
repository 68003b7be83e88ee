#pragma once

// Closed forms for the Jahangir family J(5, m), m >= 3, and their check
// against brute-force BFS.
//
// Pair counts by distance k:
//   k=1: 6m            k=4: 4m^2 - 4m
//   k=2: (m^2 + 13m)/2 k=5: 4m^2 - 6m
//   k=3: 2m^2 + 5m     k=6: 2m^2 - 5m
// Wiener index: 55m^2 - 42m.
//
// Every verification report carries two errata tags:
//   "eq15": the k=4 count is 4m^2 - 4m, not 4m^2 - 2m. Only the former keeps
//           the counts summing to C(5m+1, 2).
//   "eq9":  the handshake sum weights the center by its degree m, not by 3;
//           only then does it give 6m edges.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "topo/distances.hpp"
#include "topo/error.hpp"
#include "topo/generators.hpp"
#include "topo/hosoya.hpp"
#include "topo/numeric.hpp"
#include "topo/polynomial.hpp"

namespace topo::j5 {

inline constexpr int kDiameter = 6;
inline const std::array<const char*, 2> kErrata{"eq15", "eq9"};

namespace detail {
inline void check_m(long long m) {
  if (m < 3) throw InvalidParameter("J(5, m) needs m >= 3 (got " + std::to_string(m) + ")");
}
}  // namespace detail

/// Number of unordered vertex pairs of J(5, m) at distance k, 1 <= k <= 6.
inline Integer distance_count(long long m, int k) {
  detail::check_m(m);
  const Integer M = m;
  switch (k) {
    case 1: return 6 * M;
    case 2: return M * (M + 13) / 2;  // m(m+13) is always even
    case 3: return 2 * M * M + 5 * M;
    case 4: return 4 * M * M - 4 * M;
    case 5: return 4 * M * M - 6 * M;
    case 6: return 2 * M * M - 5 * M;
    default:
      throw InvalidParameter("J(5, m) distance k must be in 1..6 (got " + std::to_string(k) + ")");
  }
}

inline Polynomial hosoya(long long m) {
  detail::check_m(m);
  std::vector<Integer> c{0};
  for (int k = 1; k <= kDiameter; ++k) c.push_back(distance_count(m, k));
  return Polynomial(std::move(c));
}

inline Integer wiener(long long m) {
  detail::check_m(m);
  const Integer M = m;
  return 55 * M * M - 42 * M;
}

/// Vertex counts by role: degree-2 periphery, hubs, center. Keyed by role
/// rather than degree since at m = 3 the center and the hubs share degree 3.
struct DegreePartition {
  Integer periphery;
  Integer hubs;
  Integer center;
  friend bool operator==(const DegreePartition&, const DegreePartition&) = default;
};

inline DegreePartition degree_partition(long long m) {
  detail::check_m(m);
  return {4 * Integer(m), Integer(m), Integer(1)};
}

/// Handshake lemma over the role partition: (2|V2| + 3|V3| + m|Vc|) / 2.
inline Integer edge_count_from_partition(long long m) {
  const auto p = degree_partition(m);
  return (2 * p.periphery + 3 * p.hubs + Integer(m) * p.center) / 2;
}

/// All closed-form quantities for one m.
struct Report {
  long long m;
  std::array<Integer, kDiameter> per_k_counts;
  Polynomial hosoya;
  Integer wiener;
  DegreePartition degree_partition;
};

inline Report report(long long m) {
  Report r{m, {}, j5::hosoya(m), j5::wiener(m), j5::degree_partition(m)};
  for (int k = 1; k <= kDiameter; ++k) r.per_k_counts[k - 1] = distance_count(m, k);
  return r;
}

struct MRange {
  long long first;
  long long last;
};

struct Check {
  long long m;
  bool pass;
  Polynomial closed_form;
  Polynomial oracle;
  Integer wiener_closed;
  Integer wiener_oracle;
  /// Smallest exponent whose coefficients differ, if any.
  std::optional<std::size_t> first_mismatch;
};

struct VerificationReport {
  std::vector<Check> results;
  std::vector<std::string> errata{kErrata.begin(), kErrata.end()};

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

/// Compares the closed forms with BFS brute force on jahangir(5, m) for
/// every m in the inclusive range, in increasing m.
inline VerificationReport verify_against_oracle(MRange range, DistributionOptions opts = {}) {
  detail::check_m(range.first);
  if (range.last < range.first)
    throw InvalidParameter("empty m range " + std::to_string(range.first) + ".." +
                           std::to_string(range.last));
  VerificationReport rep;
  for (long long m = range.first; m <= range.last; ++m) {
    const auto dd = distance_distribution(jahangir(5, static_cast<int>(m)), opts);
    Check c{m, true, hosoya(m), from_distribution(dd), wiener(m), wiener_index(dd), std::nullopt};
    const auto len = std::max(c.closed_form.coefficients().size(), c.oracle.coefficients().size());
    for (std::size_t k = 0; k < len; ++k)
      if (c.closed_form[k] != c.oracle[k]) {
        c.first_mismatch = k;
        break;
      }
    c.pass = !c.first_mismatch && c.wiener_closed == c.wiener_oracle;
    rep.results.push_back(std::move(c));
  }
  return rep;
}

inline nlohmann::ordered_json to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["family"] = "jahangir";
  j["n"] = 5;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.results) {
    nlohmann::ordered_json r;
    r["m"] = c.m;
    r["pass"] = c.pass;
    r["closed_form"] = topo::to_json(c.closed_form);
    r["oracle"] = topo::to_json(c.oracle);
    r["wiener_closed"] = topo::to_json(c.wiener_closed);
    r["wiener_oracle"] = topo::to_json(c.wiener_oracle);
    if (c.first_mismatch) r["first_mismatch"] = *c.first_mismatch;
    j["results"].push_back(std::move(r));
  }
  j["errata"] = rep.errata;
  return j;
}

}  // namespace topo::j5
