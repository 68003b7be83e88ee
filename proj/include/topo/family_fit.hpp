#pragma once

// Re-deriving closed forms for a one-parameter graph family: sample the
// distance distribution at several parameter values, interpolate each
// per-distance count exactly as a polynomial in the parameter, then check the
// result against brute force at held-out parameter values.

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "topo/distances.hpp"
#include "topo/error.hpp"
#include "topo/generators.hpp"
#include "topo/hosoya.hpp"
#include "topo/numeric.hpp"
#include "topo/polynomial.hpp"

namespace topo {

struct FamilyDescriptor {
  std::string name;
  /// Fixed parameters, e.g. {"n", 5} for the Jahangir family J(5, m).
  std::vector<std::pair<std::string, long long>> fixed;
  /// Smallest valid family parameter.
  long long min_parameter = 1;
  std::function<Graph(long long)> make;

  Graph operator()(long long m) const {
    if (m < min_parameter)
      throw InvalidParameter(name + ": parameter must be >= " + std::to_string(min_parameter) +
                             " (got " + std::to_string(m) + ")");
    return make(m);
  }
};

namespace family {

inline FamilyDescriptor jahangir(int n) {
  if (n < 1) throw InvalidParameter("jahangir: n must be >= 1");
  return {"jahangir", {{"n", n}}, 3, [n](long long m) { return topo::jahangir(n, int(m)); }};
}
inline FamilyDescriptor cycle() {
  return {"cycle", {}, 3, [](long long m) { return topo::cycle(int(m)); }};
}
inline FamilyDescriptor path() {
  return {"path", {}, 1, [](long long m) { return topo::path(int(m)); }};
}
inline FamilyDescriptor star() {
  return {"star", {}, 1, [](long long m) { return topo::star(int(m)); }};
}
inline FamilyDescriptor complete() {
  return {"complete", {}, 1, [](long long m) { return topo::complete(int(m)); }};
}
inline FamilyDescriptor wheel() {
  return {"wheel", {}, 3, [](long long m) { return topo::wheel(int(m)); }};
}
/// The same graph for every parameter value.
inline FamilyDescriptor constant(std::string name, Graph g) {
  return {std::move(name), {}, std::numeric_limits<long long>::min(),
          [g = std::move(g)](long long) { return g; }};
}

}  // namespace family

/// Brute-force counts: rows[i][k] is the number of pairs at distance k in
/// the graph for m_values[i]. Rows are zero-padded to max_k.
struct SampleTable {
  std::vector<long long> m_values;
  std::vector<std::vector<std::uint64_t>> rows;
  std::size_t max_k = 0;

  std::uint64_t count(std::size_t i, std::size_t k) const {
    return k < rows[i].size() ? rows[i][k] : 0;
  }
};

inline SampleTable sample_counts(const FamilyDescriptor& family, const std::vector<long long>& m_values,
                                 DistributionOptions opts = {}) {
  SampleTable t;
  t.m_values = m_values;
  for (long long m : m_values) {
    auto counts = distance_distribution(family(m), opts).counts();
    t.max_k = std::max(t.max_k, counts.size() - 1);
    t.rows.push_back(std::move(counts));
  }
  for (auto& r : t.rows) r.resize(t.max_k + 1, 0);
  return t;
}

struct FamilyFormula {
  FamilyDescriptor family;
  std::size_t fitted_degree = 0;
  /// per_k[k - 1] is the count of pairs at distance k as a polynomial in m.
  std::vector<RationalPolynomial> per_k;
  std::vector<long long> valid_domain;
  std::size_t max_k = 0;

  RationalPolynomial poly(std::size_t k) const {
    return k >= 1 && k <= per_k.size() ? per_k[k - 1] : RationalPolynomial{};
  }

  Rational predict(long long m, std::size_t k) const { return poly(k).evaluate(Rational(m)); }
};

/// Newton-form interpolation through (xs[i], ys[i]), expanded to monomial
/// coefficients.
inline RationalPolynomial interpolate(const std::vector<long long>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  // In-place divided differences: afterwards ys[i] = f[x_0, ..., x_i].
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      ys[i] = (ys[i] - ys[i - 1]) / Rational(xs[i] - xs[i - level]);

  RationalPolynomial p;
  for (std::size_t i = n; i-- > 0;) {
    p = p.times_linear(Rational(xs[i]));
    p += RationalPolynomial{ys[i]};
  }
  return p;
}

/// Per-distance interpolating polynomials of the given degree. Uses the
/// first degree + 1 samples and requires every other sample to lie on the
/// result.
inline FamilyFormula fit(const FamilyDescriptor& family, const SampleTable& samples,
                         std::size_t degree) {
  std::set<long long> seen;
  for (long long m : samples.m_values)
    if (!seen.insert(m).second) throw DuplicateSampleParameter(m);
  if (samples.m_values.size() < degree + 1)
    throw InsufficientSamples("degree " + std::to_string(degree) + " needs " +
                              std::to_string(degree + 1) + " samples, got " +
                              std::to_string(samples.m_values.size()));

  FamilyFormula f{family, degree, {}, {seen.begin(), seen.end()}, samples.max_k};
  const std::vector<long long> xs(samples.m_values.begin(), samples.m_values.begin() + degree + 1);
  for (std::size_t k = 1; k <= samples.max_k; ++k) {
    std::vector<Rational> ys;
    for (std::size_t i = 0; i <= degree; ++i) ys.emplace_back(samples.count(i, k));
    f.per_k.push_back(interpolate(xs, std::move(ys)));
  }

  for (std::size_t i = 0; i < samples.m_values.size(); ++i)
    for (std::size_t k = 1; k <= samples.max_k; ++k)
      if (f.predict(samples.m_values[i], k) != Rational(samples.count(i, k)))
        throw InconsistentSamples("sample m=" + std::to_string(samples.m_values[i]) +
                                  " is not reproduced at distance " + std::to_string(k) +
                                  " by a degree-" + std::to_string(degree) + " fit");
  return f;
}

inline FamilyFormula fit(const FamilyDescriptor& family, const std::vector<long long>& m_values,
                         std::size_t degree, DistributionOptions opts = {}) {
  std::set<long long> seen;
  for (long long m : m_values)
    if (!seen.insert(m).second) throw DuplicateSampleParameter(m);
  return fit(family, sample_counts(family, m_values, opts), degree);
}

/// Sum over k of k * per_k(m): the Wiener index as a polynomial in m.
inline RationalPolynomial wiener_polynomial(const FamilyFormula& f) {
  RationalPolynomial w;
  for (std::size_t k = 1; k <= f.per_k.size(); ++k) w += f.per_k[k - 1] * Rational(k);
  return w;
}

struct FormulaMismatch {
  long long m;
  std::size_t k;
  Rational predicted;
  std::uint64_t observed;
};

struct HoldoutReport {
  std::vector<long long> holdout;
  std::size_t comparisons = 0;
  std::vector<FormulaMismatch> mismatches;

  bool pass() const noexcept { return mismatches.empty(); }
};

/// Compares predicted and brute-force counts at each held-out m, for every k
/// up to the larger of the formula's max_k and the sample's diameter.
inline HoldoutReport verify_formula(const FamilyFormula& f, const std::vector<long long>& holdout,
                                    DistributionOptions opts = {}) {
  for (long long m : holdout)
    if (std::find(f.valid_domain.begin(), f.valid_domain.end(), m) != f.valid_domain.end())
      throw InvalidParameter("holdout m=" + std::to_string(m) + " was used for fitting");

  HoldoutReport rep{holdout, 0, {}};
  for (long long m : holdout) {
    const auto dd = distance_distribution(f.family(m), opts);
    const std::size_t top = std::max(f.max_k, dd.diameter());
    for (std::size_t k = 1; k <= top; ++k) {
      ++rep.comparisons;
      Rational predicted = f.predict(m, k);
      if (predicted != Rational(dd.count(k)))
        rep.mismatches.push_back({m, k, std::move(predicted), dd.count(k)});
    }
  }
  return rep;
}

inline nlohmann::ordered_json to_json(const FamilyDescriptor& d) {
  nlohmann::ordered_json j;
  j["name"] = d.name;
  for (const auto& [key, value] : d.fixed) j[key] = value;
  return j;
}

inline nlohmann::ordered_json to_json(const FamilyFormula& f) {
  nlohmann::ordered_json j;
  j["family"] = to_json(f.family);
  j["degree"] = f.fitted_degree;
  j["domain"] = f.valid_domain;
  j["max_k"] = f.max_k;
  j["per_k"] = nlohmann::ordered_json::array();
  for (std::size_t k = 1; k <= f.per_k.size(); ++k) {
    nlohmann::ordered_json e;
    e["k"] = k;
    e["coefficients"] = to_json(f.per_k[k - 1]);
    j["per_k"].push_back(std::move(e));
  }
  return j;
}

inline nlohmann::ordered_json to_json(const HoldoutReport& r) {
  nlohmann::ordered_json j;
  j["holdout"] = r.holdout;
  j["comparisons"] = r.comparisons;
  j["pass"] = r.pass();
  j["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& mm : r.mismatches) {
    nlohmann::ordered_json e;
    e["m"] = mm.m;
    e["k"] = mm.k;
    e["predicted"] = to_json(mm.predicted);
    e["observed"] = mm.observed;
    j["mismatches"].push_back(std::move(e));
  }
  return j;
}

}  // namespace topo
