#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "topo/distances.hpp"
#include "topo/graph.hpp"
#include "topo/numeric.hpp"
#include "topo/polynomial.hpp"

namespace topo {

/// H(x) = sum over k >= 1 of counts[k] * x^k. No constant term: only pairs of
/// distinct vertices contribute.
inline Polynomial from_distribution(const DistanceDistribution& dd) {
  std::vector<Integer> c;
  c.reserve(dd.counts().size());
  c.emplace_back(0);
  for (std::size_t k = 1; k < dd.counts().size(); ++k) c.emplace_back(dd.counts()[k]);
  return Polynomial(std::move(c));
}

inline Polynomial hosoya_polynomial(const Graph& g, DistributionOptions opts = {}) {
  return from_distribution(distance_distribution(g, opts));
}

inline Integer evaluate(const Polynomial& p, const Integer& at) { return p.evaluate(at); }

inline Integer derivative_at_one(const Polynomial& p) { return p.derivative_at_one(); }

/// Sum of d(u, v) over unordered pairs, accumulated directly from the
/// distance histogram (independently of the polynomial route).
inline Integer wiener_index(const DistanceDistribution& dd) {
  Integer w = 0;
  for (std::size_t k = 1; k < dd.counts().size(); ++k) w += Integer(dd.counts()[k]) * k;
  return w;
}

inline Integer wiener_index(const Graph& g, DistributionOptions opts = {}) {
  return wiener_index(distance_distribution(g, opts));
}

/// Integers that fit in 64 bits become JSON numbers; larger ones become
/// decimal strings.
inline nlohmann::ordered_json to_json(const Integer& x) {
  if (fits_int64(x)) return x.convert_to<long long>();
  return x.str();
}

inline nlohmann::ordered_json to_json(const Rational& x) {
  nlohmann::ordered_json j;
  j["num"] = to_json(Integer(boost::multiprecision::numerator(x)));
  j["den"] = to_json(Integer(boost::multiprecision::denominator(x)));
  return j;
}

/// Coefficient array from exponent 0.
template <class T>
nlohmann::ordered_json to_json(const BasicPolynomial<T>& p) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) j.push_back(to_json(c));
  return j;
}

}  // namespace topo
