#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topo/numeric.hpp"

namespace topo {

/// Dense univariate polynomial with exact coefficients, indexed by exponent.
///
/// Trailing zeros are trimmed on construction, so equality is coefficient
/// equality and the zero polynomial has no coefficients (degree() == -1).
template <class T>
class BasicPolynomial {
 public:
  using coefficient_type = T;

  BasicPolynomial() = default;

  explicit BasicPolynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

  BasicPolynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  static BasicPolynomial monomial(T coefficient, std::size_t exponent) {
    std::vector<T> c(exponent + 1, T(0));
    c[exponent] = std::move(coefficient);
    return BasicPolynomial(std::move(c));
  }

  const std::vector<T>& coefficients() const noexcept { return c_; }

  /// Coefficient of x^k (zero beyond the degree).
  T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }

  template <class U>
  U evaluate(const U& at) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + U(*it);
    return acc;
  }

  /// p'(1) = sum of k * c_k.
  T derivative_at_one() const {
    T acc(0);
    for (std::size_t k = 1; k < c_.size(); ++k) acc += T(k) * c_[k];
    return acc;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }

  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  BasicPolynomial& operator*=(const T& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(BasicPolynomial a, const T& s) { return a *= s; }
  friend BasicPolynomial operator*(const T& s, BasicPolynomial a) { return a *= s; }

  /// Multiplies by the linear factor (x - root).
  BasicPolynomial times_linear(const T& root) const {
    if (c_.empty()) return {};
    std::vector<T> out(c_.size() + 1, T(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
      out[k + 1] += c_[k];
      out[k] -= root * c_[k];
    }
    return BasicPolynomial(std::move(out));
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using Polynomial = BasicPolynomial<Integer>;
using RationalPolynomial = BasicPolynomial<Rational>;

inline RationalPolynomial to_rational(const Polynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

/// Ascending-exponent text form, e.g. "36x + 57x^2". Zero terms are omitted
/// and unit coefficients are implicit; non-integer rationals are
/// parenthesised ("(13/2)m^2").
template <class T>
std::string format_polynomial(const BasicPolynomial<T>& p, std::string_view var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    T c = p.coefficients()[k];
    if (c == T(0)) continue;
    const bool negative = c < T(0);
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    const std::string mag = to_string(c);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (c != T(1)) {
      if (mag.find('/') != std::string::npos)
        os << '(' << mag << ')';
      else
        os << mag;
    }
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace topo
