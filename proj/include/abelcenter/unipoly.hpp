#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "abelcenter/rational.hpp"

namespace abelcenter {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// degree order. Canonical form: no trailing zero coefficient, so the zero
/// polynomial is the empty sequence and degree() of zero is -1.
class UniPoly {
 public:
  UniPoly() = default;

  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  UniPoly(std::initializer_list<Rational> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end()) {
    trim();
  }

  static UniPoly constant(Rational c) {
    UniPoly f;
    if (c != 0) f.coeffs_.push_back(std::move(c));
    return f;
  }

  /// c * x^k
  static UniPoly monomial(int k, Rational c = Rational(1)) {
    if (k < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    UniPoly f;
    if (c != 0) {
      f.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
      f.coeffs_.back() = std::move(c);
    }
    return f;
  }

  static UniPoly identity() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, with -1 as the sentinel for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i (zero beyond the degree).
  const Rational& coeff(int i) const {
    static const Rational kZero{};
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const Rational& leading_coeff() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  friend UniPoly operator+(const UniPoly& f, const UniPoly& g) {
    std::vector<Rational> c(std::max(f.coeffs_.size(), g.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) c[i] += f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) c[i] += g.coeffs_[i];
    return UniPoly(std::move(c));
  }

  friend UniPoly operator-(const UniPoly& f, const UniPoly& g) {
    std::vector<Rational> c(std::max(f.coeffs_.size(), g.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) c[i] += f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) c[i] -= g.coeffs_[i];
    return UniPoly(std::move(c));
  }

  friend UniPoly operator-(const UniPoly& f) {
    std::vector<Rational> c(f.coeffs_);
    for (auto& v : c) v = -v;
    return UniPoly(std::move(c));
  }

  friend UniPoly operator*(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Rational> c(f.coeffs_.size() + g.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (f.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) c[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return UniPoly(std::move(c));
  }

  friend UniPoly operator*(const UniPoly& f, const Rational& s) {
    if (s == 0) return {};
    std::vector<Rational> c(f.coeffs_);
    for (auto& v : c) v *= s;
    return UniPoly(std::move(c));
  }

  friend UniPoly operator*(const Rational& s, const UniPoly& f) { return f * s; }

  UniPoly& operator+=(const UniPoly& g) { return *this = *this + g; }
  UniPoly& operator-=(const UniPoly& g) { return *this = *this - g; }
  UniPoly& operator*=(const UniPoly& g) { return *this = *this * g; }

  bool operator==(const UniPoly&) const = default;

  /// Horner evaluation at x0, exact.
  Rational eval(const Rational& x0) const {
    Rational acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
  }

  /// Horner evaluation in floating point straight from the exact coefficients.
  template <class Real>
  Real eval_fp(Real x0) const {
    Real acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x0 + it->template convert_to<Real>();
    return acc;
  }

  /// this ∘ g by Horner in the polynomial ring.
  UniPoly compose(const UniPoly& g) const {
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * g + constant(*it);
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rational(i);
    return UniPoly(std::move(c));
  }

  /// The antiderivative F with F' = this and F(a) = 0.
  UniPoly antiderivative_from(const Rational& a) const {
    if (is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i] / Rational(i + 1);
    UniPoly F{std::move(c)};
    F.coeffs_[0] = -F.eval(a);
    F.trim();
    return F;
  }

  Rational definite_integral(const Rational& a, const Rational& b) const {
    UniPoly F = antiderivative_from(a);
    return F.eval(b);
  }

  /// Long division over the field of rationals: (quotient, remainder).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& g) const {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly r = *this;
    if (r.degree() < g.degree()) return {UniPoly{}, r};
    std::vector<Rational> qc(static_cast<std::size_t>(r.degree() - g.degree()) + 1, Rational(0));
    const Rational& lg = g.leading_coeff();
    while (!r.is_zero() && r.degree() >= g.degree()) {
      int shift = r.degree() - g.degree();
      Rational factor = r.leading_coeff() / lg;
      qc[static_cast<std::size_t>(shift)] = factor;
      r -= UniPoly::monomial(shift, factor) * g;
    }
    return {UniPoly(std::move(qc)), r};
  }

  /// Exact quotient or nullopt when the division leaves a remainder.
  std::optional<UniPoly> divide_exact(const UniPoly& g) const {
    auto [q, r] = divmod(g);
    if (!r.is_zero()) return std::nullopt;
    return q;
  }

  UniPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    UniPoly acc = constant(Rational(1));
    UniPoly base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base;
      if (e > 1) base = base * base;
    }
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace abelcenter
