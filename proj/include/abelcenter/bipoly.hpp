#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "abelcenter/unipoly.hpp"

namespace abelcenter {

/// Bivariate polynomial in x and y, stored as y-indexed rows of UniPoly:
/// sum_j row_j(x) * y^j. The Abel vector field and every curve handled here
/// have tiny y-degree; x is where degree grows. No zero rows are kept.
class BiPoly {
 public:
  BiPoly() = default;

  explicit BiPoly(std::map<int, UniPoly> rows) : rows_(std::move(rows)) { trim(); }

  static BiPoly from_x_poly(UniPoly f, int y_power = 0) {
    if (y_power < 0) throw std::invalid_argument("negative y power");
    BiPoly F;
    if (!f.is_zero()) F.rows_.emplace(y_power, std::move(f));
    return F;
  }

  static BiPoly constant(Rational c) { return from_x_poly(UniPoly::constant(std::move(c))); }

  bool is_zero() const { return rows_.empty(); }

  /// Degree in y, -1 for the zero polynomial.
  int y_degree() const { return rows_.empty() ? -1 : rows_.rbegin()->first; }

  const std::map<int, UniPoly>& rows() const { return rows_; }

  /// Row of y^j (zero polynomial if absent).
  const UniPoly& row(int j) const {
    static const UniPoly kZero{};
    auto it = rows_.find(j);
    return it == rows_.end() ? kZero : it->second;
  }

  friend BiPoly operator+(const BiPoly& F, const BiPoly& G) {
    std::map<int, UniPoly> rows = F.rows_;
    for (const auto& [j, g] : G.rows_) {
      auto [it, inserted] = rows.try_emplace(j, g);
      if (!inserted) it->second += g;
    }
    return BiPoly(std::move(rows));
  }

  friend BiPoly operator-(const BiPoly& F, const BiPoly& G) { return F + (-G); }

  friend BiPoly operator-(const BiPoly& F) {
    std::map<int, UniPoly> rows;
    for (const auto& [j, f] : F.rows_) rows.emplace(j, -f);
    return BiPoly(std::move(rows));
  }

  friend BiPoly operator*(const BiPoly& F, const BiPoly& G) {
    std::map<int, UniPoly> rows;
    for (const auto& [i, f] : F.rows_)
      for (const auto& [j, g] : G.rows_) {
        auto [it, inserted] = rows.try_emplace(i + j, f * g);
        if (!inserted) it->second += f * g;
      }
    return BiPoly(std::move(rows));
  }

  friend BiPoly operator*(const BiPoly& F, const Rational& s) {
    std::map<int, UniPoly> rows;
    if (s != 0)
      for (const auto& [j, f] : F.rows_) rows.emplace(j, f * s);
    return BiPoly(std::move(rows));
  }

  friend BiPoly operator*(const Rational& s, const BiPoly& F) { return F * s; }

  BiPoly& operator+=(const BiPoly& G) { return *this = *this + G; }
  BiPoly& operator-=(const BiPoly& G) { return *this = *this - G; }

  bool operator==(const BiPoly&) const = default;

  BiPoly partial_x() const {
    std::map<int, UniPoly> rows;
    for (const auto& [j, f] : rows_) {
      UniPoly d = f.derivative();
      if (!d.is_zero()) rows.emplace(j, std::move(d));
    }
    return BiPoly(std::move(rows));
  }

  BiPoly partial_y() const {
    std::map<int, UniPoly> rows;
    for (const auto& [j, f] : rows_)
      if (j > 0) rows.emplace(j - 1, f * Rational(j));
    return BiPoly(std::move(rows));
  }

  /// Substitute x = x0; the result is a polynomial in y (UniPoly with y as
  /// the variable).
  UniPoly eval_x(const Rational& x0) const {
    if (rows_.empty()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(y_degree()) + 1, Rational(0));
    for (const auto& [j, f] : rows_) c[static_cast<std::size_t>(j)] = f.eval(x0);
    return UniPoly(std::move(c));
  }

  BiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    BiPoly acc = constant(Rational(1));
    BiPoly base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base;
      if (e > 1) base = base * base;
    }
    return acc;
  }

  /// Division as polynomials in y over the rational-function field in x,
  /// via pseudo-division: returns the quotient Q only when the remainder is
  /// identically zero AND every coefficient of Q is a polynomial in x.
  /// Otherwise nullopt. G = 0 is an error.
  std::optional<BiPoly> divide_y(const BiPoly& G) const {
    if (G.is_zero()) throw std::domain_error("division by zero polynomial");
    const int dg = G.y_degree();
    const UniPoly& lead = G.rows_.rbegin()->second;

    // Pseudo-division: after s steps, lead^s * F = Q*G + R with deg_y R < dg.
    BiPoly R = *this;
    std::map<int, UniPoly> q;  // quotient rows, rescaled as we go
    int steps = 0;
    while (!R.is_zero() && R.y_degree() >= dg) {
      int shift = R.y_degree() - dg;
      UniPoly top = R.rows_.rbegin()->second;
      // multiply accumulated quotient through by lead, then add top*y^shift
      for (auto& [j, f] : q) f *= lead;
      auto [it, inserted] = q.try_emplace(shift, top);
      if (!inserted) it->second += top;
      // R <- lead*R - top*y^shift * G
      R = BiPoly::from_x_poly(lead) * R - BiPoly::from_x_poly(top, shift) * G;
      ++steps;
    }
    if (!R.is_zero()) return std::nullopt;

    // True quotient = q / lead^steps; exact divisibility required row-wise.
    UniPoly scale = lead.pow(steps);
    std::map<int, UniPoly> rows;
    for (auto& [j, f] : q) {
      auto exact = f.divide_exact(scale);
      if (!exact) return std::nullopt;
      if (!exact->is_zero()) rows.emplace(j, std::move(*exact));
    }
    return BiPoly(std::move(rows));
  }

 private:
  void trim() {
    for (auto it = rows_.begin(); it != rows_.end();)
      it = it->second.is_zero() ? rows_.erase(it) : std::next(it);
  }

  std::map<int, UniPoly> rows_;
};

}  // namespace abelcenter
