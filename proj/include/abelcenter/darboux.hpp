#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "abelcenter/abel_equation.hpp"
#include "abelcenter/text.hpp"

namespace abelcenter {

/// Product candidate H = y^{m0} * prod f_i^{m_i} for first-integral
/// verification. Exponents may be negative (denominator factors).
struct DarbouxCandidate {
  int y_exponent = 0;
  std::vector<std::pair<BiPoly, int>> factors;  // (curve, exponent != 0)
};

/// Derivative of F along the flow: ∂F/∂x + (p y^2 + q y^3) ∂F/∂y.
inline BiPoly lie_derivative(const AbelEquation& eq, const BiPoly& F) {
  return F.partial_x() + eq.vector_field() * F.partial_y();
}

/// Cofactor K with lie_derivative(F) = K*F, when the division is exact with
/// a polynomial quotient; nullopt otherwise. F = 0 is an error.
inline std::optional<BiPoly> cofactor(const AbelEquation& eq, const BiPoly& F) {
  if (F.is_zero()) throw std::domain_error("cofactor of the zero polynomial");
  return lie_derivative(eq, F).divide_y(F);
}

/// Logarithmic-derivative test for H = y^{m0} * prod f_i^{m_i}: H is a first
/// integral iff m0*(p y + q y^2) + sum m_i K_i = 0 identically. Returns false
/// when some factor has no cofactor.
inline bool verify_first_integral(const AbelEquation& eq, const DarbouxCandidate& cand) {
  // y itself is invariant with cofactor p*y + q*y^2.
  BiPoly total = (BiPoly::from_x_poly(eq.p(), 1) + BiPoly::from_x_poly(eq.q(), 2)) *
                 Rational(cand.y_exponent);
  for (const auto& [curve, exponent] : cand.factors) {
    auto K = cofactor(eq, curve);
    if (!K) return false;
    total += *K * Rational(exponent);
  }
  return total.is_zero();
}

/// Substitutes x = x0 into the candidate product and returns the numerator
/// and denominator as polynomials in y (positive exponents in the numerator,
/// negative in the denominator), normalized so the denominator's leading
/// y-coefficient is 1. Reduction is by that constant only, never by a
/// polynomial GCD in y. A denominator vanishing identically at x0 is an
/// error.
inline std::pair<UniPoly, UniPoly> endpoint_profile(const DarbouxCandidate& cand,
                                                    const Rational& x0) {
  UniPoly num = UniPoly::constant(Rational(1));
  UniPoly den = num;
  if (cand.y_exponent > 0)
    num = num * UniPoly::monomial(cand.y_exponent);
  else if (cand.y_exponent < 0)
    den = den * UniPoly::monomial(-cand.y_exponent);
  for (const auto& [curve, exponent] : cand.factors) {
    UniPoly slice = curve.eval_x(x0);
    if (exponent > 0)
      num = num * slice.pow(exponent);
    else if (exponent < 0) {
      if (slice.is_zero()) throw std::domain_error("first integral singular at endpoint");
      den = den * slice.pow(-exponent);
    }
  }
  if (den.is_zero()) throw std::domain_error("first integral singular at endpoint");
  Rational scale = den.leading_coeff();
  return {num * (Rational(1) / scale), den * (Rational(1) / scale)};
}

/// The invariant algebraic curves of the built-in counterexample equation.
inline std::array<BiPoly, 3> counterexample_curves() {
  BiPoly f1 = parse_bipoly(
      "1 + 4xy - 12x^3y + 8x^5y + 1/2y^2 + x^2y^2 - 17x^4y^2"
      " + 44x^6y^2 - 87/2x^8y^2 + 15x^10y^2");
  BiPoly f2 = parse_bipoly(
      "1 + 4xy - 14x^3y + 10x^5y + 2/3y^2 + x^2y^2 - 24x^4y^2"
      " + 202/3x^6y^2 - 70x^8y^2 + 25x^10y^2");
  BiPoly f3 = parse_bipoly("1 + 3xy - 8x^3y + 5x^5y");
  return {std::move(f1), std::move(f2), std::move(f3)};
}

}  // namespace abelcenter
