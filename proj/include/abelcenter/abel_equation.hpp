#pragma once

#include <stdexcept>
#include <utility>

#include "abelcenter/bipoly.hpp"
#include "abelcenter/unipoly.hpp"

namespace abelcenter {

/// dy/dx = p(x) y^2 + q(x) y^3 on [a, b], with exact rational endpoints.
class AbelEquation {
 public:
  AbelEquation(UniPoly p, UniPoly q, Rational a, Rational b)
      : p_(std::move(p)), q_(std::move(q)), a_(std::move(a)), b_(std::move(b)) {
    if (!(a_ < b_)) throw std::invalid_argument("interval endpoints must satisfy a < b");
  }

  const UniPoly& p() const { return p_; }
  const UniPoly& q() const { return q_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// Antiderivative of p vanishing at a.
  UniPoly p_tilde() const { return p_.antiderivative_from(a_); }

  /// Antiderivative of q vanishing at a.
  UniPoly q_tilde() const { return q_.antiderivative_from(a_); }

  /// The right-hand side p*y^2 + q*y^3 as a bivariate polynomial.
  BiPoly vector_field() const {
    return BiPoly::from_x_poly(p_, 2) + BiPoly::from_x_poly(q_, 3);
  }

  bool operator==(const AbelEquation&) const = default;

 private:
  UniPoly p_, q_;
  Rational a_, b_;
};

/// Built-in equation with a center that fails the composition condition:
/// p = 40x^4 - 30x^2 + 2, q = 75x^9 - 150x^7 + 88x^5 - 10x^3 - 3x on [-1, 1].
inline AbelEquation counterexample() {
  UniPoly p{Rational(2), Rational(0), Rational(-30), Rational(0), Rational(40)};
  UniPoly q{Rational(0), Rational(-3), Rational(0), Rational(-10), Rational(0),
            Rational(88), Rational(0), Rational(-150), Rational(0), Rational(75)};
  return AbelEquation(std::move(p), std::move(q), Rational(-1), Rational(1));
}

/// Certificate that p~ = p1(w) and q~ = q1(w) with w(a) = w(b).
struct CompositionWitness {
  UniPoly w;
  UniPoly p1;
  UniPoly q1;
};

/// Build the equation with p = (p1'∘w)·w' and q = (q1'∘w)·w'. Any such
/// equation has a center on [a, b]: solutions are reparametrizations
/// y(x) = Y(w(x)) of solutions of the transformed equation, and w is
/// periodic. The stored witness normalizes p1, q1 by constants so that
/// p1(w(a)) = q1(w(a)) = 0, which makes p~ = p1∘w and q~ = q1∘w exact.
inline std::pair<AbelEquation, CompositionWitness> from_composition(UniPoly w, UniPoly p1,
                                                                    UniPoly q1, Rational a,
                                                                    Rational b) {
  if (w.eval(a) != w.eval(b)) throw std::invalid_argument("witness not periodic");
  UniPoly wd = w.derivative();
  UniPoly p = p1.derivative().compose(w) * wd;
  UniPoly q = q1.derivative().compose(w) * wd;
  Rational w_a = w.eval(a);
  p1 -= UniPoly::constant(p1.eval(w_a));
  q1 -= UniPoly::constant(q1.eval(w_a));
  return {AbelEquation(std::move(p), std::move(q), std::move(a), std::move(b)),
          CompositionWitness{std::move(w), std::move(p1), std::move(q1)}};
}

}  // namespace abelcenter
