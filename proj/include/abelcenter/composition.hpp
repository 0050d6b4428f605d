#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "abelcenter/abel_equation.hpp"

namespace abelcenter {

/// Outcome of the composition-condition decision. `reason` is one of
/// no-common-degree, no-right-factor, partner-not-composed,
/// factor-not-periodic, trivial-nonzero-linear when holds = false.
struct CompositionVerdict {
  bool holds = false;
  std::optional<CompositionWitness> witness;
  std::string reason;
};

/// Digits of f base h: r_0,...,r_m with f = sum r_i h^i and deg r_i < deg h,
/// by repeated division. Empty for f = 0.
inline std::vector<UniPoly> h_adic_expansion(const UniPoly& f, const UniPoly& h) {
  if (h.degree() < 1) throw std::invalid_argument("h-adic base must be nonconstant");
  std::vector<UniPoly> digits;
  UniPoly rest = f;
  while (!rest.is_zero()) {
    auto [quot, rem] = rest.divmod(h);
    digits.push_back(std::move(rem));
    rest = std::move(quot);
  }
  return digits;
}

/// g with f = g∘h, or nullopt. f factors through h exactly when every h-adic
/// digit is a constant; the digits are then the coefficients of g.
inline std::optional<UniPoly> decompose_as(const UniPoly& f, const UniPoly& h) {
  if (h.degree() < 1) throw std::invalid_argument("composition factor must be nonconstant");
  std::vector<Rational> g;
  for (const UniPoly& digit : h_adic_expansion(f, h)) {
    if (digit.degree() > 0) return std::nullopt;
    g.push_back(digit.coeff(0));
  }
  return UniPoly(std::move(g));
}

/// The unique monic, constant-free candidate right factor of degree d: if
/// f = g∘h with deg h = d, then h is an affine change of the returned
/// polynomial. Solved coefficient-by-coefficient from the top: the
/// coefficients of x^{n-1}..x^{n-d+1} of f depend only on h (through
/// lc(f)·h^e), each introducing one new unknown with invertible factor
/// e·lc(f). The caller must still verify the candidate via decompose_as.
inline std::optional<UniPoly> right_factor_candidate(const UniPoly& f, int d) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("cannot extract a right factor of a constant");
  if (d < 2) throw std::invalid_argument("right factor degree must be >= 2");
  if (n % d != 0) throw std::invalid_argument("factor degree must divide the polynomial degree");
  const int e = n / d;
  const Rational& lead = f.leading_coeff();

  std::vector<Rational> h(static_cast<std::size_t>(d) + 1, Rational(0));
  h.back() = 1;
  for (int j = 1; j <= d - 1; ++j) {
    UniPoly partial_pow = UniPoly(std::vector<Rational>(h)).pow(e);
    Rational known = lead * partial_pow.coeff(n - j);
    h[static_cast<std::size_t>(d - j)] = (f.coeff(n - j) - known) / (Rational(e) * lead);
  }
  return UniPoly(std::move(h));
}

namespace detail {

inline std::vector<int> divisors_descending(int n) {
  std::vector<int> out;
  for (int d = n; d >= 2; --d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace detail

/// Decides whether p~ = p1(w), q~ = q1(w) is solvable with polynomial w, p1,
/// q1 and w(a) = w(b). Completeness: a common composition factor w has degree
/// dividing both deg p~ and deg q~, and in characteristic zero the degree-d
/// right factor is unique up to a left-affine change, which the monic,
/// constant-free normalization removes; periodicity w(a) = w(b) is invariant
/// under that change. Divisors are tried in descending order so the richest
/// witness is reported.
inline CompositionVerdict composition_condition(const AbelEquation& eq) {
  const UniPoly P = eq.p_tilde();
  const UniPoly Q = eq.q_tilde();

  if (P.is_zero() && Q.is_zero())
    return {true, CompositionWitness{UniPoly{}, UniPoly{}, UniPoly{}}, ""};

  if ((!P.is_zero() && P.degree() == 1) || (!Q.is_zero() && Q.degree() == 1))
    return {false, std::nullopt, "trivial-nonzero-linear"};

  // Candidate degrees and the polynomial the candidate is extracted from:
  // with both sides nonzero, extract from the one of smaller positive degree
  // (tie -> p~) over divisors of gcd of the degrees.
  const bool both = !P.is_zero() && !Q.is_zero();
  const UniPoly& source = P.is_zero() ? Q : (both && Q.degree() < P.degree() ? Q : P);
  const UniPoly* partner = both ? (&source == &P ? &Q : &P) : nullptr;
  const int degree_pool = both ? std::gcd(P.degree(), Q.degree()) : source.degree();

  std::vector<int> candidates = detail::divisors_descending(degree_pool);
  if (candidates.empty()) return {false, std::nullopt, "no-common-degree"};

  // Stages per candidate: 0 = source not composed through h, 1 = h not
  // periodic, 2 = partner not composed. Report the deepest stage reached.
  int best_stage = -1;
  for (int d : candidates) {
    auto h = right_factor_candidate(source, d);
    if (!h) continue;
    auto g_source = decompose_as(source, *h);
    if (!g_source) {
      best_stage = std::max(best_stage, 0);
      continue;
    }
    if (h->eval(eq.a()) != h->eval(eq.b())) {
      best_stage = std::max(best_stage, 1);
      continue;
    }
    std::optional<UniPoly> g_partner = UniPoly{};
    if (partner) {
      g_partner = decompose_as(*partner, *h);
      if (!g_partner) {
        best_stage = std::max(best_stage, 2);
        continue;
      }
    }
    UniPoly p1 = (&source == &P) ? *g_source : *g_partner;
    UniPoly q1 = (&source == &P) ? *g_partner : *g_source;
    CompositionWitness witness{*h, std::move(p1), std::move(q1)};
    // Exactness self-check of the returned certificate.
    if (witness.p1.compose(witness.w) != P || witness.q1.compose(witness.w) != Q)
      throw std::logic_error("composition witness failed verification");
    return {true, std::move(witness), ""};
  }

  static constexpr const char* kReasons[] = {"no-right-factor", "factor-not-periodic",
                                             "partner-not-composed"};
  return {false, std::nullopt, best_stage < 0 ? "no-right-factor" : kReasons[best_stage]};
}

enum class Weight { p, q };

/// The moment ∫_a^b p~(x)^i q~(x)^j w(x) dx, exactly. Every moment vanishes
/// when the composition condition holds.
inline Rational moment(const AbelEquation& eq, int i, int j, Weight weight) {
  if (i < 0 || j < 0) throw std::invalid_argument("moment exponents must be >= 0");
  UniPoly integrand = eq.p_tilde().pow(i) * eq.q_tilde().pow(j) *
                      (weight == Weight::p ? eq.p() : eq.q());
  return integrand.definite_integral(eq.a(), eq.b());
}

}  // namespace abelcenter
