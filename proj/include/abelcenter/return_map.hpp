#pragma once

#include <map>
#include <optional>
#include <utility>

#include "abelcenter/iterated_integral.hpp"

namespace abelcenter {

/// Result of checking c_1..c_N for exact vanishing.
struct CenterReport {
  int order_checked = 0;
  bool all_zero = false;
  std::optional<std::pair<int, Rational>> first_failure;  // (n, c_n)
};

/// Result of checking every iterated integral of order <= N.
struct UniversalReport {
  int order_checked = 0;
  bool universal = false;
  std::optional<std::pair<IndexTuple, Rational>> witness;  // first nonzero
};

/// Combinatorial weight of a word in the return-map expansion: with
/// n = order(t) and partial sums S_j, the product of (n - S_j + 1) over
/// positions j; the last factor is always 1.
inline Integer brudnyi_coefficient(const IndexTuple& t) {
  const int n = t.order();
  Integer prod = 1;
  int s = 0;
  for (int i : t.indices()) {
    s += i;
    prod *= (n - s + 1);
  }
  return prod;
}

/// n-th coefficient of the first return map P(y0) = y0 + sum c_n y0^{n+1}:
/// the weighted sum of iterated integrals over all words of order exactly n.
inline Rational return_map_coefficient(const AbelEquation& eq, int n) {
  if (n < 1) throw std::invalid_argument("coefficient index must be >= 1");
  Rational sum{};
  for_each_iterated_integral(eq, n, [&](const std::vector<int>& word, const Rational& value) {
    IndexTuple t{word};
    if (t.order() == n) sum += Rational(brudnyi_coefficient(t)) * value;
  });
  return sum;
}

/// Computes c_1..c_N and reports the first nonzero, if any.
inline CenterReport center_check(const AbelEquation& eq, int N) {
  if (N < 1) throw std::invalid_argument("order bound must be >= 1");
  // One shared pass over the word tree of order <= N covers every c_n.
  std::map<int, Rational> c;
  for_each_iterated_integral(eq, N, [&](const std::vector<int>& word, const Rational& value) {
    IndexTuple t{word};
    c[t.order()] += Rational(brudnyi_coefficient(t)) * value;
  });
  CenterReport report{N, true, std::nullopt};
  for (int n = 1; n <= N; ++n) {
    if (c[n] != 0) {
      report.all_zero = false;
      report.first_failure = {n, c[n]};
      break;
    }
  }
  return report;
}

/// Universal-center test: every iterated integral of order <= N must vanish.
/// The reported witness is the first nonzero word in the enumeration order of
/// all_index_tuples_up_to.
inline UniversalReport universal_center_check(const AbelEquation& eq, int N) {
  if (N < 1) throw std::invalid_argument("order bound must be >= 1");
  std::map<std::vector<int>, Rational> values;
  for_each_iterated_integral(eq, N, [&](const std::vector<int>& word, const Rational& value) {
    values.emplace(word, value);
  });
  UniversalReport report{N, true, std::nullopt};
  for (const IndexTuple& t : all_index_tuples_up_to(N)) {
    const Rational& v = values.at(t.indices());
    if (v != 0) {
      report.universal = false;
      report.witness = {t, v};
      break;
    }
  }
  return report;
}

}  // namespace abelcenter
