#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "abelcenter/abel_equation.hpp"

namespace abelcenter {

/// Non-empty index word over {1, 2}: 1 selects p, 2 selects q. The order of
/// a word is the sum of its entries; words of order n index the order-n
/// terms of the return-map expansion.
class IndexTuple {
 public:
  explicit IndexTuple(std::vector<int> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("index tuple must be non-empty");
    for (int i : indices_)
      if (i != 1 && i != 2) throw std::invalid_argument("index entries must be 1 or 2");
  }

  IndexTuple(std::initializer_list<int> indices) : IndexTuple(std::vector<int>(indices)) {}

  const std::vector<int>& indices() const { return indices_; }
  std::size_t length() const { return indices_.size(); }
  int order() const { return std::accumulate(indices_.begin(), indices_.end(), 0); }

  bool operator==(const IndexTuple&) const = default;

 private:
  std::vector<int> indices_;
};

/// All words of order <= N, orders ascending; within an order, shorter words
/// first and lexicographic among equal lengths.
inline std::vector<IndexTuple> all_index_tuples_up_to(int N) {
  if (N < 1) throw std::invalid_argument("order bound must be >= 1");
  std::vector<IndexTuple> out;
  for (int n = 1; n <= N; ++n) {
    std::vector<std::vector<int>> of_order;
    std::vector<int> word;
    std::function<void(int)> extend = [&](int remaining) {
      if (remaining == 0) {
        of_order.push_back(word);
        return;
      }
      for (int letter = 1; letter <= 2 && letter <= remaining; ++letter) {
        word.push_back(letter);
        extend(remaining - letter);
        word.pop_back();
      }
    };
    extend(n);
    std::sort(of_order.begin(), of_order.end(), [](const auto& u, const auto& v) {
      if (u.size() != v.size()) return u.size() < v.size();
      return u < v;
    });
    for (auto& w : of_order) out.emplace_back(std::move(w));
  }
  return out;
}

/// Iterated integral over the ordered simplex a <= s_1 <= ... <= s_k <= b:
/// F_1 = ∫_a^x a_{i1}, F_m = ∫_a^x a_{i_m}(s) F_{m-1}(s) ds, result F_k(b),
/// with a_1 = p, a_2 = q. Position 1 is the innermost integration variable.
inline Rational iterated_integral(const AbelEquation& eq, const IndexTuple& t) {
  UniPoly F;
  bool first = true;
  for (int i : t.indices()) {
    const UniPoly& coeff = (i == 1) ? eq.p() : eq.q();
    F = (first ? coeff : coeff * F).antiderivative_from(eq.a());
    first = false;
  }
  return F.eval(eq.b());
}

/// Evaluates every word of order <= N in one pass, sharing antiderivative
/// prefixes along the word tree; the visitor sees words in depth-first
/// (prefix-lexicographic) order. Semantically identical to calling
/// iterated_integral per word.
inline void for_each_iterated_integral(
    const AbelEquation& eq, int N,
    const std::function<void(const std::vector<int>&, const Rational&)>& visit) {
  if (N < 1) throw std::invalid_argument("order bound must be >= 1");
  std::vector<int> word;
  std::function<void(const UniPoly&, int)> descend = [&](const UniPoly& F, int remaining) {
    for (int letter = 1; letter <= 2 && letter <= remaining; ++letter) {
      const UniPoly& coeff = (letter == 1) ? eq.p() : eq.q();
      UniPoly G = (word.empty() ? coeff : coeff * F).antiderivative_from(eq.a());
      word.push_back(letter);
      visit(word, G.eval(eq.b()));
      descend(G, remaining - letter);
      word.pop_back();
    }
  };
  descend(UniPoly{}, N);
}

}  // namespace abelcenter
