#pragma once

// Nested sequences X₁ ⊆ … ⊆ Xₙ of IntervalSets (points of the ultriangle) and
// the interpolation J(X,c) between consecutive members.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "randotop/errors.hpp"
#include "randotop/interval_set.hpp"
#include "randotop/measure_maps.hpp"

namespace randotop {

class Chain {
 public:
  Chain() = default;

  explicit Chain(std::vector<IntervalSet> sets) : sets_(std::move(sets)) {
    for (std::size_t i = 1; i < sets_.size(); ++i) {
      if (!is_subset(sets_[i - 1], sets_[i])) {
        throw invariant_error("chain is not nested at position " + std::to_string(i + 1));
      }
    }
  }

  std::size_t length() const { return sets_.size(); }
  const std::vector<IntervalSet>& sets() const { return sets_; }

  // 1-based with the conventions X₀ = ∅ and X_{n+1} = [0,1).
  IntervalSet at(std::size_t k) const {
    if (k == 0) return {};
    if (k > sets_.size()) return IntervalSet::unit();
    return sets_[k - 1];
  }

  friend bool operator==(const Chain& a, const Chain& b) { return a.sets_ == b.sets_; }

 private:
  std::vector<IntervalSet> sets_;
};

// J(X,c): the set between X_k and X_{k+1} of measure c, where λ(X_k) ≤ c < λ(X_{k+1}).
inline IntervalSet interpolate_chain(const Chain& x, const Rational& c) {
  require_unit(c, "c");
  if (c == 1) return IntervalSet::unit();
  std::size_t k = 0;
  for (std::size_t i = 1; i <= x.length(); ++i) {
    if (x.at(i).measure() <= c) k = i;
  }
  IntervalSet lower = x.at(k);
  IntervalSet upper = x.at(k + 1);
  IntervalSet gap = difference(upper, lower);
  return set_union(lower, g_map(gap, (upper.measure() - c) / gap.measure()));
}

}  // namespace randotop
