#pragma once

// Weakly increasing maps [n] → [m], the morphisms of the simplex category.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "randotop/errors.hpp"

namespace randotop {

class MonotoneMap {
 public:
  // values[j] = σ(j) for j = 0..n; every value must lie in [m].
  MonotoneMap(std::size_t target, std::vector<std::size_t> values) : target_(target), values_(std::move(values)) {
    if (values_.empty()) throw arity_error("monotone map needs a nonempty source");
    for (std::size_t j = 0; j < values_.size(); ++j) {
      if (values_[j] > target_) throw domain_error("monotone map value out of range");
      if (j > 0 && values_[j] < values_[j - 1]) throw invariant_error("monotone map is not weakly increasing");
    }
  }

  static MonotoneMap identity(std::size_t n) {
    std::vector<std::size_t> v(n + 1);
    for (std::size_t j = 0; j <= n; ++j) v[j] = j;
    return MonotoneMap(n, std::move(v));
  }

  // D_iᶜ : [n−1] → [n], the injection missing i.
  static MonotoneMap face(std::size_t i, std::size_t n) {
    if (n == 0 || i > n) throw domain_error("face index " + std::to_string(i) + " invalid for [" + std::to_string(n) + "]");
    std::vector<std::size_t> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = k < i ? k : k + 1;
    return MonotoneMap(n, std::move(v));
  }

  // S_iᶜ : [n+1] → [n], the surjection hitting i twice.
  static MonotoneMap degeneracy(std::size_t i, std::size_t n) {
    if (i > n) throw domain_error("degeneracy index " + std::to_string(i) + " invalid for [" + std::to_string(n) + "]");
    std::vector<std::size_t> v(n + 2);
    for (std::size_t k = 0; k <= n + 1; ++k) v[k] = k <= i ? k : k - 1;
    return MonotoneMap(n, std::move(v));
  }

  static MonotoneMap constant(std::size_t n, std::size_t m, std::size_t value) {
    return MonotoneMap(m, std::vector<std::size_t>(n + 1, value));
  }

  std::size_t source() const { return values_.size() - 1; }
  std::size_t target() const { return target_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t j) const { return values_.at(j); }

  bool injective() const {
    for (std::size_t j = 1; j < values_.size(); ++j) {
      if (values_[j] == values_[j - 1]) return false;
    }
    return true;
  }

  bool surjective() const {
    if (values_.front() != 0 || values_.back() != target_) return false;
    for (std::size_t j = 1; j < values_.size(); ++j) {
      if (values_[j] > values_[j - 1] + 1) return false;
    }
    return true;
  }

  // Largest j with σ(j) ≤ i, or -1 when there is none.
  long sup_preimage_upto(std::size_t i) const {
    long best = -1;
    for (std::size_t j = 0; j < values_.size(); ++j) {
      if (values_[j] <= i) best = static_cast<long>(j);
    }
    return best;
  }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.target_ == b.target_ && a.values_ == b.values_;
  }

 private:
  std::size_t target_;
  std::vector<std::size_t> values_;
};

// σ ∘ τ.
inline MonotoneMap compose(const MonotoneMap& sigma, const MonotoneMap& tau) {
  if (tau.target() != sigma.source()) throw arity_error("compose: target of τ differs from source of σ");
  std::vector<std::size_t> v(tau.source() + 1);
  for (std::size_t j = 0; j <= tau.source(); ++j) v[j] = sigma(tau(j));
  return MonotoneMap(sigma.target(), std::move(v));
}

// Every weakly increasing map [n] → [m], in lexicographic order.
inline std::vector<MonotoneMap> enumerate_monotone(std::size_t n, std::size_t m) {
  std::vector<MonotoneMap> out;
  std::vector<std::size_t> v(n + 1, 0);
  while (true) {
    out.emplace_back(m, v);
    std::size_t j = n + 1;
    while (j > 0 && v[j - 1] == m) --j;
    if (j == 0) break;
    ++v[j - 1];
    for (std::size_t k = j; k <= n; ++k) v[k] = v[j - 1];
  }
  return out;
}

}  // namespace randotop
