#pragma once

// Finite unions of half-open rational intervals [lo,hi) inside [0,1): an exact
// model of the measure algebra of the unit interval, where equality up to null
// sets becomes equality of normalized interval lists.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "randotop/errors.hpp"
#include "randotop/rational.hpp"

namespace randotop {

struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

class IntervalSet {
 public:
  IntervalSet() = default;

  // Union of the given pairs. Pairs with lo >= hi are dropped; endpoints must lie in [0,1].
  static IntervalSet normalize(std::vector<Interval> raw) {
    for (const auto& iv : raw) {
      if (!in_unit(iv.lo) || !in_unit(iv.hi)) {
        throw domain_error("interval endpoint outside [0,1]: [" + iv.lo.get_str() + "," + iv.hi.get_str() + ")");
      }
    }
    std::erase_if(raw, [](const Interval& iv) { return !(iv.lo < iv.hi); });
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet out;
    for (auto& iv : raw) {
      if (!out.iv_.empty() && iv.lo <= out.iv_.back().hi) {
        if (iv.hi > out.iv_.back().hi) out.iv_.back().hi = iv.hi;
      } else {
        out.iv_.push_back(std::move(iv));
      }
    }
    out.recompute_measure();
    return out;
  }

  static IntervalSet interval(const Rational& lo, const Rational& hi) { return normalize({{lo, hi}}); }
  static IntervalSet unit() { return interval(Rational(0), Rational(1)); }

  const std::vector<Interval>& intervals() const { return iv_; }
  bool empty() const { return iv_.empty(); }
  std::size_t size() const { return iv_.size(); }
  const Rational& measure() const { return measure_; }

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.iv_ == b.iv_; }

  // Appends [lo,hi) to a set being built left to right; lo must be >= the current right end.
  class Builder {
   public:
    void add(const Rational& lo, const Rational& hi) {
      if (!(lo < hi)) return;
      if (!iv_.empty() && iv_.back().hi == lo) {
        iv_.back().hi = hi;
      } else {
        iv_.push_back({lo, hi});
      }
    }
    IntervalSet build() && {
      IntervalSet out;
      out.iv_ = std::move(iv_);
      out.recompute_measure();
      return out;
    }

   private:
    std::vector<Interval> iv_;
  };

 private:
  void recompute_measure() {
    measure_ = 0;
    for (const auto& iv : iv_) measure_ += iv.hi - iv.lo;
  }

  std::vector<Interval> iv_;
  Rational measure_{0};
};

inline const Rational& measure(const IntervalSet& a) { return a.measure(); }

enum class BoolOp { Union, Intersect, Difference, SymmDiff };

namespace detail {

// Sweeps the elementary cells cut out by the endpoints of both operands.
template <typename Pred>
IntervalSet combine(const IntervalSet& a, const IntervalSet& b, Pred keep) {
  std::vector<Rational> cuts;
  cuts.reserve(2 * (a.size() + b.size()));
  for (const auto& iv : a.intervals()) {
    cuts.push_back(iv.lo);
    cuts.push_back(iv.hi);
  }
  for (const auto& iv : b.intervals()) {
    cuts.push_back(iv.lo);
    cuts.push_back(iv.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const auto& av = a.intervals();
  const auto& bv = b.intervals();
  std::size_t ia = 0;
  std::size_t ib = 0;
  IntervalSet::Builder out;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const Rational& p = cuts[c];
    while (ia < av.size() && av[ia].hi <= p) ++ia;
    while (ib < bv.size() && bv[ib].hi <= p) ++ib;
    const bool in_a = ia < av.size() && av[ia].lo <= p;
    const bool in_b = ib < bv.size() && bv[ib].lo <= p;
    if (keep(in_a, in_b)) out.add(p, cuts[c + 1]);
  }
  return std::move(out).build();
}

}  // namespace detail

inline IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return detail::combine(a, b, [](bool x, bool y) { return x || y; });
}

inline IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) return {};
  return detail::combine(a, b, [](bool x, bool y) { return x && y; });
}

inline IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) return a;
  return detail::combine(a, b, [](bool x, bool y) { return x && !y; });
}

inline IntervalSet symmdiff(const IntervalSet& a, const IntervalSet& b) {
  return detail::combine(a, b, [](bool x, bool y) { return x != y; });
}

inline IntervalSet boolean_op(const IntervalSet& a, const IntervalSet& b, BoolOp op) {
  switch (op) {
    case BoolOp::Union: return set_union(a, b);
    case BoolOp::Intersect: return intersect(a, b);
    case BoolOp::Difference: return difference(a, b);
    case BoolOp::SymmDiff: return symmdiff(a, b);
  }
  return {};
}

// Complement inside [0,1).
inline IntervalSet complement(const IntervalSet& a) { return difference(IntervalSet::unit(), a); }

inline bool is_subset(const IntervalSet& a, const IntervalSet& b) { return difference(a, b).empty(); }

inline bool disjoint(const IntervalSet& a, const IntervalSet& b) { return intersect(a, b).empty(); }

inline bool nested(const IntervalSet& a, const IntervalSet& b) { return is_subset(a, b) || is_subset(b, a); }

// λ(A Δ B), the distance of the measure algebra.
inline Rational set_distance(const IntervalSet& a, const IntervalSet& b) { return symmdiff(a, b).measure(); }

// Ω_t = [0,t).
inline IntervalSet exhaustion(const Rational& t) {
  require_unit(t, "t");
  return IntervalSet::interval(Rational(0), t);
}

// Leftmost part of A of measure clamp(m, 0, λ(A)).
inline IntervalSet prefix_of_measure(const IntervalSet& a, const Rational& m) {
  if (m >= a.measure()) return a;
  IntervalSet::Builder out;
  Rational left = m;
  for (const auto& iv : a.intervals()) {
    if (left <= 0) break;
    Rational len = iv.hi - iv.lo;
    if (len <= left) {
      out.add(iv.lo, iv.hi);
      left -= len;
    } else {
      out.add(iv.lo, iv.lo + left);
      left = 0;
    }
  }
  return std::move(out).build();
}

// Rightmost part of A of measure clamp(m, 0, λ(A)).
inline IntervalSet suffix_of_measure(const IntervalSet& a, const Rational& m) {
  if (m >= a.measure()) return a;
  if (m <= 0) return {};
  const auto& v = a.intervals();
  Rational left = m;
  std::size_t first = v.size();
  Rational cut;
  while (first > 0) {
    --first;
    Rational len = v[first].hi - v[first].lo;
    if (len >= left) {
      cut = v[first].hi - left;
      break;
    }
    left -= len;
  }
  IntervalSet::Builder out;
  out.add(cut, v[first].hi);
  for (std::size_t i = first + 1; i < v.size(); ++i) out.add(v[i].lo, v[i].hi);
  return std::move(out).build();
}

enum class ScaleDirection { Forward, Inverse };

// Forward maps x ↦ c·x, inverse maps x ↦ x/c. The image must stay inside [0,1].
inline IntervalSet affine_scale(const IntervalSet& a, const Rational& c, ScaleDirection dir) {
  if (c <= 0) throw domain_error("affine_scale factor must be positive, got " + c.get_str());
  if (dir == ScaleDirection::Inverse && c > 1) {
    throw domain_error("affine_scale inverse factor must be <= 1, got " + c.get_str());
  }
  IntervalSet::Builder out;
  for (const auto& iv : a.intervals()) {
    Rational lo = dir == ScaleDirection::Forward ? Rational(iv.lo * c) : Rational(iv.lo / c);
    Rational hi = dir == ScaleDirection::Forward ? Rational(iv.hi * c) : Rational(iv.hi / c);
    if (hi > 1) throw domain_error("affine_scale image escapes [0,1)");
    out.add(lo, hi);
  }
  return std::move(out).build();
}

// ---- text format: [p/q,r/s)∪[t/u,v/w), ∅ for empty ----

inline constexpr std::string_view kEmptySet = "∅";
inline constexpr std::string_view kUnion = "∪";

inline std::string to_string(const IntervalSet& a) {
  if (a.empty()) return std::string(kEmptySet);
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += kUnion;
    const auto& iv = a.intervals()[i];
    out += "[" + iv.lo.get_str() + "," + iv.hi.get_str() + ")";
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntervalSet& a) { return os << to_string(a); }

inline IntervalSet parse_interval_set(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == kEmptySet) return {};
  std::vector<Interval> raw;
  while (!text.empty()) {
    if (text.front() != '[') throw domain_error("expected '[' in interval set text");
    auto comma = text.find(',');
    auto close = text.find(')');
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close) {
      throw domain_error("malformed interval in '" + std::string(text) + "'");
    }
    raw.push_back({parse_rational(trim(text.substr(1, comma - 1))), parse_rational(trim(text.substr(comma + 1, close - comma - 1)))});
    text = trim(text.substr(close + 1));
    if (text.starts_with(kUnion)) {
      text = trim(text.substr(kUnion.size()));
      if (text.empty()) throw domain_error("dangling union in interval set text");
    } else if (!text.empty()) {
      throw domain_error("expected '∪' between intervals");
    }
  }
  return IntervalSet::normalize(std::move(raw));
}

}  // namespace randotop
