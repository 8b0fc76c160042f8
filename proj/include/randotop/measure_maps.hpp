#pragma once

// The structural maps of the measure algebra: g, its reparametrization ǧ (the
// retracting scaling action), the dual h, and the pointwise Φ.

#include "randotop/interval_set.hpp"
#include "randotop/rational.hpp"

namespace randotop {

// g(A,u): A with its leftmost part of measure u·λ(A) removed.
inline IntervalSet g_map(const IntervalSet& a, const Rational& u) {
  require_unit(u, "u");
  return suffix_of_measure(a, (1 - u) * a.measure());
}

// ǧ(A,u) = g(A,1−u): the rightmost part of A of measure u·λ(A).
inline IntervalSet g_check(const IntervalSet& a, const Rational& u) {
  require_unit(u, "u");
  return suffix_of_measure(a, u * a.measure());
}

// ǧ extended by constants outside [0,1]: A for t ≥ 1, ∅ for t ≤ 0.
inline IntervalSet g_check_clamped(const IntervalSet& a, const Rational& t) {
  if (t >= 1) return a;
  if (t <= 0) return {};
  return suffix_of_measure(a, t * a.measure());
}

inline IntervalSet scale_action(const Rational& t, const IntervalSet& a) { return g_check(a, t); }

// Left-anchored retracting action: the leftmost part of A of measure t·λ(A).
// Same semigroup and measure laws as ǧ, but t·Ω_s = Ω_{ts}.
inline IntervalSet lower_scale(const Rational& t, const IntervalSet& a) {
  require_unit(t, "t");
  return prefix_of_measure(a, t * a.measure());
}

// h(A,u) = ᶜg(ᶜA,u); λ(h(A,u)) = u + (1−u)λ(A).
inline IntervalSet h_map(const IntervalSet& a, const Rational& u) {
  require_unit(u, "u");
  return complement(g_map(complement(a), u));
}

// Φ(q,E,A) at a single parameter: a subset of E of measure q·λ(E) that keeps as much of A as possible.
inline IntervalSet phi_pointwise(const Rational& q, const IntervalSet& e, const IntervalSet& a) {
  require_unit(q, "q");
  const Rational target = q * e.measure();
  IntervalSet inside = intersect(a, e);
  IntervalSet outside = difference(e, a);
  const Rational& alpha = inside.measure();
  IntervalSet part1 = alpha == 0 ? IntervalSet{} : g_check_clamped(inside, target / alpha);
  IntervalSet part2 = outside.measure() == 0 ? IntervalSet{} : g_check_clamped(outside, (target - alpha) / outside.measure());
  return set_union(part1, part2);
}

}  // namespace randotop
