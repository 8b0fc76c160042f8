#pragma once

// Points of the cylinder L(K×I): partitions of [0,1) indexed by (j,±) whose
// occupied minus indices all sit at or below the occupied plus indices.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "randotop/chain.hpp"
#include "randotop/complex.hpp"
#include "randotop/errors.hpp"
#include "randotop/interval_set.hpp"
#include "randotop/measure_maps.hpp"
#include "randotop/random_simplex.hpp"
#include "randotop/rational.hpp"

namespace randotop {

enum class Sign { Minus = 0, Plus = 1 };

class CylinderPoint {
 public:
  // classes[2j] = A_j⁻, classes[2j+1] = A_j⁺.
  explicit CylinderPoint(std::vector<IntervalSet> classes) : a_(std::move(classes)) {
    if (a_.empty() || a_.size() % 2 != 0) throw arity_error("cylinder point needs 2(n+1) classes");
    RandomSimplex check(a_);  // partition invariants
    std::optional<std::size_t> max_minus;
    std::optional<std::size_t> min_plus;
    for (std::size_t j = 0; j <= dim(); ++j) {
      if (!minus(j).empty()) max_minus = j;
      if (!plus(j).empty() && !min_plus) min_plus = j;
    }
    if (max_minus && min_plus && *max_minus > *min_plus) {
      throw invariant_error("cylinder membership: " + std::to_string(*max_minus) + "- is occupied above " +
                            std::to_string(*min_plus) + "+");
    }
  }

  static CylinderPoint from_signed(std::size_t n, const std::vector<std::pair<IntervalSet, IntervalSet>>& classes) {
    if (classes.size() != n + 1) throw arity_error("from_signed: expected n+1 class pairs");
    std::vector<IntervalSet> flat;
    for (const auto& [m, p] : classes) {
      flat.push_back(m);
      flat.push_back(p);
    }
    return CylinderPoint(std::move(flat));
  }

  std::size_t dim() const { return a_.size() / 2 - 1; }
  const IntervalSet& at(std::size_t j, Sign s) const { return a_.at(2 * j + static_cast<std::size_t>(s)); }
  const IntervalSet& minus(std::size_t j) const { return at(j, Sign::Minus); }
  const IntervalSet& plus(std::size_t j) const { return at(j, Sign::Plus); }
  const std::vector<IntervalSet>& classes() const { return a_; }

  // y-coordinate: total measure of the minus classes.
  Rational minus_mass() const {
    Rational y = 0;
    for (std::size_t j = 0; j <= dim(); ++j) y += minus(j).measure();
    return y;
  }

  // Smallest r with the point in L(𝓕_r), 𝓕_r spanned by 0⁻,…,r⁻,r⁺,…,n⁺.
  std::size_t stratum() const {
    std::size_t r = 0;
    for (std::size_t j = 0; j <= dim(); ++j) {
      if (!minus(j).empty()) r = j;
    }
    return r;
  }

  bool in_stratum(std::size_t r) const {
    for (std::size_t j = 0; j <= dim(); ++j) {
      if (j > r && !minus(j).empty()) return false;
      if (j < r && !plus(j).empty()) return false;
    }
    return true;
  }

  friend bool operator==(const CylinderPoint& a, const CylinderPoint& b) { return a.a_ == b.a_; }

 private:
  std::vector<IntervalSet> a_;
};

inline Rational cyl_distance(const CylinderPoint& f, const CylinderPoint& g) {
  if (f.dim() != g.dim()) throw arity_error("cyl_distance: dimensions differ");
  return rv_distance(RandomSimplex(f.classes()), RandomSimplex(g.classes()));
}

// The projected support {j : j⁻ or j⁺ occupied} is a face of K.
inline bool in_complex(const CylinderPoint& f, const SimplicialComplex& k) {
  if (f.dim() + 1 != k.vertex_count()) throw arity_error("in_complex: vertex counts differ");
  Face support;
  for (std::size_t j = 0; j <= f.dim(); ++j) {
    if (!f.minus(j).empty() || !f.plus(j).empty()) support.push_back(j);
  }
  return k.contains(support);
}

inline bool in_complex(const RandomSimplex& f, const SimplicialComplex& k) {
  if (f.dim() + 1 != k.vertex_count()) throw arity_error("in_complex: vertex counts differ");
  auto img = essential_image(f);
  return k.contains(Face(img.begin(), img.end()));
}

inline RandomSimplex cyl_project(const CylinderPoint& f) {
  std::vector<IntervalSet> out;
  for (std::size_t j = 0; j <= f.dim(); ++j) out.push_back(set_union(f.minus(j), f.plus(j)));
  return RandomSimplex(std::move(out));
}

inline CylinderPoint cyl_section(const RandomSimplex& f) {
  std::vector<IntervalSet> out;
  for (const auto& c : f.classes()) {
    out.push_back(c);
    out.emplace_back();
  }
  return CylinderPoint(std::move(out));
}

namespace detail {

// Moves the part g(A_j⁺, η_j) of each plus class over to the minus side.
inline CylinderPoint shift_plus(const CylinderPoint& f, const std::vector<Rational>& eta) {
  std::vector<IntervalSet> out(f.classes().size());
  for (std::size_t j = 0; j <= f.dim(); ++j) {
    IntervalSet moved = g_map(f.plus(j), eta[j]);
    out[2 * j] = set_union(f.minus(j), moved);
    out[2 * j + 1] = difference(f.plus(j), moved);
  }
  return CylinderPoint(std::move(out));
}

}  // namespace detail

// B_j⁻ = A_j⁻ ∪ g(A_j⁺, η(j+1−(n+1)t)), B_j⁺ = A_j⁺ ∖ B_j⁻, η = clamp to [0,1].
inline CylinderPoint cyl_homotopy(const CylinderPoint& f, const Rational& t) {
  require_unit(t, "t");
  const std::size_t n1 = f.dim() + 1;
  std::vector<Rational> eta;
  for (std::size_t j = 0; j < n1; ++j) eta.push_back(clamp01(Rational(j + 1) - n1 * t));
  return detail::shift_plus(f, eta);
}

// The same homotopy written on its p-th time slab t ∈ [p/(n+1),(p+1)/(n+1)]:
// classes below p fully moved, class p moving, classes above p untouched.
inline CylinderPoint cyl_homotopy_piece(const CylinderPoint& f, const Rational& t, std::size_t p) {
  const std::size_t n1 = f.dim() + 1;
  if (p >= n1) throw domain_error("slab index out of range");
  const Rational lo = Rational(p) / n1;
  const Rational hi = Rational(p + 1) / n1;
  if (t < lo || t > hi) throw domain_error("t outside the slab");
  std::vector<Rational> eta(n1);
  for (std::size_t j = 0; j < n1; ++j) {
    if (j < p) eta[j] = 0;
    if (j == p) eta[j] = Rational(p + 1) - n1 * t;
    if (j > p) eta[j] = 1;
  }
  return detail::shift_plus(f, eta);
}

// B₀⁻ = A₀⁻ ∪ g(A₀⁺, t(1 − λ(A₀⁻∪A₀⁺)) + (1−t)); every other class unchanged.
inline CylinderPoint pointed_homotopy(const CylinderPoint& f, const Rational& t) {
  require_unit(t, "t");
  const Rational l0 = f.minus(0).measure() + f.plus(0).measure();
  std::vector<IntervalSet> out = f.classes();
  IntervalSet moved = g_map(f.plus(0), t * (1 - l0) + (1 - t));
  out[0] = set_union(f.minus(0), moved);
  out[1] = difference(f.plus(0), moved);
  return CylinderPoint(std::move(out));
}

inline CylinderPoint pointed_section(const CylinderPoint& f) { return pointed_homotopy(f, Rational(1)); }

// D(f): X_i = f⁻¹({j⁻ : j ≤ i−1} ∪ {j⁺ : j ≤ i−2}), i = 1..n+1.
inline Chain d_chain(const CylinderPoint& f) {
  const std::size_t n = f.dim();
  std::vector<IntervalSet> xs;
  IntervalSet acc;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    acc = set_union(acc, f.minus(i - 1));
    if (i >= 2) acc = set_union(acc, f.plus(i - 2));
    xs.push_back(acc);
  }
  return Chain(std::move(xs));
}

// D restricted to L(𝓕_r), written with the ordering 0⁻ < … < r⁻ < r⁺ < … < n⁺.
inline Chain d_chain_on_stratum(const CylinderPoint& f, std::size_t r) {
  if (!f.in_stratum(r)) throw invariant_error("point is not in the given stratum");
  const std::size_t n = f.dim();
  std::vector<IntervalSet> xs;
  IntervalSet acc;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    acc = set_union(acc, i <= r + 1 ? f.minus(i - 1) : f.plus(i - 2));
    xs.push_back(acc);
  }
  return Chain(std::move(xs));
}

// Inverse of d_chain_on_stratum: the point of L(𝓕_r) with the given chain.
inline CylinderPoint d_chain_inverse(const Chain& x, std::size_t r) {
  const std::size_t n = x.length() - 1;
  if (x.length() == 0 || r > n) throw domain_error("d_chain_inverse: bad stratum or chain length");
  std::vector<IntervalSet> out(2 * (n + 1));
  for (std::size_t pos = 0; pos <= n + 1; ++pos) {
    IntervalSet cls = difference(x.at(pos + 1), x.at(pos));
    if (pos <= r) {
      out[2 * pos] = std::move(cls);
    } else {
      out[2 * (pos - 1) + 1] = std::move(cls);
    }
  }
  return CylinderPoint(std::move(out));
}

inline CylinderPoint tau_plus(const CylinderPoint& f) {
  std::vector<IntervalSet> out(f.classes().size());
  for (std::size_t j = 0; j <= f.dim(); ++j) out[2 * j + 1] = set_union(f.minus(j), f.plus(j));
  return CylinderPoint(std::move(out));
}

inline CylinderPoint tau_minus(const CylinderPoint& f) { return cyl_section(cyl_project(f)); }

// G₊(f,u): f on J(D(f),u), τ₊(f) elsewhere.
inline CylinderPoint g_plus(const CylinderPoint& f, const Rational& u) {
  IntervalSet y = interpolate_chain(d_chain(f), u);
  std::vector<IntervalSet> out(f.classes().size());
  for (std::size_t j = 0; j <= f.dim(); ++j) {
    out[2 * j] = intersect(f.minus(j), y);
    out[2 * j + 1] = set_union(f.plus(j), difference(f.minus(j), y));
  }
  return CylinderPoint(std::move(out));
}

// G₋(f,u): f off J(D(f),u), τ₋(f) on it.
inline CylinderPoint g_minus(const CylinderPoint& f, const Rational& u) {
  IntervalSet y = interpolate_chain(d_chain(f), u);
  std::vector<IntervalSet> out(f.classes().size());
  for (std::size_t j = 0; j <= f.dim(); ++j) {
    out[2 * j] = set_union(f.minus(j), intersect(f.plus(j), y));
    out[2 * j + 1] = difference(f.plus(j), y);
  }
  return CylinderPoint(std::move(out));
}

// Retraction of [0,1]² onto {u = 0} ∪ {y ∈ {0,1}} by projection from (1/2, 2).
inline std::pair<Rational, Rational> q_square(const Rational& y, const Rational& u) {
  require_unit(y, "y");
  require_unit(u, "u");
  if (u >= 4 * y) return {Rational(0), Rational((u - 4 * y) / (1 - 2 * y))};
  if (u >= 4 * (1 - y)) return {Rational(1), Rational((4 - 4 * y - u) / (1 - 2 * y))};
  return {Rational((u - 4 * y) / (2 * (u - 2))), Rational(0)};
}

// Retraction of L(K×I)×I onto (L(K×{0,1})×I) ∪ (L(K×I)×{0}).
inline std::pair<CylinderPoint, Rational> cyl_cofibration_retract(const CylinderPoint& f, const Rational& u) {
  const Rational y = f.minus_mass();
  auto [y2, u2] = q_square(y, u);
  if (y * 2 <= 1) return {g_plus(f, y2), u2};
  return {g_minus(f, y2), u2};
}

// ---- text format: {0-: …, 0+: …} with empty classes omitted ----

inline std::string to_string(const CylinderPoint& f) {
  std::string out = "{";
  bool first = true;
  for (std::size_t j = 0; j <= f.dim(); ++j) {
    for (Sign s : {Sign::Minus, Sign::Plus}) {
      if (f.at(j, s).empty()) continue;
      if (!first) out += ", ";
      first = false;
      out += std::to_string(j) + (s == Sign::Minus ? "-" : "+") + ": " + to_string(f.at(j, s));
    }
  }
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const CylinderPoint& f) { return os << to_string(f); }

inline CylinderPoint parse_cylinder_point(std::string_view text, std::size_t n) {
  std::vector<IntervalSet> out(2 * (n + 1));
  for (auto& [label, set] : detail::parse_labeled_sets(text)) {
    if (label.size() < 2 || (label.back() != '-' && label.back() != '+')) throw domain_error("bad cylinder label '" + label + "'");
    std::size_t j = 0;
    try {
      j = std::stoul(label.substr(0, label.size() - 1));
    } catch (const std::exception&) {
      throw domain_error("bad cylinder label '" + label + "'");
    }
    if (j > n) throw domain_error("cylinder label '" + label + "' exceeds n");
    out[2 * j + (label.back() == '+' ? 1 : 0)] = std::move(set);
  }
  return CylinderPoint(std::move(out));
}

}  // namespace randotop
