#pragma once

// Simplicial sets of ordered simplicial complexes at the level of points:
// weakly increasing vertex tuples, the Eilenberg–Zilber factorization, and the
// canonical representative (nondegenerate simplex, interior point) of a point
// of the realization.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "randotop/complex.hpp"
#include "randotop/errors.hpp"
#include "randotop/interval_set.hpp"
#include "randotop/monotone_map.hpp"
#include "randotop/random_simplex.hpp"

namespace randotop {

class SimplexTuple {
 public:
  explicit SimplexTuple(std::vector<std::size_t> vertices) : v_(std::move(vertices)) {
    if (v_.empty()) throw arity_error("simplex tuple needs at least one vertex");
    if (!std::is_sorted(v_.begin(), v_.end())) throw invariant_error("simplex tuple is not weakly increasing");
  }

  std::size_t dim() const { return v_.size() - 1; }
  const std::vector<std::size_t>& vertices() const { return v_; }
  std::size_t operator[](std::size_t i) const { return v_.at(i); }

  bool nondegenerate() const { return std::adjacent_find(v_.begin(), v_.end()) == v_.end(); }

  bool in(const SimplicialComplex& k) const { return v_.back() < k.vertex_count() && k.contains(v_); }

  friend bool operator==(const SimplexTuple& a, const SimplexTuple& b) { return a.v_ == b.v_; }
  friend bool operator<(const SimplexTuple& a, const SimplexTuple& b) { return a.v_ < b.v_; }

 private:
  std::vector<std::size_t> v_;
};

inline std::string to_string(const SimplexTuple& x) {
  std::string out = "(";
  for (std::size_t i = 0; i <= x.dim(); ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const SimplexTuple& x) { return os << to_string(x); }

// x.σ = (x_{σ(0)}, …, x_{σ(m)}) for σ : [m] → [n].
inline SimplexTuple act_tuple(const MonotoneMap& sigma, const SimplexTuple& x) {
  if (sigma.target() != x.dim()) throw arity_error("act_tuple: map target differs from tuple dimension");
  std::vector<std::size_t> out;
  out.reserve(sigma.source() + 1);
  for (std::size_t j = 0; j <= sigma.source(); ++j) out.push_back(x[sigma(j)]);
  return SimplexTuple(std::move(out));
}

// x = α.S with α strictly increasing and S surjective.
inline std::pair<SimplexTuple, MonotoneMap> ez_decompose(const SimplexTuple& x) {
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> s;
  for (std::size_t v : x.vertices()) {
    if (alpha.empty() || alpha.back() != v) alpha.push_back(v);
    s.push_back(alpha.size() - 1);
  }
  const std::size_t top = alpha.size() - 1;
  return {SimplexTuple(std::move(alpha)), MonotoneMap(top, std::move(s))};
}

// b = ∇(D).a′ with D injective and a′ interior: delete the empty classes.
inline std::pair<MonotoneMap, RandomSimplex> interiorize(const RandomSimplex& b) {
  std::vector<std::size_t> keep;
  std::vector<IntervalSet> classes;
  for (std::size_t i = 0; i <= b.dim(); ++i) {
    if (b[i].measure() > 0) {
      keep.push_back(i);
      classes.push_back(b[i]);
    }
  }
  return {MonotoneMap(b.dim(), std::move(keep)), RandomSimplex(std::move(classes))};
}

// Removes class i, which must be empty: the inverse of face(i,·).
inline RandomSimplex delete_empty_class(const RandomSimplex& g, std::size_t i) {
  if (g.dim() == 0 || i > g.dim()) throw domain_error("delete_empty_class: bad index");
  if (!g[i].empty()) throw precondition_error("class " + std::to_string(i) + " is not empty");
  std::vector<IntervalSet> out;
  for (std::size_t j = 0; j <= g.dim(); ++j) {
    if (j != i) out.push_back(g[j]);
  }
  return RandomSimplex(std::move(out));
}

struct CanonicalPoint {
  SimplexTuple simplex;
  RandomSimplex coords;

  friend bool operator==(const CanonicalPoint& a, const CanonicalPoint& b) {
    return a.simplex == b.simplex && a.coords == b.coords;
  }
};

inline std::string to_string(const CanonicalPoint& p) { return to_string(p.simplex) + " " + to_string(p.coords); }

// (β,b) ∼ (β.D, a′) = (α.S, a′) ∼ (α, ∇(S).a′).
inline CanonicalPoint minimal_representative(const SimplexTuple& beta, const RandomSimplex& b) {
  if (beta.dim() != b.dim()) throw arity_error("minimal_representative: tuple and point dimensions differ");
  auto [d, a] = interiorize(b);
  auto [alpha, s] = ez_decompose(act_tuple(d, beta));
  return {alpha, pushforward(s, a)};
}

// Reduction of a nondegenerate (α,b) that only uses face relations.
inline CanonicalPoint face_only_reduce(const SimplexTuple& alpha, const RandomSimplex& b) {
  if (!alpha.nondegenerate()) throw precondition_error("face-only reduction needs a nondegenerate tuple");
  if (alpha.dim() != b.dim()) throw arity_error("face_only_reduce: dimensions differ");
  auto [d, a] = interiorize(b);
  return {act_tuple(d, alpha), a};
}

struct CanonicalLawPoint {
  SimplexTuple simplex;
  ProbVector coords;

  friend bool operator==(const CanonicalLawPoint& a, const CanonicalLawPoint& b) {
    return a.simplex == b.simplex && a.coords == b.coords;
  }
};

inline std::string to_string(const CanonicalLawPoint& p) { return to_string(p.simplex) + " " + to_string(p.coords); }

// The same reduction in the geometric realization, positivity playing the role of interiority.
inline CanonicalLawPoint minimal_law_representative(const SimplexTuple& beta, const ProbVector& x) {
  if (beta.dim() != x.dim()) throw arity_error("minimal_law_representative: dimensions differ");
  std::vector<std::size_t> keep;
  std::vector<Rational> pos;
  for (std::size_t i = 0; i <= x.dim(); ++i) {
    if (x[i] > 0) {
      keep.push_back(i);
      pos.push_back(x[i]);
    }
  }
  MonotoneMap d(x.dim(), std::move(keep));
  auto [alpha, s] = ez_decompose(act_tuple(d, beta));
  return {alpha, law_pushforward(s, ProbVector(std::move(pos)))};
}

// p_F : L(F) → |F| on canonical points.
inline CanonicalLawPoint law_point(const CanonicalPoint& p) { return minimal_law_representative(p.simplex, law(p.coords)); }

// A weakly monotone vertex map K → L carrying faces to faces.
class SimplicialMapSpec {
 public:
  SimplicialMapSpec(SimplicialComplex source, SimplicialComplex target, std::vector<std::size_t> vertex_map)
      : source_(std::move(source)), target_(std::move(target)), phi_(std::move(vertex_map)) {
    if (phi_.size() != source_.vertex_count()) throw arity_error("vertex map size differs from source vertex count");
    if (!std::is_sorted(phi_.begin(), phi_.end())) throw invariant_error("vertex map is not monotone");
    for (std::size_t v : phi_) {
      if (v >= target_.vertex_count()) throw domain_error("vertex map value out of range");
    }
    for (const auto& f : source_.faces()) {
      if (!target_.contains(image(f))) throw invariant_error("vertex map does not carry faces to faces");
    }
  }

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  std::size_t operator()(std::size_t v) const { return phi_.at(v); }

  Face image(const Face& f) const {
    Face out;
    for (std::size_t v : f) out.push_back(phi_.at(v));
    return out;
  }

  SimplexTuple apply(const SimplexTuple& x) const {
    std::vector<std::size_t> out;
    for (std::size_t v : x.vertices()) out.push_back(phi_.at(v));
    return SimplexTuple(std::move(out));
  }

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<std::size_t> phi_;
};

// L(φ) on points.
inline CanonicalPoint apply_map(const SimplicialMapSpec& phi, const CanonicalPoint& p) {
  return minimal_representative(phi.apply(p.simplex), p.coords);
}

// For each point: L(φ)(p) = L(ψ)(p) exactly when the canonical simplex of p lies in the equalizer {x : φ(x) = ψ(x)}.
inline bool sset_equalizer_check(const SimplicialMapSpec& phi, const SimplicialMapSpec& psi,
                                 const std::vector<std::pair<SimplexTuple, RandomSimplex>>& points) {
  if (!(phi.source() == psi.source()) || !(phi.target() == psi.target())) {
    throw arity_error("sset_equalizer_check: maps have different signatures");
  }
  for (const auto& [beta, b] : points) {
    CanonicalPoint p = minimal_representative(beta, b);
    const bool in_equalizer = phi.apply(p.simplex) == psi.apply(p.simplex);
    const bool images_agree = apply_map(phi, p) == apply_map(psi, p);
    if (in_equalizer != images_agree) return false;
  }
  return true;
}

// ---- the product F×F of the 1-simplex: points indexed by {0,1}² ----

struct ProductPoint {
  IntervalSet a00, a01, a10, a11;

  ProductPoint(IntervalSet p00, IntervalSet p01, IntervalSet p10, IntervalSet p11)
      : a00(std::move(p00)), a01(std::move(p01)), a10(std::move(p10)), a11(std::move(p11)) {
    RandomSimplex check({a00, a01, a10, a11});
    if (!a10.empty() && !a01.empty()) throw invariant_error("product point uses both 01 and 10");
  }
};

// (A₁₀ ∪ A₁₁, A₀₁ ∪ A₁₁): the two coordinate events.
inline std::pair<IntervalSet, IntervalSet> product_pair_projection(const ProductPoint& f) {
  return {set_union(f.a10, f.a11), set_union(f.a01, f.a11)};
}

// (U,V) is in the image exactly when U ⊆ V or V ⊆ U.
inline bool has_preimage(const IntervalSet& u, const IntervalSet& v) { return nested(u, v); }

// Brute check: the only partition of [0,1) over {0,1}² projecting to (U,V) is forced
// (A₁₁ = U∩V, A₁₀ = U∖V, A₀₁ = V∖U); test whether it is a product point.
inline bool has_preimage_brute(const IntervalSet& u, const IntervalSet& v) {
  try {
    ProductPoint p(complement(set_union(u, v)), difference(v, u), difference(u, v), intersect(u, v));
    return product_pair_projection(p) == std::make_pair(u, v);
  } catch (const invariant_error&) {
    return false;
  }
}

// ---- Kan filler for horns of maps out of ∇ₙ ----

// Extends compatible maps z_i on the faces i ≠ k of the horn to all of ∇ₙ:
// f ↦ z_i(horn_retract(f,k) with its empty class i deleted), i the smallest eligible index.
template <typename T>
class HornFiller {
 public:
  using FaceMap = std::function<T(const RandomSimplex&)>;

  HornFiller(std::size_t n, std::size_t k, std::map<std::size_t, FaceMap> faces) : n_(n), k_(k), z_(std::move(faces)) {
    if (n_ == 0 || k_ > n_) throw domain_error("horn filler needs n >= 1 and k <= n");
    for (std::size_t i = 0; i <= n_; ++i) {
      if (i != k_ && !z_.count(i)) throw arity_error("missing horn face " + std::to_string(i));
    }
    if (z_.count(k_)) throw arity_error("the horn has no face " + std::to_string(k_));
  }

  T operator()(const RandomSimplex& f) const {
    if (f.dim() != n_) throw arity_error("horn filler: dimension mismatch");
    RandomSimplex g = horn_retract(f, k_);
    for (std::size_t i = 0; i <= n_; ++i) {
      if (i != k_ && g[i].empty()) return z_.at(i)(delete_empty_class(g, i));
    }
    throw invariant_error("horn retraction did not land in the horn");
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::map<std::size_t, FaceMap> z_;
};

}  // namespace randotop
