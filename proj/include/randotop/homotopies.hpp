#pragma once

// Explicit homotopies and retracts on ∇ₙ: the contraction Hₙ onto the image of
// the section, the law-path lift, the boundary retract Ψ, and the Vₙʳ retracts.

#include <cstddef>
#include <utility>
#include <vector>

#include "randotop/chain.hpp"
#include "randotop/errors.hpp"
#include "randotop/interval_set.hpp"
#include "randotop/measure_maps.hpp"
#include "randotop/random_simplex.hpp"
#include "randotop/rational.hpp"

namespace randotop {

struct EChainFamily {
  Rational u;
  std::vector<IntervalSet> e;      // e[k-1] = E_uᵏ, k = 1..n
  std::vector<IntervalSet> omega;  // omega[k] = Ω_uᵏ, k = 0..n

  const IntervalSet& E(std::size_t k) const { return e.at(k - 1); }
};

inline EChainFamily build_E_chains(const RandomSimplex& f, const Rational& u) {
  const std::size_t n = f.dim();
  if (n == 0) throw domain_error("build_E_chains needs n >= 1");
  require_unit(u, "u");

  std::vector<IntervalSet> xs;  // X_k = f⁻¹{0..k}
  xs.reserve(n + 1);
  IntervalSet acc;
  for (std::size_t k = 0; k <= n; ++k) {
    acc = set_union(acc, f[k]);
    xs.push_back(acc);
  }
  auto x = [&](std::size_t k) -> const Rational& { return xs[k].measure(); };

  EChainFamily fam{u, std::vector<IntervalSet>(n), std::vector<IntervalSet>(n + 1)};
  const Rational den = u + (1 - u) * x(n - 1);
  const Rational coef = den == 0 ? Rational(0) : Rational(x(n - 1) / den);
  fam.e[n - 1] = lower_scale(coef, h_map(xs[n - 1], u));
  for (std::size_t k = n; k >= 2; --k) {
    const Rational ratio = x(k - 1) == 0 ? Rational(0) : Rational(x(k - 2) / x(k - 1));
    fam.e[k - 2] = phi_pointwise(ratio, fam.e[k - 1], xs[k - 2]);
  }

  fam.omega[n] = complement(fam.e[n - 1]);
  for (std::size_t k = n; k >= 2; --k) fam.omega[k - 1] = difference(fam.e[k - 1], fam.e[k - 2]);
  fam.omega[0] = fam.e[0];
  return fam;
}

// Ȟₙ(v,f): class k on Ω_vᵏ.
inline RandomSimplex homotopy_H_check(const Rational& v, const RandomSimplex& f) {
  return RandomSimplex(build_E_chains(f, v).omega);
}

// Hₙ(u,f): runs Ȟₙ while u ≤ αₙ, then freezes the top class on [1−αₙ,1) and recurses below it.
inline RandomSimplex homotopy_H(const Rational& u, const RandomSimplex& f) {
  require_unit(u, "u");
  const std::size_t n = f.dim();
  if (n == 0 || u == 0) return f;
  const Rational& an = f[n].measure();
  if (an > 0 && u <= an) return homotopy_H_check(u / an, f);
  RandomSimplex below = truncate_top_and_rescale(homotopy_H_check(Rational(1), f));
  return embed_below_top(homotopy_H((u - an) / (1 - an), below), an);
}

// H_{n+1}(u, face(i,f)) == face(i, Hₙ(u,f)).
inline bool face_equivariance_check(std::size_t i, const Rational& u, const RandomSimplex& f) {
  return homotopy_H(u, face(i, f)) == face(i, homotopy_H(u, f));
}

// degeneracy(i, Hₙ(u,f)) == H_{n−1}(u, degeneracy(i,f)); fails in general.
inline bool degeneracy_equivariance_check(std::size_t i, const Rational& u, const RandomSimplex& f) {
  return degeneracy(i, homotopy_H(u, f)) == homotopy_H(u, degeneracy(i, f));
}

// A point with law β obtained by interpolating the cumulative chain of f at the cumulative sums of β.
inline RandomSimplex lift_law_target(const RandomSimplex& f, const ProbVector& beta) {
  if (f.dim() != beta.dim()) throw arity_error("lift_law_target: dimensions differ");
  Chain x = to_chain(f);
  std::vector<Rational> b = beta.cumulative();
  std::vector<IntervalSet> y;
  y.reserve(f.dim());
  for (std::size_t k = 0; k < f.dim(); ++k) y.push_back(interpolate_chain(x, b[k]));
  return from_chain(Chain(std::move(y)));
}

// Retraction of Δₙ×I onto (Δₙ×{0}) ∪ (∂Δₙ×I).
inline std::pair<ProbVector, Rational> simplex_cyl_retract(const ProbVector& alpha, const Rational& a) {
  require_unit(a, "a");
  const std::size_t n1 = alpha.dim() + 1;
  Rational m = alpha[0];
  for (const auto& x : alpha.entries()) {
    if (x < m) m = x;
  }
  std::vector<Rational> out(n1);
  if (a <= 2 * n1 * m) {
    for (std::size_t i = 0; i < n1; ++i) out[i] = (2 * alpha[i] - a / n1) / (2 - a);
    return {ProbVector(std::move(out)), Rational(0)};
  }
  const Rational d = 1 - n1 * m;
  for (std::size_t i = 0; i < n1; ++i) out[i] = (alpha[i] - m) / d;
  return {ProbVector(std::move(out)), Rational((a - 2 * n1 * m) / d)};
}

// Ψ(f,a) = (lift of the retracted law, retracted height).
inline std::pair<RandomSimplex, Rational> boundary_retract_psi(const RandomSimplex& f, const Rational& a) {
  auto [beta, a2] = simplex_cyl_retract(law(f), a);
  return {lift_law_target(f, beta), a2};
}

namespace detail {

inline void require_vnr_index(std::size_t n, std::size_t r) {
  if (n == 0) throw domain_error("Vₙʳ retracts need n >= 1");
  if (r > n) throw domain_error("index r exceeds n");
}

}  // namespace detail

// Strong deformation retraction of ∇ₙ onto Vₙʳ = {∃ i ≠ r, λ(A_i) = 0}.
inline RandomSimplex vnr_deformation(const RandomSimplex& f, const Rational& t, std::size_t r) {
  const std::size_t n = f.dim();
  detail::require_vnr_index(n, r);
  require_unit(t, "t");
  std::vector<IntervalSet> out(n + 1);
  IntervalSet taken;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == r) continue;
    // min over j ∉ {i,r}; an empty minimum counts as the total mass 1
    Rational m = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j != i && j != r && f[j].measure() < m) m = f[j].measure();
    }
    const Rational& mi = f[i].measure();
    Rational ratio = mi == 0 ? Rational(1) : clamp01(t * m / mi);
    out[i] = g_map(f[i], ratio);
    taken = set_union(taken, out[i]);
  }
  out[r] = complement(taken);
  return RandomSimplex(std::move(out));
}

// Retraction of ∇ₙ×I onto (∇ₙ×{0}) ∪ (Vₙʳ×I).
inline std::pair<RandomSimplex, Rational> vnr_cofibration_retract(const RandomSimplex& f, const Rational& u, std::size_t r) {
  const std::size_t n = f.dim();
  detail::require_vnr_index(n, r);
  require_unit(u, "u");
  Rational m = f[r == 0 ? 1 : 0].measure();
  for (std::size_t i = 0; i <= n; ++i) {
    if (i != r && f[i].measure() < m) m = f[i].measure();
  }
  const Rational shift = u < m ? u : m;
  std::vector<IntervalSet> out(n + 1);
  IntervalSet taken;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == r) continue;
    const Rational& mi = f[i].measure();
    out[i] = mi == 0 ? f[i] : g_map(f[i], shift / mi);
    taken = set_union(taken, out[i]);
  }
  out[r] = complement(taken);
  return {RandomSimplex(std::move(out)), u > m ? Rational(u - m) : Rational(0)};
}

}  // namespace randotop
