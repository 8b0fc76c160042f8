#pragma once

// Seeded random generators for every value type. Breakpoints are rationals
// with bounded denominators so exact arithmetic stays cheap.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "randotop/chain.hpp"
#include "randotop/complex.hpp"
#include "randotop/cylinders.hpp"
#include "randotop/interval_set.hpp"
#include "randotop/monotone_map.hpp"
#include "randotop/random_simplex.hpp"
#include "randotop/rational.hpp"
#include "randotop/simplicial_sets.hpp"

namespace randotop {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent per-trial seed, so trials can run in any order.
inline std::uint64_t sub_seed(std::uint64_t seed, std::string_view tag, std::uint64_t trial) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return splitmix64(splitmix64(seed ^ h) + trial);
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, long max_denominator = 64) : rng_(seed), max_den_(max_denominator) {
    if (max_den_ < 1) throw domain_error("max denominator must be positive");
  }

  std::size_t index(std::size_t bound_inclusive) {
    return std::uniform_int_distribution<std::size_t>(0, bound_inclusive)(rng_);
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // p/q with 1 ≤ q ≤ max_denominator and 0 ≤ p ≤ q.
  Rational unit_rational() {
    long q = std::uniform_int_distribution<long>(1, max_den_)(rng_);
    long p = std::uniform_int_distribution<long>(0, q)(rng_);
    return rat(p, q);
  }

  // Rational in [0,1] that hits 0 and 1 now and then.
  Rational parameter() {
    std::size_t k = index(9);
    if (k == 0) return Rational(0);
    if (k == 1) return Rational(1);
    return unit_rational();
  }

  // Sorted distinct cut points strictly inside (0,1).
  std::vector<Rational> cuts(std::size_t count) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < count; ++i) {
      Rational x = unit_rational();
      if (x > 0 && x < 1) c.push_back(x);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  }

  IntervalSet interval_set(std::size_t max_pieces = 4) {
    std::vector<Rational> c = cuts(2 * max_pieces);
    c.insert(c.begin(), Rational(0));
    c.push_back(Rational(1));
    std::vector<Interval> raw;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (coin()) raw.push_back({c[i], c[i + 1]});
    }
    return IntervalSet::normalize(std::move(raw));
  }

  // A small random modification of a.
  IntervalSet perturb(const IntervalSet& a) {
    Rational lo = unit_rational();
    Rational len = unit_rational() / 8;
    Rational hi = lo + len > 1 ? Rational(1) : Rational(lo + len);
    return symmdiff(a, IntervalSet::interval(lo, hi));
  }

  // Cuts [0,1) into pieces and hands each to a random class; with interior set, every class gets one.
  RandomSimplex random_simplex(std::size_t n, bool interior = false) {
    std::size_t extra = index(n + 2);
    std::vector<Rational> c = cuts(n + 1 + extra);
    for (int tries = 0; interior && c.size() < n && tries < 16; ++tries) c = cuts(n + 1 + extra);
    if (interior && c.size() < n) {
      c.clear();
      for (std::size_t k = 1; k <= n; ++k) c.push_back(rat(static_cast<long>(k), static_cast<long>(n + 1)));
    }
    c.insert(c.begin(), Rational(0));
    c.push_back(Rational(1));
    const std::size_t pieces = c.size() - 1;
    std::vector<std::size_t> owner(pieces);
    for (auto& o : owner) o = index(n);
    if (interior) {
      std::vector<std::size_t> order(pieces);
      for (std::size_t i = 0; i < pieces; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng_);
      for (std::size_t k = 0; k <= n; ++k) owner[order[k]] = k;
    }
    std::vector<std::vector<Interval>> raw(n + 1);
    for (std::size_t i = 0; i < pieces; ++i) raw[owner[i]].push_back({c[i], c[i + 1]});
    std::vector<IntervalSet> classes;
    for (auto& r : raw) classes.push_back(IntervalSet::normalize(std::move(r)));
    return RandomSimplex(std::move(classes));
  }

  // Mostly the generic sampler, sometimes a point with a few classes forced empty.
  RandomSimplex random_simplex_mixed(std::size_t n) {
    if (n == 0 || coin(0.7)) return random_simplex(n);
    std::size_t keep = index(n - 1) + 1;  // 1..n classes survive
    std::vector<std::size_t> slots(n + 1);
    for (std::size_t i = 0; i <= n; ++i) slots[i] = i;
    std::shuffle(slots.begin(), slots.end(), rng_);
    slots.resize(keep);
    std::sort(slots.begin(), slots.end());
    RandomSimplex small = random_simplex(keep - 1);
    std::vector<IntervalSet> classes(n + 1);
    for (std::size_t k = 0; k < keep; ++k) classes[slots[k]] = small[k];
    return RandomSimplex(std::move(classes));
  }

  ProbVector prob_vector(std::size_t n) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(unit_rational());
    std::sort(c.begin(), c.end());
    std::vector<Rational> x;
    Rational prev = 0;
    for (const auto& v : c) {
      x.push_back(v - prev);
      prev = v;
    }
    x.push_back(1 - prev);
    return ProbVector(std::move(x));
  }

  MonotoneMap monotone(std::size_t n, std::size_t m) {
    std::vector<std::size_t> v(n + 1);
    for (auto& x : v) x = index(m);
    std::sort(v.begin(), v.end());
    return MonotoneMap(m, std::move(v));
  }

  Chain chain(std::size_t n) { return to_chain(random_simplex(n)); }

  // A point of L(𝓕_r) for a random r: a partition of the n+2 ordered positions 0⁻ < … < r⁻ < r⁺ < … < n⁺.
  CylinderPoint cylinder(std::size_t n) {
    std::size_t r = index(n);
    return d_chain_inverse(to_chain(random_simplex_mixed(n + 1)), r);
  }

  // Random complex on [n] generated by a few random faces (every vertex is a face).
  SimplicialComplex complex(std::size_t n) {
    std::vector<Face> gens;
    for (std::size_t v = 0; v <= n; ++v) gens.push_back({v});
    std::size_t count = 1 + index(2);
    for (std::size_t c = 0; c < count; ++c) {
      Face f;
      for (std::size_t v = 0; v <= n; ++v) {
        if (coin()) f.push_back(v);
      }
      if (!f.empty()) gens.push_back(f);
    }
    return SimplicialComplex(n + 1, gens);
  }

  // A cylinder point whose projected support is a face of k.
  CylinderPoint cylinder_in(const SimplicialComplex& k) {
    const auto& faces = k.faces();
    auto it = faces.begin();
    std::advance(it, static_cast<long>(index(faces.size() - 1)));
    const Face& face = *it;
    CylinderPoint local = cylinder(face.size() - 1);
    std::vector<IntervalSet> out(2 * k.vertex_count());
    for (std::size_t j = 0; j < face.size(); ++j) {
      out[2 * face[j]] = local.minus(j);
      out[2 * face[j] + 1] = local.plus(j);
    }
    return CylinderPoint(std::move(out));
  }

  // A point of ∇ₙ supported on a face of k.
  RandomSimplex simplex_in(const SimplicialComplex& k) {
    const auto& faces = k.faces();
    auto it = faces.begin();
    std::advance(it, static_cast<long>(index(faces.size() - 1)));
    RandomSimplex local = random_simplex(it->size() - 1);
    std::vector<IntervalSet> out(k.vertex_count());
    for (std::size_t j = 0; j < it->size(); ++j) out[(*it)[j]] = local[j];
    return RandomSimplex(std::move(out));
  }

  // A weakly increasing tuple of dimension ≤ max_dim whose vertex set is a face of k.
  SimplexTuple tuple_in(const SimplicialComplex& k, std::size_t max_dim) {
    const auto& faces = k.faces();
    auto it = faces.begin();
    std::advance(it, static_cast<long>(index(faces.size() - 1)));
    std::vector<std::size_t> v = *it;
    while (v.size() <= max_dim && coin(0.4)) v.push_back((*it)[index(it->size() - 1)]);
    std::sort(v.begin(), v.end());
    return SimplexTuple(std::move(v));
  }

  // One random generating relation (γ.σ, a) ∼ (γ, ∇(σ).a), applied in either direction.
  // Dimensions stay at most max_dim.
  std::pair<SimplexTuple, RandomSimplex> relation_step(const SimplicialComplex& k, const SimplexTuple& x,
                                                       const RandomSimplex& a, std::size_t max_dim = 6) {
    if (coin()) {
      // push: write x = γ.σ, move to (γ, ∇(σ).a)
      const std::size_t m = x.dim();
      std::vector<std::size_t> sv(m + 1);
      sv[0] = index(1);
      for (std::size_t j = 1; j <= m; ++j) {
        bool may_merge = x[j] == x[j - 1];
        sv[j] = sv[j - 1] + (may_merge && coin() ? 0 : 1 + index(1));
      }
      std::size_t top = sv[m] + index(1);
      if (top > max_dim) {
        for (std::size_t j = 0; j <= m; ++j) sv[j] = j;
        top = m;
      }
      std::vector<std::optional<std::size_t>> gamma(top + 1);
      for (std::size_t j = 0; j <= m; ++j) gamma[sv[j]] = x[j];
      std::set<std::size_t> support(x.vertices().begin(), x.vertices().end());
      for (std::size_t p = 0; p <= top; ++p) {
        if (gamma[p]) continue;
        std::size_t lo = 0;
        for (std::size_t q = p; q-- > 0;) {
          if (gamma[q]) {
            lo = *gamma[q];
            break;
          }
        }
        std::size_t hi = k.vertex_count() - 1;
        for (std::size_t q = p + 1; q <= top; ++q) {
          if (gamma[q]) {
            hi = *gamma[q];
            break;
          }
        }
        std::vector<std::size_t> options;
        for (std::size_t v = lo; v <= hi; ++v) {
          Face f(support.begin(), support.end());
          f.push_back(v);
          if (k.contains(f)) options.push_back(v);
        }
        std::size_t v = options[index(options.size() - 1)];
        gamma[p] = v;
        support.insert(v);
      }
      std::vector<std::size_t> g;
      for (const auto& v : gamma) g.push_back(*v);
      MonotoneMap sigma(top, std::move(sv));
      return {SimplexTuple(std::move(g)), pushforward(sigma, a)};
    }
    // pull: write a = ∇(σ).a′ by splitting classes, move to (x.σ, a′)
    std::vector<std::size_t> sv;
    std::vector<IntervalSet> pieces;
    for (std::size_t i = 0; i <= x.dim(); ++i) {
      std::size_t mult = a[i].empty() ? index(1) : 1 + index(1);
      if (sv.size() + mult > max_dim + 1) mult = a[i].empty() ? 0 : 1;
      if (mult == 2) {
        IntervalSet left = prefix_of_measure(a[i], unit_rational() * a[i].measure());
        pieces.push_back(left);
        pieces.push_back(difference(a[i], left));
      } else if (mult == 1) {
        pieces.push_back(a[i]);
      }
      for (std::size_t r = 0; r < mult; ++r) sv.push_back(i);
    }
    MonotoneMap sigma(x.dim(), std::move(sv));
    return {act_tuple(sigma, x), RandomSimplex(std::move(pieces))};
  }

  // f with one short random interval handed to a random class.
  RandomSimplex nearby(const RandomSimplex& f) {
    Rational lo = unit_rational();
    Rational len = unit_rational() / 8;
    IntervalSet piece = IntervalSet::interval(lo, lo + len > 1 ? Rational(1) : Rational(lo + len));
    std::size_t target = index(f.dim());
    std::vector<IntervalSet> out;
    for (std::size_t i = 0; i <= f.dim(); ++i) {
      out.push_back(i == target ? set_union(f[i], piece) : difference(f[i], piece));
    }
    return RandomSimplex(std::move(out));
  }

  std::mt19937_64& engine() { return rng_; }
  long max_denominator() const { return max_den_; }

 private:
  std::mt19937_64 rng_;
  long max_den_;
};

}  // namespace randotop
