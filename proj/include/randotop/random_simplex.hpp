#pragma once

// Points of the randomized simplex ∇ₙ (ordered partitions of [0,1) into n+1
// classes), points of Δₙ, and the maps between them.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "randotop/chain.hpp"
#include "randotop/errors.hpp"
#include "randotop/interval_set.hpp"
#include "randotop/measure_maps.hpp"
#include "randotop/monotone_map.hpp"
#include "randotop/rational.hpp"

namespace randotop {

class ProbVector {
 public:
  explicit ProbVector(std::vector<Rational> entries) : x_(std::move(entries)) {
    if (x_.empty()) throw arity_error("probability vector needs at least one entry");
    Rational total = 0;
    for (const auto& v : x_) {
      if (v < 0) throw invariant_error("negative probability " + v.get_str());
      total += v;
    }
    if (total != 1) throw invariant_error("probabilities sum to " + total.get_str() + ", not 1");
  }

  // The vertex e_i of Δₙ.
  static ProbVector vertex(std::size_t n, std::size_t i) {
    std::vector<Rational> x(n + 1, Rational(0));
    x.at(i) = 1;
    return ProbVector(std::move(x));
  }

  static ProbVector uniform(std::size_t n) { return ProbVector(std::vector<Rational>(n + 1, Rational(1, n + 1))); }

  std::size_t dim() const { return x_.size() - 1; }
  const std::vector<Rational>& entries() const { return x_; }
  const Rational& operator[](std::size_t i) const { return x_.at(i); }

  // x_k = α₀ + … + α_k.
  std::vector<Rational> cumulative() const {
    std::vector<Rational> c(x_.size());
    Rational acc = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      acc += x_[i];
      c[i] = acc;
    }
    return c;
  }

  friend bool operator==(const ProbVector& a, const ProbVector& b) { return a.x_ == b.x_; }

 private:
  std::vector<Rational> x_;
};

class RandomSimplex {
 public:
  explicit RandomSimplex(std::vector<IntervalSet> classes) : a_(std::move(classes)) {
    if (a_.empty()) throw arity_error("random simplex needs at least one class");
    Rational total = 0;
    IntervalSet all;
    for (const auto& c : a_) {
      total += c.measure();
      all = set_union(all, c);
    }
    if (total != 1 || all.measure() != 1) {
      throw invariant_error("classes do not form a partition of [0,1) (total measure " + total.get_str() + ")");
    }
  }

  std::size_t dim() const { return a_.size() - 1; }
  const std::vector<IntervalSet>& classes() const { return a_; }
  const IntervalSet& operator[](std::size_t i) const { return a_.at(i); }

  friend bool operator==(const RandomSimplex& a, const RandomSimplex& b) { return a.a_ == b.a_; }

 private:
  std::vector<IntervalSet> a_;
};

inline ProbVector law(const RandomSimplex& f) {
  std::vector<Rational> x;
  x.reserve(f.dim() + 1);
  for (const auto& c : f.classes()) x.push_back(c.measure());
  return ProbVector(std::move(x));
}

// σₙ(α): class k is [x_{k−1}, x_k).
inline RandomSimplex section(const ProbVector& alpha) {
  std::vector<IntervalSet> classes;
  classes.reserve(alpha.dim() + 1);
  Rational lo = 0;
  for (const auto& hi : alpha.cumulative()) {
    classes.push_back(IntervalSet::interval(lo, hi));
    lo = hi;
  }
  return RandomSimplex(std::move(classes));
}

inline RandomSimplex pushforward(const MonotoneMap& sigma, const RandomSimplex& f) {
  if (sigma.source() != f.dim()) throw arity_error("pushforward: map source differs from simplex dimension");
  std::vector<IntervalSet> out(sigma.target() + 1);
  for (std::size_t j = 0; j <= f.dim(); ++j) out[sigma(j)] = set_union(out[sigma(j)], f[j]);
  return RandomSimplex(std::move(out));
}

// Inserts an empty class at index i: f on [n−1] becomes a point on [n].
inline RandomSimplex face(std::size_t i, const RandomSimplex& f) {
  return pushforward(MonotoneMap::face(i, f.dim() + 1), f);
}

// Merges classes i and i+1: f on [n] becomes a point on [n−1].
inline RandomSimplex degeneracy(std::size_t i, const RandomSimplex& f) {
  if (f.dim() == 0) throw domain_error("degeneracy of a point on [0]");
  return pushforward(MonotoneMap::degeneracy(i, f.dim() - 1), f);
}

inline ProbVector law_pushforward(const MonotoneMap& sigma, const ProbVector& alpha) {
  if (sigma.source() != alpha.dim()) throw arity_error("law_pushforward: map source differs from vector dimension");
  std::vector<Rational> out(sigma.target() + 1, Rational(0));
  for (std::size_t j = 0; j <= alpha.dim(); ++j) out[sigma(j)] += alpha[j];
  return ProbVector(std::move(out));
}

inline std::set<std::size_t> essential_image(const RandomSimplex& f) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i <= f.dim(); ++i) {
    if (f[i].measure() > 0) out.insert(i);
  }
  return out;
}

inline bool is_interior(const RandomSimplex& f) {
  return std::all_of(f.classes().begin(), f.classes().end(), [](const IntervalSet& c) { return c.measure() > 0; });
}

inline bool is_interior(const ProbVector& alpha) {
  return std::all_of(alpha.entries().begin(), alpha.entries().end(), [](const Rational& x) { return x > 0; });
}

// λ{t : f(t) ≠ g(t)}.
inline Rational rv_distance(const RandomSimplex& f, const RandomSimplex& g) {
  if (f.dim() != g.dim()) throw arity_error("rv_distance: dimensions differ");
  Rational agree = 0;
  for (std::size_t i = 0; i <= f.dim(); ++i) agree += intersect(f[i], g[i]).measure();
  return 1 - agree;
}

// X_k = A₀ ∪ … ∪ A_{k−1}, k = 1..n.
inline Chain to_chain(const RandomSimplex& f) {
  std::vector<IntervalSet> sets;
  sets.reserve(f.dim());
  IntervalSet acc;
  for (std::size_t k = 0; k < f.dim(); ++k) {
    acc = set_union(acc, f[k]);
    sets.push_back(acc);
  }
  return Chain(std::move(sets));
}

inline RandomSimplex from_chain(const Chain& x) {
  std::vector<IntervalSet> classes;
  classes.reserve(x.length() + 1);
  for (std::size_t k = 0; k <= x.length(); ++k) classes.push_back(difference(x.at(k + 1), x.at(k)));
  return RandomSimplex(std::move(classes));
}

// Entry i is X_{1+sup σ⁻¹({0..i−1})}, with X_{−∞} = ∅.
inline Chain chain_action(const MonotoneMap& sigma, const Chain& x) {
  if (sigma.source() != x.length()) throw arity_error("chain_action: map source differs from chain length");
  std::vector<IntervalSet> sets;
  sets.reserve(sigma.target());
  for (std::size_t i = 1; i <= sigma.target(); ++i) {
    long s = sigma.sup_preimage_upto(i - 1);
    sets.push_back(s < 0 ? IntervalSet{} : x.at(static_cast<std::size_t>(s) + 1));
  }
  return Chain(std::move(sets));
}

namespace detail {

inline void require_horn_index(std::size_t n, std::size_t k) {
  if (n == 0) throw domain_error("horn retraction needs n >= 1");
  if (k > n) throw domain_error("horn index " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

}  // namespace detail

// q(a)_i = a_i − m, q(a)_k = a_k + n·m with m = min_{r≠k} a_r.
inline ProbVector horn_law_retract(const ProbVector& alpha, std::size_t k) {
  const std::size_t n = alpha.dim();
  detail::require_horn_index(n, k);
  Rational m = k == 0 ? alpha[1] : alpha[0];
  for (std::size_t r = 0; r <= n; ++r) {
    if (r != k && alpha[r] < m) m = alpha[r];
  }
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = i == k ? Rational(alpha[i] + n * m) : Rational(alpha[i] - m);
  return ProbVector(std::move(out));
}

// Retraction ∇ₙ → Vₙᵏ: every class other than k gives up measure m = min_{r≠k} λ(A_r) to class k.
inline RandomSimplex horn_retract(const RandomSimplex& f, std::size_t k) {
  const std::size_t n = f.dim();
  detail::require_horn_index(n, k);
  Rational m = f[k == 0 ? 1 : 0].measure();
  for (std::size_t r = 0; r <= n; ++r) {
    if (r != k && f[r].measure() < m) m = f[r].measure();
  }
  std::vector<IntervalSet> out(n + 1);
  IntervalSet taken;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == k) continue;
    const Rational& mi = f[i].measure();
    out[i] = mi == 0 ? f[i] : g_map(f[i], m / mi);
    taken = set_union(taken, out[i]);
  }
  out[k] = complement(taken);
  return RandomSimplex(std::move(out));
}

// Drops class n, which must be [1−αₙ,1), and stretches the rest back onto [0,1).
inline RandomSimplex truncate_top_and_rescale(const RandomSimplex& f) {
  const std::size_t n = f.dim();
  if (n == 0) throw precondition_error("cannot truncate a point on [0]");
  const Rational& an = f[n].measure();
  const Rational c = 1 - an;
  if (f[n] != IntervalSet::interval(c, Rational(1))) {
    throw precondition_error("top class " + to_string(f[n]) + " is not a terminal interval");
  }
  if (c == 0) throw precondition_error("top class fills [0,1); nothing to rescale");
  std::vector<IntervalSet> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(an == 0 ? f[i] : affine_scale(f[i], c, ScaleDirection::Inverse));
  return RandomSimplex(std::move(out));
}

// Inverse of truncate_top_and_rescale for a given top mass αₙ < 1.
inline RandomSimplex embed_below_top(const RandomSimplex& g, const Rational& an) {
  const Rational c = 1 - an;
  std::vector<IntervalSet> out;
  out.reserve(g.dim() + 2);
  for (const auto& cls : g.classes()) out.push_back(an == 0 ? cls : affine_scale(cls, c, ScaleDirection::Forward));
  out.push_back(IntervalSet::interval(c, Rational(1)));
  return RandomSimplex(std::move(out));
}

// ---- text formats ----

inline std::string to_string(const RandomSimplex& f) {
  std::string out = "{";
  for (std::size_t i = 0; i <= f.dim(); ++i) {
    if (i) out += ", ";
    out += std::to_string(i) + ": " + to_string(f[i]);
  }
  return out + "}";
}

inline std::string to_string(const ProbVector& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i <= alpha.dim(); ++i) {
    if (i) out += ", ";
    out += alpha[i].get_str();
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RandomSimplex& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const ProbVector& a) { return os << to_string(a); }

namespace detail {

// Splits "k: set, k: set" at commas that are not inside an interval bracket.
inline std::vector<std::string_view> split_top_level(std::string_view body) {
  std::vector<std::string_view> parts;
  bool in_interval = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '[') in_interval = true;
    if (body[i] == ')') in_interval = false;
    if (body[i] == ',' && !in_interval) {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(body.substr(start));
  return parts;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

// Parses "{label: set, ...}" into (label, set) pairs.
inline std::vector<std::pair<std::string, IntervalSet>> parse_labeled_sets(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw domain_error("expected '{...}'");
  std::vector<std::pair<std::string, IntervalSet>> out;
  std::string_view body = trim(text.substr(1, text.size() - 2));
  if (body.empty()) return out;
  for (auto part : split_top_level(body)) {
    auto colon = part.find(':');
    if (colon == std::string_view::npos) throw domain_error("expected 'label: set' in '" + std::string(part) + "'");
    out.emplace_back(std::string(trim(part.substr(0, colon))), parse_interval_set(part.substr(colon + 1)));
  }
  return out;
}

}  // namespace detail

inline RandomSimplex parse_random_simplex(std::string_view text) {
  auto entries = detail::parse_labeled_sets(text);
  std::vector<IntervalSet> classes;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first != std::to_string(i)) throw domain_error("class labels must be 0,1,2,... in order");
    classes.push_back(std::move(entries[i].second));
  }
  return RandomSimplex(std::move(classes));
}

inline ProbVector parse_prob_vector(std::string_view text) {
  text = detail::trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw domain_error("expected '(...)'");
  std::vector<Rational> x;
  for (auto part : detail::split_top_level(text.substr(1, text.size() - 2))) x.push_back(parse_rational(detail::trim(part)));
  return ProbVector(std::move(x));
}

}  // namespace randotop
