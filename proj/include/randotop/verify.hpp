#pragma once

// Seeded property suites over every module. Each trial draws from its own
// sub-seed, so a report depends only on (seed, trials, suite, max_n, max_denominator).

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "randotop/chain.hpp"
#include "randotop/complex.hpp"
#include "randotop/cylinders.hpp"
#include "randotop/homotopies.hpp"
#include "randotop/interval_set.hpp"
#include "randotop/json_io.hpp"
#include "randotop/measure_maps.hpp"
#include "randotop/monotone_map.hpp"
#include "randotop/random_simplex.hpp"
#include "randotop/rational.hpp"
#include "randotop/sampling.hpp"
#include "randotop/simplicial_sets.hpp"

namespace randotop {

struct Failure {
  std::uint64_t seed = 0;
  std::string check;
  std::string inputs;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string suite;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // the first few, in trial order
  std::optional<Rational> max_slack;  // max of (lhs − bound) over inequality checks
  std::vector<std::pair<std::string, std::string>> notes;
  long runtime_ms = 0;

  bool passed() const { return failure_count == 0; }
};

struct VerifyOptions {
  std::size_t trials = 0;  // 0: the suite's own default
  std::uint64_t seed = 1;
  std::size_t max_n = 4;
  long max_denominator = 64;
};

namespace detail {

inline std::string describe(bool b) { return b ? "true" : "false"; }

inline std::string describe(const Chain& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (i) out += "; ";
    out += to_string(x.sets()[i]);
  }
  return out + ")";
}

inline std::string describe(const MonotoneMap& s) {
  std::string out = "[";
  for (std::size_t j = 0; j <= s.source(); ++j) {
    if (j) out += ",";
    out += std::to_string(s(j));
  }
  return out + "]→[" + std::to_string(s.target()) + "]";
}

template <typename T>
std::string describe(const T& v) {
  using randotop::to_string;
  using std::to_string;
  return to_string(v);
}

template <typename A, typename B>
std::string describe(const std::pair<A, B>& p) {
  return "(" + describe(p.first) + ", " + describe(p.second) + ")";
}

}  // namespace detail

class SuiteRun {
 public:
  static constexpr std::size_t kMaxRecorded = 10;

  SuiteRun(std::string suite, const VerifyOptions& opt) : opt_(opt), start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
  }

  const VerifyOptions& options() const { return opt_; }
  std::size_t trials_or(std::size_t fallback) const { return opt_.trials ? opt_.trials : fallback; }

  // Runs body(sampler) count times; an exception inside a trial is a failure of that trial.
  template <typename Body>
  void trials(std::string_view tag, std::size_t count, Body&& body) {
    for (std::size_t t = 0; t < count; ++t) {
      seed_ = sub_seed(opt_.seed, report_.suite + "/" + std::string(tag), t);
      Sampler s(seed_, opt_.max_denominator);
      ++report_.trials;
      try {
        body(s);
      } catch (const std::exception& e) {
        record(std::string(tag) + ": exception", "", "no exception", e.what());
      }
    }
  }

  template <typename In>
  bool holds(std::string_view what, bool ok, In&& inputs) {
    ++report_.checks;
    if (!ok) record(what, inputs(), "true", "false");
    return ok;
  }

  template <typename A, typename B, typename In>
  bool equal(std::string_view what, const A& got, const B& expected, In&& inputs) {
    ++report_.checks;
    const bool ok = got == expected;
    if (!ok) record(what, inputs(), detail::describe(expected), detail::describe(got));
    return ok;
  }

  template <typename In>
  bool at_most(std::string_view what, const Rational& lhs, const Rational& bound, In&& inputs) {
    ++report_.checks;
    Rational slack = lhs - bound;
    if (!report_.max_slack || slack > *report_.max_slack) report_.max_slack = slack;
    const bool ok = lhs <= bound;
    if (!ok) record(what, inputs(), "≤ " + to_string(bound), to_string(lhs));
    return ok;
  }

  void fail(std::string_view what, std::string inputs, std::string expected, std::string got) {
    ++report_.checks;
    record(what, std::move(inputs), std::move(expected), std::move(got));
  }

  void note(std::string key, std::string value) { report_.notes.emplace_back(std::move(key), std::move(value)); }

  VerificationReport finish() {
    report_.runtime_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
    return std::move(report_);
  }

 private:
  void record(std::string_view what, std::string inputs, std::string expected, std::string got) {
    ++report_.failure_count;
    if (report_.failures.size() < kMaxRecorded) {
      report_.failures.push_back({seed_, std::string(what), std::move(inputs), std::move(expected), std::move(got)});
    }
  }

  VerifyOptions opt_;
  VerificationReport report_;
  std::uint64_t seed_ = 0;
  std::chrono::steady_clock::time_point start_;
};

namespace suites {

inline std::vector<Rational> u_grid(long steps = 20) {
  std::vector<Rational> g;
  for (long k = 0; k <= steps; ++k) g.push_back(rat(k, steps));
  return g;
}

// Points of ∇ₙ together with a nearby point, or an unrelated one.
inline std::pair<RandomSimplex, RandomSimplex> close_pair(Sampler& s, std::size_t n) {
  RandomSimplex f = s.random_simplex_mixed(n);
  if (s.coin(0.2)) return {f, s.random_simplex_mixed(n)};
  RandomSimplex g = s.nearby(f);
  if (s.coin()) g = s.nearby(g);
  return {f, g};
}

// Two cylinder points over [n] built from nearby chains, usually on the same stratum.
inline std::pair<CylinderPoint, CylinderPoint> close_cylinders(Sampler& s, std::size_t n) {
  auto [p, p0] = close_pair(s, n + 1);
  std::size_t r = s.index(n);
  std::size_t r0 = s.coin(0.8) ? r : s.index(n);
  return {d_chain_inverse(to_chain(p), r), d_chain_inverse(to_chain(p0), r0)};
}

inline Rational chain_distance(const Chain& x, const Chain& y) {
  Rational d = 0;
  for (std::size_t i = 0; i < x.length(); ++i) d = std::max(d, symmdiff(x.sets()[i], y.sets()[i]).measure());
  return d;
}

inline VerificationReport g_properties(const VerifyOptions& opt) {
  SuiteRun run("g-properties", opt);
  run.trials("sample", run.trials_or(10000), [&](Sampler& s) {
    IntervalSet a = s.interval_set();
    IntervalSet e = s.interval_set();
    IntervalSet f = s.coin() ? s.perturb(e) : s.interval_set();
    Rational u = s.parameter();
    Rational v = s.parameter();
    auto in = [&] {
      return "A=" + to_string(a) + " E=" + to_string(e) + " F=" + to_string(f) + " u=" + to_string(u) +
             " v=" + to_string(v);
    };
    IntervalSet gu = g_map(a, u);
    run.equal("λ(g(A,u)) = λ(A)(1−u)", gu.measure(), Rational(a.measure() * (1 - u)), in);
    run.holds("g(A,u) ⊆ A", is_subset(gu, a), in);
    const Rational& lo = u <= v ? u : v;
    const Rational& hi = u <= v ? v : u;
    run.holds("g(A,max) ⊆ g(A,min)", is_subset(g_map(a, hi), g_map(a, lo)), in);
    run.equal("g(Ω_v,u) = [uv,v)", g_map(exhaustion(v), u), IntervalSet::interval(u * v, v), in);
    run.equal("ǧ(ǧ(A,u),v) = ǧ(A,uv)", g_check(g_check(a, u), v), g_check(a, u * v), in);
    run.equal("λ(ǧ(A,u)) = uλ(A)", g_check(a, u).measure(), Rational(u * a.measure()), in);
    Rational d = v - u;
    run.at_most("λ(g(E,u)Δg(F,v)) ≤ 4λ(EΔF)+|v−u|", symmdiff(g_map(e, u), g_map(f, v)).measure(),
                4 * symmdiff(e, f).measure() + abs(d), in);
  });
  return run.finish();
}

inline VerificationReport h_phi_j(const VerifyOptions& opt) {
  SuiteRun run("h-phi-j", opt);
  run.trials("h", run.trials_or(10000), [&](Sampler& s) {
    IntervalSet a = s.interval_set();
    IntervalSet e = s.interval_set();
    IntervalSet f = s.coin() ? s.perturb(e) : s.interval_set();
    Rational u = s.parameter();
    Rational v = s.parameter();
    auto in = [&] {
      return "A=" + to_string(a) + " E=" + to_string(e) + " F=" + to_string(f) + " u=" + to_string(u) +
             " v=" + to_string(v);
    };
    IntervalSet hu = h_map(a, u);
    run.equal("λ(h(A,u)) = u+(1−u)λ(A)", hu.measure(), Rational(u + (1 - u) * a.measure()), in);
    run.holds("A ⊆ h(A,u)", is_subset(a, hu), in);
    const Rational& lo = u <= v ? u : v;
    const Rational& hi = u <= v ? v : u;
    run.holds("h(A,min) ⊆ h(A,max)", is_subset(h_map(a, lo), h_map(a, hi)), in);
    Rational d = v - u;
    run.at_most("λ(h(E,u)Δh(F,v)) ≤ 4λ(EΔF)+|v−u|", symmdiff(h_map(e, u), h_map(f, v)).measure(),
                4 * symmdiff(e, f).measure() + abs(d), in);
  });
  run.trials("phi", run.trials_or(10000), [&](Sampler& s) {
    IntervalSet e = s.interval_set();
    IntervalSet a = s.coin(0.2) ? e : s.interval_set();
    Rational q = s.parameter();
    auto in = [&] { return "q=" + to_string(q) + " E=" + to_string(e) + " A=" + to_string(a); };
    IntervalSet b = phi_pointwise(q, e, a);
    run.holds("Φ ⊆ E", is_subset(b, e), in);
    run.equal("λ(Φ) = qλ(E)", b.measure(), Rational(q * e.measure()), in);
    IntervalSet inside = intersect(a, e);
    if (q * e.measure() <= inside.measure()) {
      run.holds("Φ ⊆ A∩E below λ(A∩E)", is_subset(b, inside), in);
    } else {
      run.holds("A∩E ⊆ Φ above λ(A∩E)", is_subset(inside, b), in);
    }
  });
  run.trials("J", run.trials_or(10000), [&](Sampler& s) {
    std::size_t n = s.index(opt.max_n + 1);
    auto [f, f2] = close_pair(s, n);
    Chain x = to_chain(f);
    Chain x2 = to_chain(f2);
    Rational c = s.parameter();
    Rational c2 = s.coin() ? c : s.parameter();
    auto in = [&] {
      return "X=" + detail::describe(x) + " X'=" + detail::describe(x2) + " c=" + to_string(c) +
             " c'=" + to_string(c2);
    };
    IntervalSet y = interpolate_chain(x, c);
    run.equal("λ(J(X,c)) = c", y.measure(), c, in);
    for (std::size_t k = 1; k <= x.length(); ++k) {
      const IntervalSet& xk = x.sets()[k - 1];
      if (xk.measure() <= c) run.holds("X_k ⊆ J when λ(X_k) ≤ c", is_subset(xk, y), in);
      if (xk.measure() >= c) run.holds("J ⊆ X_k when λ(X_k) ≥ c", is_subset(y, xk), in);
    }
    const Rational& lo = c <= c2 ? c : c2;
    const Rational& hi = c <= c2 ? c2 : c;
    run.holds("J(X,min) ⊆ J(X,max)", is_subset(interpolate_chain(x, lo), interpolate_chain(x, hi)), in);
    Rational d = c2 - c;
    run.at_most("λ(J(X,c)ΔJ(X',c')) ≤ |c−c'|+4·max λ(X_iΔX_i')",
                symmdiff(y, interpolate_chain(x2, c2)).measure(), abs(d) + 4 * chain_distance(x, x2), in);
  });
  return run.finish();
}

inline VerificationReport homotopy_endpoints(const VerifyOptions& opt) {
  SuiteRun run("homotopy-endpoints", opt);
  const auto grid = u_grid();
  for (std::size_t n = 0; n <= opt.max_n; ++n) {
    run.trials("n=" + std::to_string(n), run.trials_or(200), [&](Sampler& s) {
      RandomSimplex f = s.random_simplex_mixed(n);
      ProbVector alpha = law(f);
      RandomSimplex sec = section(alpha);
      auto in = [&] { return "f=" + to_string(f); };
      run.equal("H(0,f) = f", homotopy_H(0, f), f, in);
      run.equal("H(1,f) = section(law(f))", homotopy_H(1, f), sec, in);
      for (const auto& u : grid) {
        auto inu = [&] { return "f=" + to_string(f) + " u=" + to_string(u); };
        run.equal("law(H(u,f)) = law(f)", law(homotopy_H(u, f)), alpha, inu);
        run.equal("H(u,section(α)) = section(α)", homotopy_H(u, sec), sec, inu);
      }
    });
  }
  return run.finish();
}

inline VerificationReport face_equivariance(const VerifyOptions& opt) {
  SuiteRun run("face-equivariance", opt);
  const auto grid = u_grid();
  const std::size_t top = std::min<std::size_t>(opt.max_n, 3);
  for (std::size_t n = 0; n <= top; ++n) {
    for (std::size_t i = 0; i <= n + 1; ++i) {
      run.trials("n=" + std::to_string(n) + ",i=" + std::to_string(i), run.trials_or(100), [&](Sampler& s) {
        RandomSimplex f = s.random_simplex_mixed(n);
        for (const auto& u : grid) {
          run.equal("H(u,face(i,f)) = face(i,H(u,f))", homotopy_H(u, face(i, f)), face(i, homotopy_H(u, f)), [&] {
            return "i=" + std::to_string(i) + " u=" + to_string(u) + " f=" + to_string(f);
          });
        }
      });
    }
  }
  return run.finish();
}

// The point of ∇₂ sending [2/3,1) to 0, [1/3,2/3) to 1 and [0,1/3) to 2.
inline RandomSimplex degeneracy_witness_point() {
  return RandomSimplex({IntervalSet::interval(rat(2, 3), 1), IntervalSet::interval(rat(1, 3), rat(2, 3)),
                        IntervalSet::interval(0, rat(1, 3))});
}

inline VerificationReport degeneracy_counterexample(const VerifyOptions& opt) {
  SuiteRun run("degeneracy-counterexample", opt);
  const RandomSimplex f = degeneracy_witness_point();
  run.note("f", to_string(f));
  std::size_t witnesses = 0;
  run.trials("grid", 1, [&](Sampler&) {
    for (std::size_t i = 0; i < f.dim(); ++i) {
      for (const auto& u : u_grid()) {
        RandomSimplex lhs = degeneracy(i, homotopy_H(u, f));
        RandomSimplex rhs = homotopy_H(u, degeneracy(i, f));
        if (lhs == rhs) continue;
        if (witnesses++ == 0) {
          run.note("i", std::to_string(i));
          run.note("u", to_string(u));
          run.note("degeneracy(i,H2(u,f))", to_string(lhs));
          run.note("H1(u,degeneracy(i,f))", to_string(rhs));
        }
      }
    }
  });
  run.note("witnesses", std::to_string(witnesses));
  run.holds("a grid point (i,u) breaks degeneracy equivariance", witnesses > 0, [&] { return "f=" + to_string(f); });
  return run.finish();
}

inline bool in_horn(const RandomSimplex& g, std::size_t k) {
  for (std::size_t i = 0; i <= g.dim(); ++i) {
    if (i != k && g[i].empty()) return true;
  }
  return false;
}

inline VerificationReport horn(const VerifyOptions& opt) {
  SuiteRun run("horn", opt);
  const std::size_t top = std::max<std::size_t>(opt.max_n, 1);
  run.trials("retract", run.trials_or(1000), [&](Sampler& s) {
    std::size_t n = 1 + s.index(top - 1);
    std::size_t k = s.index(n);
    RandomSimplex f = s.random_simplex_mixed(n);
    auto in = [&] { return "k=" + std::to_string(k) + " f=" + to_string(f); };
    RandomSimplex g = horn_retract(f, k);
    run.holds("horn_retract lands in the horn", in_horn(g, k), in);
    run.equal("horn_retract idempotent", horn_retract(g, k), g, in);
    run.equal("law∘horn_retract = horn_law_retract∘law", law(g), horn_law_retract(law(f), k), in);
    std::size_t i = s.index(n - 1);
    if (i >= k) ++i;
    RandomSimplex h = face(i, s.random_simplex_mixed(n - 1));
    run.equal("horn_retract fixes the horn", horn_retract(h, k), h,
              [&] { return "k=" + std::to_string(k) + " h=" + to_string(h); });
  });
  // Families z_i = Z∘dᵢ are compatible by construction; the filler must restrict back to them.
  const std::size_t filler_top = std::min<std::size_t>(top, 3);
  for (std::size_t n = 1; n <= filler_top; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      std::map<std::size_t, HornFiller<RandomSimplex>::FaceMap> zh;
      std::map<std::size_t, HornFiller<ProbVector>::FaceMap> zl;
      for (std::size_t i = 0; i <= n; ++i) {
        if (i == k) continue;
        zh[i] = [i](const RandomSimplex& g) { return homotopy_H(rat(1, 3), face(i, g)); };
        zl[i] = [i](const RandomSimplex& g) { return law(face(i, g)); };
      }
      HornFiller<RandomSimplex> fill_h(n, k, zh);
      HornFiller<ProbVector> fill_l(n, k, zl);
      run.trials("filler n=" + std::to_string(n) + ",k=" + std::to_string(k), run.trials_or(1000) / 10 + 1,
                 [&](Sampler& s) {
                   RandomSimplex g = s.random_simplex_mixed(n - 1);
                   for (std::size_t i = 0; i <= n; ++i) {
                     if (i == k) continue;
                     auto in = [&] { return "k=" + std::to_string(k) + " i=" + std::to_string(i) + " g=" + to_string(g); };
                     run.equal("filler∘dᵢ = z_i (H)", fill_h(face(i, g)), zh.at(i)(g), in);
                     run.equal("filler∘dᵢ = z_i (law)", fill_l(face(i, g)), zl.at(i)(g), in);
                   }
                   RandomSimplex f = s.random_simplex_mixed(n);
                   run.equal("law filler = law∘retract", fill_l(f), horn_law_retract(law(f), k),
                             [&] { return "k=" + std::to_string(k) + " f=" + to_string(f); });
                 });
    }
  }
  return run.finish();
}

inline VerificationReport retracts(const VerifyOptions& opt) {
  SuiteRun run("retracts", opt);
  const std::size_t top = std::max<std::size_t>(opt.max_n, 1);
  const std::size_t count = run.trials_or(1000);
  run.trials("psi", count, [&](Sampler& s) {
    std::size_t n = s.index(top);
    RandomSimplex f = s.random_simplex_mixed(n);
    Rational a = s.parameter();
    auto in = [&] { return "f=" + to_string(f) + " a=" + to_string(a); };
    auto [g, a2] = boundary_retract_psi(f, a);
    run.equal("Ψ(f,0) = (f,0)", boundary_retract_psi(f, 0), std::make_pair(f, Rational(0)), in);
    if (!is_interior(f)) run.equal("Ψ is the identity on ∂∇ₙ×I", std::make_pair(g, a2), std::make_pair(f, a), in);
    run.holds("Ψ lands in (∇ₙ×{0}) ∪ (∂∇ₙ×I)", a2 == 0 || !is_interior(g), in);
    auto [beta, b2] = simplex_cyl_retract(law(f), a);
    run.equal("law of Ψ = retract of the law", std::make_pair(law(g), a2), std::make_pair(beta, b2), in);
  });
  run.trials("vnr-deformation", count, [&](Sampler& s) {
    std::size_t n = 1 + s.index(top - 1);
    std::size_t r = s.index(n);
    RandomSimplex f = s.random_simplex_mixed(n);
    Rational t = s.parameter();
    auto in = [&] { return "r=" + std::to_string(r) + " t=" + to_string(t) + " f=" + to_string(f); };
    run.equal("H(f,0) = f", vnr_deformation(f, 0, r), f, in);
    run.holds("H(f,1) ∈ Vₙʳ", in_horn(vnr_deformation(f, 1, r), r), in);
    RandomSimplex b = vnr_deformation(f, t, r);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == r) continue;
      Rational m = 1;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j != i && j != r && f[j].measure() < m) m = f[j].measure();
      }
      Rational take = t * m < f[i].measure() ? Rational(t * m) : f[i].measure();
      run.holds("B_i ⊆ A_i", is_subset(b[i], f[i]), in);
      run.equal("λ(B_i) = λ(A_i) − min(t·m_i, λ(A_i))", b[i].measure(), Rational(f[i].measure() - take), in);
    }
    std::size_t i = s.index(n - 1);
    if (i >= r) ++i;
    RandomSimplex v = face(i, s.random_simplex_mixed(n - 1));
    run.equal("H fixes Vₙʳ", vnr_deformation(v, t, r), v,
              [&] { return "r=" + std::to_string(r) + " t=" + to_string(t) + " f=" + to_string(v); });
  });
  run.trials("vnr-cofibration", count, [&](Sampler& s) {
    std::size_t n = 1 + s.index(top - 1);
    std::size_t r = s.index(n);
    RandomSimplex f = s.random_simplex_mixed(n);
    Rational u = s.parameter();
    auto in = [&] { return "r=" + std::to_string(r) + " u=" + to_string(u) + " f=" + to_string(f); };
    run.equal("H(f,0) = (f,0)", vnr_cofibration_retract(f, 0, r), std::make_pair(f, Rational(0)), in);
    auto [b, u2] = vnr_cofibration_retract(f, u, r);
    Rational m = 1;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i != r && f[i].measure() < m) m = f[i].measure();
    }
    run.equal("u' = max(u−m,0)", u2, u >= m ? Rational(u - m) : Rational(0), in);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == r) continue;
      run.equal("λ(B_i) = λ(A_i) − min(u,m)", b[i].measure(), Rational(f[i].measure() - (u < m ? u : m)), in);
    }
    run.holds("lands in (∇ₙ×{0}) ∪ (Vₙʳ×I)", u2 == 0 || in_horn(b, r), in);
    std::size_t i = s.index(n - 1);
    if (i >= r) ++i;
    RandomSimplex v = face(i, s.random_simplex_mixed(n - 1));
    run.equal("identity on Vₙʳ×I", vnr_cofibration_retract(v, u, r), std::make_pair(v, u),
              [&] { return "r=" + std::to_string(r) + " u=" + to_string(u) + " f=" + to_string(v); });
  });
  run.trials("cylinder-cofibration", count, [&](Sampler& s) {
    std::size_t n = s.index(top);
    CylinderPoint f = s.cylinder(n);
    if (s.coin(0.1)) f = tau_plus(f);
    if (s.coin(0.1)) f = tau_minus(f);
    Rational u = s.parameter();
    auto in = [&] { return "f=" + to_string(f) + " u=" + to_string(u); };
    auto [g, u2] = cyl_cofibration_retract(f, u);
    const Rational y = f.minus_mass();
    if (u2 > 0) {
      const bool plus_end = g == tau_plus(f) && g.minus_mass() == 0;
      const bool minus_end = g == tau_minus(f) && g.minus_mass() == 1;
      run.holds("u' > 0 ⇒ result is τ₊(f) or τ₋(f)", plus_end || minus_end, in);
    } else {
      run.equal("u' = 0 ⇒ result in L(K×I)×{0}", u2, Rational(0), in);
    }
    run.equal("u = 0 ⇒ (f,0)", cyl_cofibration_retract(f, 0), std::make_pair(f, Rational(0)), in);
    if (y == 0) run.equal("y = 0 ⇒ (f,u)", std::make_pair(g, u2), std::make_pair(f, u), in);
    if (y == 1) run.equal("y = 1 ⇒ (f,u)", std::make_pair(g, u2), std::make_pair(f, u), in);
    run.equal("π∘G₊ = π", cyl_project(g_plus(f, u)), cyl_project(f), in);
    run.equal("π∘G₋ = π", cyl_project(g_minus(f, u)), cyl_project(f), in);
  });
  std::size_t lift_pairs = 0;
  std::size_t lift_over_two = 0;
  run.trials("lift-and-G-continuity", count, [&](Sampler& s) {
    std::size_t n = s.index(top);
    auto [f, f2] = close_pair(s, n);
    ProbVector beta = s.prob_vector(n);
    ProbVector beta2 = s.coin() ? beta : s.prob_vector(n);
    auto in = [&] {
      return "f=" + to_string(f) + " f'=" + to_string(f2) + " β=" + to_string(beta) + " β'=" + to_string(beta2);
    };
    RandomSimplex l = lift_law_target(f, beta);
    run.equal("law(lift(f,β)) = β", law(l), beta, in);
    run.equal("lift(f,law f) = f", lift_law_target(f, law(f)), f, in);
    Rational db = 0;
    for (std::size_t i = 0; i <= n; ++i) db += abs(Rational(beta[i] - beta2[i]));
    RandomSimplex l2 = lift_law_target(f2, beta2);
    const Rational d = rv_distance(l, l2);
    const Rational dx = chain_distance(to_chain(f), to_chain(f2));
    // each level of the lift is one J evaluation, so J's estimate bounds it; the lifts differ only where some level does
    Chain y = to_chain(l);
    Chain y2 = to_chain(l2);
    std::vector<Rational> b = beta.cumulative();
    std::vector<Rational> b2 = beta2.cumulative();
    Rational level_sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Rational lk = symmdiff(y.sets()[k], y2.sets()[k]).measure();
      level_sum += lk;
      Rational dc = b[k] - b2[k];
      run.at_most("λ(Y_kΔY_k') ≤ |b_k−b_k'| + 4·d(X,X')", lk, abs(dc) + 4 * dx, in);
    }
    run.at_most("d(lift,lift') ≤ Σ_k λ(Y_kΔY_k')", d, level_sum, in);
    ++lift_pairs;
    if (d > 2 * dx + db) ++lift_over_two;
    auto [c, c0] = close_cylinders(s, n);
    Rational t = s.parameter();
    Rational t0 = s.coin() ? t : s.parameter();
    auto inc = [&] {
      return "f=" + to_string(c) + " f0=" + to_string(c0) + " c=" + to_string(t) + " c0=" + to_string(t0);
    };
    Rational jj = symmdiff(interpolate_chain(d_chain(c), t), interpolate_chain(d_chain(c0), t0)).measure();
    Rational bound = jj + 2 * cyl_distance(c, c0);
    run.at_most("d(G₊(f,c),G₊(f0,c0)) ≤ λ(JΔJ0) + 2d(f,f0)", cyl_distance(g_plus(c, t), g_plus(c0, t0)), bound, inc);
    run.at_most("d(G₋(f,c),G₋(f0,c0)) ≤ λ(JΔJ0) + 2d(f,f0)", cyl_distance(g_minus(c, t), g_minus(c0, t0)), bound, inc);
  });
  // d(lift,lift') ≤ 2·d(X,X') + Σ|Δβ| is not implied by J's estimate and fails on samples; counted, not asserted
  run.note("lift pairs over 2·d(X,X')+Σ|Δβ|", std::to_string(lift_over_two) + " of " + std::to_string(lift_pairs));
  return run.finish();
}

inline VerificationReport cylinders(const VerifyOptions& opt) {
  SuiteRun run("cylinders", opt);
  const std::size_t count = run.trials_or(10000);
  run.trials("homotopy", count / 10 + 1, [&](Sampler& s) {
    std::size_t n = s.index(opt.max_n);
    CylinderPoint f = s.cylinder(n);
    auto in = [&] { return "f=" + to_string(f); };
    for (std::size_t p = 1; p <= n; ++p) {
      Rational t = rat(static_cast<long>(p), static_cast<long>(n + 1));
      run.equal("seam at t = p/(n+1)", cyl_homotopy_piece(f, t, p), cyl_homotopy_piece(f, t, p - 1),
                [&] { return "f=" + to_string(f) + " t=" + to_string(t); });
    }
    run.equal("H(f,0) = f", cyl_homotopy(f, 0), f, in);
    run.equal("H(f,1) = section∘project", cyl_homotopy(f, 1), cyl_section(cyl_project(f)), in);
    Rational t = s.parameter();
    auto int_ = [&] { return "f=" + to_string(f) + " t=" + to_string(t); };
    run.equal("project∘H = project", cyl_project(cyl_homotopy(f, t)), cyl_project(f), int_);
    run.equal("pointed H(f,0) = f", pointed_homotopy(f, 0), f, in);
    CylinderPoint ph = pointed_homotopy(f, t);
    bool rest_fixed = true;
    for (std::size_t j = 1; j <= n; ++j) rest_fixed = rest_fixed && ph.minus(j) == f.minus(j) && ph.plus(j) == f.plus(j);
    run.holds("pointed H leaves classes j ≥ 1 alone", rest_fixed, int_);
    run.equal("pointed H fixes the base point", pointed_section(cyl_section(section(ProbVector::vertex(n, 0)))),
              cyl_section(section(ProbVector::vertex(n, 0))), in);
    std::vector<IntervalSet> l0(2 * (n + 1));
    IntervalSet cut = IntervalSet::interval(0, t);
    l0[0] = cut;
    l0[1] = complement(cut);
    CylinderPoint g(l0);
    CylinderPoint pg = pointed_section(g);
    run.holds("pointed section maps L₀ to the base point", pg.minus(0) == IntervalSet::unit(), int_);
    for (std::size_t r = 0; r <= n; ++r) {
      if (f.in_stratum(r)) {
        run.equal("d_chain agrees on each stratum", d_chain(f), d_chain_on_stratum(f, r), in);
        run.equal("d_chain_inverse∘d_chain = id on a stratum", d_chain_inverse(d_chain(f), r), f, in);
      }
    }
    SimplicialComplex k = s.complex(n);
    CylinderPoint fk = s.cylinder_in(k);
    auto ink = [&] { return "K=" + Json(to_json(k)).dump() + " f=" + to_string(fk) + " t=" + to_string(t); };
    run.holds("K-membership kept by H", in_complex(cyl_homotopy(fk, t), k), ink);
    run.holds("K-membership kept by the pointed H", in_complex(pointed_homotopy(fk, t), k), ink);
    run.holds("K-membership kept by G₊", in_complex(g_plus(fk, t), k), ink);
    run.holds("K-membership kept by G₋", in_complex(g_minus(fk, t), k), ink);
    run.holds("K-membership kept by the retract", in_complex(cyl_cofibration_retract(fk, t).first, k), ink);
  });
  run.trials("d-chain-lipschitz", count, [&](Sampler& s) {
    std::size_t n = s.index(opt.max_n);
    auto [f, g] = close_cylinders(s, n);
    run.at_most("max λ(X_iΔX_i') ≤ 2·d(f,f')", chain_distance(d_chain(f), d_chain(g)), 2 * cyl_distance(f, g),
                [&] { return "f=" + to_string(f) + " f'=" + to_string(g); });
  });
  return run.finish();
}

inline VerificationReport simplicial_sets(const VerifyOptions& opt) {
  SuiteRun run("simplicial-sets", opt);
  const std::size_t count = run.trials_or(1000);
  const std::size_t top = std::min<std::size_t>(opt.max_n, 4);
  run.trials("relation-chains", count, [&](Sampler& s) {
    SimplicialComplex k = s.complex(s.index(top));
    SimplexTuple beta = s.tuple_in(k, top);
    RandomSimplex b = s.random_simplex_mixed(beta.dim());
    CanonicalPoint p = minimal_representative(beta, b);
    auto in = [&] { return "β=" + to_string(beta) + " b=" + to_string(b); };
    run.equal("minimal_representative idempotent", minimal_representative(p.simplex, p.coords), p, in);
    run.holds("canonical simplex nondegenerate, point interior", p.simplex.nondegenerate() && is_interior(p.coords), in);
    SimplexTuple x = beta;
    RandomSimplex a = b;
    std::size_t length = 1 + s.index(4);
    for (std::size_t step = 0; step < length; ++step) {
      std::tie(x, a) = s.relation_step(k, x, a, top);
      run.equal("constant on relation chains", minimal_representative(x, a), p,
                [&] { return "β=" + to_string(beta) + " b=" + to_string(b) + " x=" + to_string(x) + " a=" + to_string(a); });
    }
  });
  run.trials("ez-enumeration", 1, [&](Sampler&) {
    const std::size_t vmax = 4;
    for (std::size_t len = 1; len <= 6; ++len) {
      for (const auto& t : enumerate_monotone(len - 1, vmax)) {
        SimplexTuple tuple(t.values());
        std::size_t count_fact = 0;
        for (std::size_t d = 0; d <= std::min(len - 1, vmax); ++d) {
          for (const auto& alpha : enumerate_monotone(d, vmax)) {
            if (!alpha.injective()) continue;
            for (const auto& sur : enumerate_monotone(len - 1, d)) {
              if (sur.surjective() && act_tuple(sur, SimplexTuple(alpha.values())) == tuple) ++count_fact;
            }
          }
        }
        auto in = [&] { return "x=" + to_string(tuple); };
        run.equal("exactly one factorization", count_fact, std::size_t{1}, in);
        auto [alpha, sur] = ez_decompose(tuple);
        run.holds("ez_decompose returns it", alpha.nondegenerate() && sur.surjective() && act_tuple(sur, alpha) == tuple,
                  in);
      }
    }
  });
  run.trials("sk-equals-mk", count, [&](Sampler& s) {
    SimplicialComplex k = s.complex(s.index(4));
    SimplexTuple alpha = s.tuple_in(k, 0);
    RandomSimplex b = s.random_simplex_mixed(alpha.dim());
    auto in = [&] { return "K=" + Json(to_json(k)).dump() + " α=" + to_string(alpha) + " b=" + to_string(b); };
    CanonicalPoint sk = face_only_reduce(alpha, b);
    run.equal("face-only reduction = full reduction", sk, minimal_representative(alpha, b), in);
    run.holds("canonical pair lies in K", sk.simplex.in(k), in);
    run.equal("canonical pairs are fixed by the face-only reduction", face_only_reduce(sk.simplex, sk.coords), sk, in);
  });
  run.trials("sk-injective", 1, [&](Sampler&) {
    // distinct nondegenerate simplices with interior points give distinct canonical pairs
    SimplicialComplex k = SimplicialComplex::full_simplex(4);
    std::set<std::pair<std::vector<std::size_t>, std::string>> seen;
    std::size_t made = 0;
    for (const auto& face : k.faces()) {
      RandomSimplex a = section(ProbVector::uniform(face.size() - 1));
      CanonicalPoint p = face_only_reduce(SimplexTuple(face), a);
      seen.insert({p.simplex.vertices(), to_string(p.coords)});
      ++made;
    }
    run.equal("canonical pairs of nondegenerate interior points are distinct", seen.size(), made, [] { return "K=Δ4"; });
  });
  run.trials("law-naturality", count, [&](Sampler& s) {
    SimplicialComplex k = s.complex(s.index(top));
    SimplexTuple beta = s.tuple_in(k, top);
    RandomSimplex b = s.random_simplex_mixed(beta.dim());
    auto in = [&] { return "β=" + to_string(beta) + " b=" + to_string(b); };
    run.equal("law_point commutes with reduction", law_point(minimal_representative(beta, b)),
              minimal_law_representative(beta, law(b)), in);
    std::vector<std::size_t> vm(k.vertex_count());
    std::size_t cur = 0;
    for (auto& v : vm) {
      if (s.coin(0.3)) ++cur;
      v = cur;
    }
    SimplicialMapSpec phi(k, SimplicialComplex::full_simplex(cur), vm);
    CanonicalPoint p = minimal_representative(beta, b);
    run.equal("law_point natural in φ", law_point(apply_map(phi, p)),
              minimal_law_representative(phi.apply(p.simplex), law(p.coords)), in);
  });
  run.trials("equalizer", 1, [&](Sampler& s) {
    SimplicialComplex k = SimplicialComplex::full_simplex(2);
    SimplicialMapSpec phi(k, k, {0, 1, 2});
    SimplicialMapSpec psi(k, k, {0, 1, 1});
    std::vector<std::pair<SimplexTuple, RandomSimplex>> pts;
    for (std::size_t i = 0; i < 200; ++i) {
      SimplexTuple beta = s.tuple_in(k, 4);
      pts.emplace_back(beta, s.random_simplex_mixed(beta.dim()));
    }
    auto in = [] { return "K=Δ2 φ=(0,1,2) ψ=(0,1,1)"; };
    run.holds("φ = φ passes everywhere", sset_equalizer_check(phi, phi, pts), in);
    run.holds("φ, ψ agree exactly on the equalizer", sset_equalizer_check(phi, psi, pts), in);
    CanonicalPoint away{SimplexTuple({0, 1}), section(ProbVector::uniform(1))};
    CanonicalPoint touching{SimplexTuple({1, 2}), section(ProbVector::uniform(1))};
    run.holds("points away from vertex 2 pass", apply_map(phi, away) == apply_map(psi, away), in);
    run.holds("points with 2 in the canonical simplex differ", !(apply_map(phi, touching) == apply_map(psi, touching)),
              in);
  });
  run.trials("product", count, [&](Sampler& s) {
    RandomSimplex q = s.random_simplex_mixed(2);
    // classes 00, one of 01/10, 11
    const bool use01 = s.coin();
    ProductPoint f(q[0], use01 ? q[1] : IntervalSet{}, use01 ? IntervalSet{} : q[1], q[2]);
    auto [u, v] = product_pair_projection(f);
    auto in = [&] { return "f=" + to_string(q) + (use01 ? " (01)" : " (10)"); };
    run.holds("projections are nested", nested(u, v), in);
    IntervalSet a = s.interval_set();
    IntervalSet b = s.interval_set();
    run.equal("image = nested pairs", has_preimage(a, b), has_preimage_brute(a, b),
              [&] { return "U=" + to_string(a) + " V=" + to_string(b); });
  });
  run.trials("product-counterexample", 1, [&](Sampler&) {
    IntervalSet u = IntervalSet::interval(0, rat(1, 2));
    IntervalSet v = IntervalSet::interval(rat(1, 4), rat(3, 4));
    auto in = [] { return "U=[0,1/2) V=[1/4,3/4)"; };
    run.holds("([0,1/2),[1/4,3/4)) has no preimage", !has_preimage(u, v) && !has_preimage_brute(u, v), in);
  });
  return run.finish();
}

inline VerificationReport naturality(const VerifyOptions& opt) {
  SuiteRun run("naturality", opt);
  const std::size_t top = std::min<std::size_t>(opt.max_n, 4);
  run.trials("sample", run.trials_or(1000), [&](Sampler& s) {
    std::size_t n = s.index(top);
    std::size_t m = s.index(top);
    std::size_t l = s.index(top);
    MonotoneMap sigma = s.monotone(m, n);
    MonotoneMap tau = s.monotone(l, m);
    auto [f, g] = close_pair(s, m);
    RandomSimplex h = s.random_simplex_mixed(l);
    auto in = [&] {
      return "σ=" + detail::describe(sigma) + " τ=" + detail::describe(tau) + " f=" + to_string(f) + " g=" + to_string(g) +
             " h=" + to_string(h);
    };
    run.equal("law∘∇(σ) = Δ(σ)∘law", law(pushforward(sigma, f)), law_pushforward(sigma, law(f)), in);
    run.equal("∇(σ∘τ) = ∇(σ)∇(τ)", pushforward(compose(sigma, tau), h), pushforward(sigma, pushforward(tau, h)), in);
    run.at_most("∇(σ) is 1-Lipschitz", rv_distance(pushforward(sigma, f), pushforward(sigma, g)), rv_distance(f, g), in);
    run.equal("from_chain∘to_chain = id", from_chain(to_chain(f)), f, in);
    Chain x = to_chain(g);
    run.equal("to_chain∘from_chain = id", to_chain(from_chain(x)), x, in);
    run.equal("to_chain∘∇(σ) = chain_action(σ)∘to_chain", to_chain(pushforward(sigma, f)), chain_action(sigma, to_chain(f)),
              in);
    RandomSimplex sec = section(law(f));
    run.equal("section∘law∘section = section", section(law(sec)), sec, in);
    if (m > 0) {
      RandomSimplex a = s.random_simplex(m, true);
      std::size_t i = s.index(m - 1);
      run.holds("degeneracies keep interior points interior", is_interior(degeneracy(i, a)),
                [&] { return "i=" + std::to_string(i) + " a=" + to_string(a); });
    }
  });
  run.trials("interior-rigidity", 1, [&](Sampler& s) {
    for (std::size_t m = 0; m <= top; ++m) {
      RandomSimplex a = s.random_simplex(m, true);
      RandomSimplex uni = section(ProbVector::uniform(m));
      for (std::size_t n = 0; n <= top; ++n) {
        auto maps = enumerate_monotone(m, n);
        for (const auto& point : {a, uni}) {
          std::set<std::string> images;
          for (const auto& sigma : maps) images.insert(to_string(pushforward(sigma, point)));
          run.equal("∇(σ).a determines σ", images.size(), maps.size(), [&] {
            return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " a=" + to_string(point);
          });
        }
      }
    }
  });
  return run.finish();
}

}  // namespace suites

using SuiteFn = VerificationReport (*)(const VerifyOptions&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> registry = {
      {"g-properties", suites::g_properties},
      {"h-phi-j", suites::h_phi_j},
      {"homotopy-endpoints", suites::homotopy_endpoints},
      {"face-equivariance", suites::face_equivariance},
      {"degeneracy-counterexample", suites::degeneracy_counterexample},
      {"horn", suites::horn},
      {"retracts", suites::retracts},
      {"cylinders", suites::cylinders},
      {"simplicial-sets", suites::simplicial_sets},
      {"naturality", suites::naturality},
  };
  return registry;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suite_registry()) out.push_back(name);
  return out;
}

// Expands "all" and rejects unknown names.
inline std::vector<std::string> resolve_suites(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  auto add = [&](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  for (const auto& name : requested) {
    if (name == "all") {
      for (const auto& known : suite_names()) add(known);
      continue;
    }
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw arity_error("unknown suite: " + name);
    add(name);
  }
  return out;
}

inline VerificationReport run_suite(const std::string& name, const VerifyOptions& opt) {
  for (const auto& [known, fn] : suite_registry()) {
    if (known == name) return fn(opt);
  }
  throw arity_error("unknown suite: " + name);
}

inline std::vector<VerificationReport> cmd_verify(const std::vector<std::string>& suites, const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  for (const auto& name : resolve_suites(suites)) out.push_back(run_suite(name, opt));
  return out;
}

inline Json to_json(const VerificationReport& r, bool timing = false) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"seed", f.seed}, {"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  }
  Json out = {{"suite", r.suite},
              {"passed", r.passed()},
              {"trials", r.trials},
              {"checks", r.checks},
              {"failure_count", r.failure_count},
              {"failures", failures},
              {"max_slack", r.max_slack ? Json(to_string(*r.max_slack)) : Json(nullptr)}};
  if (!r.notes.empty()) {
    Json notes = Json::object();
    for (const auto& [k, v] : r.notes) notes[k] = v;
    out["notes"] = notes;
  }
  if (timing) out["runtime_ms"] = r.runtime_ms;
  return out;
}

inline Json reports_to_json(const std::vector<VerificationReport>& reports, const VerifyOptions& opt, bool timing = false) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r, timing));
    all = all && r.passed();
  }
  Json options = {{"trials", opt.trials}, {"seed", opt.seed}, {"max_n", opt.max_n}, {"max_denominator", opt.max_denominator}};
  return {{"schema", kSchema}, {"options", options}, {"passed", all}, {"reports", list}};
}

inline std::string summary_line(const VerificationReport& r, bool timing = false) {
  std::string out = std::string(r.passed() ? "PASS" : "FAIL") + " " + r.suite + " trials=" + std::to_string(r.trials) +
                    " checks=" + std::to_string(r.checks) + " failures=" + std::to_string(r.failure_count);
  if (r.max_slack) out += " max_slack=" + to_string(*r.max_slack);
  if (timing) out += " runtime_ms=" + std::to_string(r.runtime_ms);
  return out;
}

}  // namespace randotop
