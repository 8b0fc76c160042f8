#include <gtest/gtest.h>

#include "randotop/homotopies.hpp"
#include "randotop/sampling.hpp"

using namespace randotop;

namespace {

IntervalSet S(const char* text) { return parse_interval_set(text); }
Rational Q(const char* text) { return parse_rational(text); }
RandomSimplex F(const char* text) { return parse_random_simplex(text); }
ProbVector P(const char* text) { return parse_prob_vector(text); }

// f([0,1/3)) = 2, f([1/3,2/3)) = 1, f([2/3,1)) = 0.
RandomSimplex reversed_uniform() { return F("{0: [2/3,1), 1: [1/3,2/3), 2: [0,1/3)}"); }

RandomSimplex four_class() { return F("{0: [0,1/8)∪[1/2,5/8), 1: [5/8,1), 2: [1/8,1/4), 3: [1/4,1/2)}"); }

}  // namespace

TEST(EChains, PinnedHalfway) {
  EChainFamily fam = build_E_chains(reversed_uniform(), Q("1/2"));
  EXPECT_EQ(fam.E(1), S("[1/2,5/6)"));
  EXPECT_EQ(fam.E(2), S("[0,1/6)∪[1/3,5/6)"));
  EXPECT_EQ(fam.omega[0], S("[1/2,5/6)"));
  EXPECT_EQ(fam.omega[1], S("[0,1/6)∪[1/3,1/2)"));
  EXPECT_EQ(fam.omega[2], S("[1/6,1/3)∪[5/6,1)"));
}

TEST(EChains, EndpointsAndSectionImage) {
  Sampler s(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + s.index(3);
    RandomSimplex f = s.random_simplex_mixed(n);
    EChainFamily zero = build_E_chains(f, 0);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(zero.omega[k], f[k]);
    EChainFamily one = build_E_chains(f, 1);
    EXPECT_EQ(one.omega[n], IntervalSet::interval(1 - f[n].measure(), Rational(1)));
    Rational u = s.unit_rational();
    EChainFamily mid = build_E_chains(f, u);
    std::vector<Rational> x = law(f).cumulative();
    for (std::size_t k = 1; k <= n; ++k) {
      EXPECT_EQ(mid.E(k).measure(), x[k - 1]);
      if (k > 1) {
        EXPECT_TRUE(is_subset(mid.E(k - 1), mid.E(k)));
      }
    }
    EChainFamily sec = build_E_chains(section(law(f)), u);
    for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(sec.E(k), exhaustion(x[k - 1]));
  }
  EXPECT_THROW(build_E_chains(F("{0: [0,1)}"), Q("1/2")), domain_error);
}

TEST(HomotopyH, PinnedValues) {
  RandomSimplex f0 = reversed_uniform();
  EXPECT_EQ(to_string(homotopy_H(Q("1/6"), f0)), "{0: [1/2,5/6), 1: [0,1/6)∪[1/3,1/2), 2: [1/6,1/3)∪[5/6,1)}");
  EXPECT_EQ(to_string(homotopy_H(Q("1/3"), f0)), "{0: [1/3,2/3), 1: [0,1/3), 2: [2/3,1)}");
  EXPECT_EQ(to_string(homotopy_H(Q("1/2"), f0)), "{0: [0,1/6)∪[1/3,1/2), 1: [1/6,1/3)∪[1/2,2/3), 2: [2/3,1)}");
  EXPECT_EQ(homotopy_H(Q("3/4"), f0), section(ProbVector::uniform(2)));
  EXPECT_EQ(homotopy_H(1, f0), section(ProbVector::uniform(2)));

  RandomSimplex f3 = four_class();
  EXPECT_EQ(to_string(homotopy_H(Q("1/5"), f3)),
            "{0: [0,1/8)∪[1/2,5/8), 1: [1/4,9/20)∪[5/8,4/5), 2: [1/8,1/4), 3: [9/20,1/2)∪[4/5,1)}");
  EXPECT_EQ(to_string(homotopy_H(Q("1/2"), f3)), "{0: [0,1/4), 1: [1/4,5/8), 2: [5/8,3/4), 3: [3/4,1)}");
  EXPECT_EQ(homotopy_H(Q("9/10"), f3), homotopy_H(Q("1/2"), f3));
}

TEST(HomotopyH, ContractsOnSamples) {
  Sampler s(4);
  for (int trial = 0; trial < 60; ++trial) {
    RandomSimplex f = s.random_simplex_mixed(s.index(4));
    EXPECT_EQ(homotopy_H(0, f), f);
    EXPECT_EQ(homotopy_H(1, f), section(law(f)));
    Rational u = s.unit_rational();
    EXPECT_EQ(law(homotopy_H(u, f)), law(f));
    EXPECT_EQ(homotopy_H(u, section(law(f))), section(law(f)));
  }
  EXPECT_THROW(homotopy_H(Q("3/2"), reversed_uniform()), domain_error);
}

TEST(HomotopyH, FaceEquivarianceIncludingLastFace) {
  RandomSimplex f3 = four_class();
  for (long k = 0; k <= 20; ++k) {
    for (std::size_t i = 0; i <= 4; ++i) EXPECT_TRUE(face_equivariance_check(i, rat(k, 20), f3)) << "i=" << i << " k=" << k;
  }
}

TEST(HomotopyH, DegeneracyWitness) {
  RandomSimplex f0 = reversed_uniform();
  EXPECT_FALSE(degeneracy_equivariance_check(1, Q("1/20"), f0));
  EXPECT_EQ(to_string(degeneracy(1, homotopy_H(Q("1/20"), f0))), "{0: [37/60,19/20), 1: [0,37/60)∪[19/20,1)}");
  EXPECT_EQ(to_string(homotopy_H(Q("1/20"), degeneracy(1, f0))), "{0: [0,1/20)∪[2/3,19/20), 1: [1/20,2/3)∪[19/20,1)}");
}

TEST(Lift, Examples) {
  RandomSimplex f = F("{0: [1/2,1), 1: [0,1/2)}");
  EXPECT_EQ(lift_law_target(f, law(f)), f);
  EXPECT_EQ(to_string(lift_law_target(f, P("(1/4, 3/4)"))), "{0: [3/4,1), 1: [0,3/4)}");
  EXPECT_EQ(lift_law_target(section(ProbVector::uniform(2)), ProbVector::vertex(2, 0)), section(ProbVector::vertex(2, 0)));
  EXPECT_THROW(lift_law_target(f, ProbVector::uniform(2)), arity_error);
}

TEST(Lift, LawContractOnSamples) {
  Sampler s(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = s.index(4);
    RandomSimplex f = s.random_simplex_mixed(n);
    ProbVector b = s.prob_vector(n);
    EXPECT_EQ(law(lift_law_target(f, b)), b);
    EXPECT_EQ(lift_law_target(f, law(f)), f);
  }
}

// Two nearby chains whose lifts at the same law are far apart: the lift is not
// 2-Lipschitz in the chain, although each level obeys J's 4-Lipschitz estimate.
TEST(Lift, NotTwoLipschitzInTheChain) {
  RandomSimplex f = F("{0: [0,1/6), 1: [1/6,3/4), 2: [3/4,1)}");
  RandomSimplex g = F("{0: ∅, 1: [0,4/7), 2: [4/7,1)}");
  ProbVector beta = P("(1/4, 3/4, 0)");
  RandomSimplex lf = lift_law_target(f, beta);
  RandomSimplex lg = lift_law_target(g, beta);
  EXPECT_EQ(to_string(lf), "{0: [0,1/6)∪[2/3,3/4), 1: [1/6,2/3)∪[3/4,1), 2: ∅}");
  EXPECT_EQ(to_string(lg), "{0: [9/28,4/7), 1: [0,9/28)∪[4/7,1), 2: ∅}");
  Chain x = to_chain(f);
  Chain y = to_chain(g);
  Rational dx = std::max(symmdiff(x.sets()[0], y.sets()[0]).measure(), symmdiff(x.sets()[1], y.sets()[1]).measure());
  EXPECT_EQ(dx, Q("5/28"));
  EXPECT_EQ(rv_distance(lf, lg), Q("1/2"));
  EXPECT_GT(rv_distance(lf, lg), 2 * dx);
  EXPECT_LE(symmdiff(to_chain(lf).sets()[0], to_chain(lg).sets()[0]).measure(), 4 * dx);
}

TEST(SimplexCylRetract, Examples) {
  ProbVector a = P("(1/2, 1/3, 1/6)");
  EXPECT_EQ(simplex_cyl_retract(a, 0), std::make_pair(a, Rational(0)));
  ProbVector b = P("(1/2, 1/2, 0)");
  EXPECT_EQ(simplex_cyl_retract(b, Q("2/3")), std::make_pair(b, Q("2/3")));
  EXPECT_EQ(simplex_cyl_retract(ProbVector::uniform(2), 1), std::make_pair(ProbVector::uniform(2), Rational(0)));
  // a > 2(n+1)m: second branch
  auto [c, h] = simplex_cyl_retract(P("(1/12, 1/2, 5/12)"), 1);
  EXPECT_EQ(c, P("(0, 5/9, 4/9)"));
  EXPECT_EQ(h, Q("2/3"));
}

TEST(BoundaryRetractPsi, IdentityClauses) {
  RandomSimplex f = F("{0: [1/2,1), 1: [0,1/4), 2: [1/4,1/2)}");
  EXPECT_EQ(boundary_retract_psi(f, 0), std::make_pair(f, Rational(0)));
  RandomSimplex g = F("{0: [1/2,1), 1: ∅, 2: [0,1/2)}");
  EXPECT_EQ(boundary_retract_psi(g, Q("3/5")), std::make_pair(g, Q("3/5")));
  auto [h, a] = boundary_retract_psi(f, 1);
  auto [beta, a2] = simplex_cyl_retract(law(f), 1);
  EXPECT_EQ(law(h), beta);
  EXPECT_EQ(a, a2);
}

TEST(Vnr, Deformation) {
  RandomSimplex f = section(ProbVector::uniform(2));
  EXPECT_EQ(vnr_deformation(f, 0, 0), f);
  RandomSimplex end = vnr_deformation(f, 1, 0);
  EXPECT_TRUE(end[1].empty() || end[2].empty());
  RandomSimplex v = F("{0: [0,1/2), 1: ∅, 2: [1/2,1)}");
  EXPECT_EQ(vnr_deformation(v, Q("1/2"), 0), v);
  RandomSimplex edge = F("{0: [0,1/4), 1: [1/4,1)}");
  EXPECT_EQ(vnr_deformation(edge, 1, 1), F("{0: ∅, 1: [0,1)}"));
  EXPECT_THROW(vnr_deformation(F("{0: [0,1)}"), 0, 0), domain_error);
}

TEST(Vnr, CofibrationRetract) {
  RandomSimplex f = F("{0: [0,1/2), 1: [1/2,3/4), 2: [3/4,1)}");
  EXPECT_EQ(vnr_cofibration_retract(f, 0, 0), std::make_pair(f, Rational(0)));
  RandomSimplex v = F("{0: [0,1/2), 1: ∅, 2: [1/2,1)}");
  EXPECT_EQ(vnr_cofibration_retract(v, Q("1/3"), 0), std::make_pair(v, Q("1/3")));
  auto [g, w] = vnr_cofibration_retract(f, Q("1/2"), 0);
  EXPECT_EQ(w, Q("1/4"));
  EXPECT_EQ(g[1].measure(), 0);
  EXPECT_EQ(g[2].measure(), 0);
  auto [h, z] = vnr_cofibration_retract(f, Q("1/8"), 0);
  EXPECT_EQ(z, 0);
  EXPECT_EQ(h[1].measure(), Q("1/8"));
  EXPECT_EQ(h[2].measure(), Q("1/8"));
}
