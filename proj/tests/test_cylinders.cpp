#include <gtest/gtest.h>

#include "randotop/cylinders.hpp"
#include "randotop/sampling.hpp"

using namespace randotop;

namespace {

IntervalSet S(const char* text) { return parse_interval_set(text); }
Rational Q(const char* text) { return parse_rational(text); }
RandomSimplex F(const char* text) { return parse_random_simplex(text); }
CylinderPoint C(const char* text, std::size_t n) { return parse_cylinder_point(text, n); }

}  // namespace

TEST(Complex, DownwardClosure) {
  SimplicialComplex k(4, {{0, 1, 2}, {2, 3}});
  EXPECT_TRUE(k.contains({0, 2}));
  EXPECT_TRUE(k.contains({3}));
  EXPECT_FALSE(k.contains({1, 3}));
  EXPECT_TRUE(k.contains({1, 1, 0}));
  EXPECT_EQ(k.faces().size(), 7u + 3u - 1u);  // 7 faces of the triangle, plus {3},{2,3}; {2} shared
  EXPECT_EQ(k.maximal_faces(), (std::vector<Face>{{0, 1, 2}, {2, 3}}));
  EXPECT_THROW(SimplicialComplex(2, {{0, 2}}), domain_error);
  EXPECT_EQ(SimplicialComplex::full_simplex(2).faces().size(), 7u);
}

TEST(CylinderPoint, Membership) {
  EXPECT_NO_THROW(C("{0-: [0,1/2), 1+: [1/2,1)}", 1));
  EXPECT_NO_THROW(C("{1-: [0,1/2), 1+: [1/2,1)}", 1));
  EXPECT_THROW(C("{1-: [0,1/2), 0+: [1/2,1)}", 1), invariant_error);
  EXPECT_THROW(C("{0-: [0,1/2)}", 1), invariant_error);
  EXPECT_THROW(C("{2-: [0,1)}", 1), domain_error);
  EXPECT_THROW(C("{0*: [0,1)}", 1), domain_error);
}

TEST(CylinderPoint, TextRoundTrip) {
  CylinderPoint f = C("{0-: [0,1/4), 1-: [1/4,1/2), 1+: [1/2,1)}", 2);
  EXPECT_EQ(to_string(f), "{0-: [0,1/4), 1-: [1/4,1/2), 1+: [1/2,1)}");
  Sampler s(1);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = s.index(3);
    CylinderPoint g = s.cylinder(n);
    EXPECT_EQ(parse_cylinder_point(to_string(g), n), g);
  }
}

TEST(Cylinder, ProjectAndSection) {
  RandomSimplex f = F("{0: [0,1/2), 1: [1/2,1)}");
  EXPECT_EQ(cyl_project(cyl_section(f)), f);
  EXPECT_EQ(to_string(cyl_section(f)), "{0-: [0,1/2), 1-: [1/2,1)}");
  CylinderPoint plus = C("{0+: [0,1/2), 1+: [1/2,1)}", 1);
  EXPECT_EQ(cyl_project(plus), f);
}

TEST(Cylinder, HomotopyEndpointsAndSeams) {
  Sampler s(6);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = s.index(3);
    CylinderPoint f = s.cylinder(n);
    EXPECT_EQ(cyl_homotopy(f, 0), f);
    EXPECT_EQ(cyl_homotopy(f, 1), cyl_section(cyl_project(f)));
    for (std::size_t p = 1; p <= n; ++p) {
      Rational t = Rational(p) / (n + 1);
      EXPECT_EQ(cyl_homotopy_piece(f, t, p - 1), cyl_homotopy_piece(f, t, p));
      EXPECT_EQ(cyl_homotopy_piece(f, t, p), cyl_homotopy(f, t));
    }
    Rational t = s.unit_rational();
    CylinderPoint mid = cyl_homotopy(f, t);
    EXPECT_EQ(cyl_project(mid), cyl_project(f));
  }
  EXPECT_THROW(cyl_homotopy(C("{0-: [0,1)}", 0), Q("2")), domain_error);
}

TEST(Cylinder, OneVertexHomotopyMovesASuffix) {
  CylinderPoint f = C("{0-: [0,1/4), 0+: [1/4,1)}", 0);
  for (long k = 0; k <= 8; ++k) {
    Rational t = rat(k, 8);
    CylinderPoint g = cyl_homotopy(f, t);
    EXPECT_EQ(g.minus(0), set_union(f.minus(0), g_check(f.plus(0), t)));
    EXPECT_EQ(g.minus(0).measure(), f.minus(0).measure() + t * f.plus(0).measure());
  }
}

TEST(Cylinder, PointedHomotopy) {
  CylinderPoint l0 = C("{0-: [0,1/3), 0+: [1/3,1)}", 1);
  EXPECT_EQ(pointed_homotopy(l0, 0), l0);
  EXPECT_EQ(to_string(pointed_homotopy(l0, 1)), "{0-: [0,1)}");
  CylinderPoint f = C("{0-: [0,1/8), 0+: [1/8,1/2), 1+: [1/2,1)}", 1);
  CylinderPoint ps = pointed_section(f);
  EXPECT_EQ(ps.minus(0), set_union(f.minus(0), g_map(f.plus(0), Q("1/2"))));
  Sampler s(7);
  for (int trial = 0; trial < 100; ++trial) {
    CylinderPoint g = s.cylinder(1 + s.index(2));
    Rational t = s.unit_rational();
    CylinderPoint h = pointed_homotopy(g, t);
    for (std::size_t j = 1; j <= g.dim(); ++j) {
      EXPECT_EQ(h.minus(j), g.minus(j));
      EXPECT_EQ(h.plus(j), g.plus(j));
    }
    EXPECT_EQ(pointed_homotopy(g, 0), g);
  }
}

TEST(Cylinder, DChainExamples) {
  CylinderPoint minus = cyl_section(F("{0: [0,1/4), 1: [1/4,1/2), 2: [1/2,1)}"));
  Chain x = d_chain(minus);
  EXPECT_EQ(x, Chain({S("[0,1/4)"), S("[0,1/2)"), IntervalSet::unit()}));
  CylinderPoint plus = C("{0+: [0,1/4), 1+: [1/4,1/2), 2+: [1/2,1)}", 2);
  EXPECT_EQ(d_chain(plus), Chain({IntervalSet{}, S("[0,1/4)"), S("[0,1/2)")}));
  EXPECT_EQ(d_chain(cyl_section(section(ProbVector::uniform(2)))),
            Chain({exhaustion(Q("1/3")), exhaustion(Q("2/3")), exhaustion(1)}));
}

TEST(Cylinder, DChainAgreesWithStrataAndIsBijective) {
  Sampler s(10);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = s.index(3);
    CylinderPoint f = s.cylinder(n);
    for (std::size_t r = 0; r <= n; ++r) {
      if (!f.in_stratum(r)) continue;
      EXPECT_EQ(d_chain(f), d_chain_on_stratum(f, r));
      EXPECT_EQ(d_chain_inverse(d_chain(f), r), f);
    }
    Chain x = s.chain(n + 1);
    std::size_t r = s.index(n);
    EXPECT_EQ(d_chain_on_stratum(d_chain_inverse(x, r), r), x);
  }
}

TEST(Cylinder, GPlusGMinusEndpoints) {
  Sampler s(12);
  for (int trial = 0; trial < 200; ++trial) {
    CylinderPoint f = s.cylinder(s.index(3));
    EXPECT_EQ(g_plus(f, 1), f);
    EXPECT_EQ(g_plus(f, 0), tau_plus(f));
    EXPECT_EQ(g_minus(f, 1), tau_minus(f));
    EXPECT_EQ(g_minus(f, 0), f);
    Rational u = s.unit_rational();
    EXPECT_EQ(cyl_project(g_plus(f, u)), cyl_project(f));
    EXPECT_EQ(cyl_project(g_minus(f, u)), cyl_project(f));
  }
}

TEST(Cylinder, QSquare) {
  EXPECT_EQ(q_square(Q("1/3"), 0), std::make_pair(Q("1/3"), Rational(0)));
  EXPECT_EQ(q_square(0, Q("2/3")), std::make_pair(Rational(0), Q("2/3")));
  EXPECT_EQ(q_square(1, Q("2/3")), std::make_pair(Rational(1), Q("2/3")));
  EXPECT_EQ(q_square(Q("1/2"), 1), std::make_pair(Q("1/2"), Rational(0)));
  EXPECT_EQ(q_square(Q("1/8"), 1), std::make_pair(Rational(0), Q("2/3")));
  EXPECT_EQ(q_square(Q("7/8"), 1), std::make_pair(Rational(1), Q("2/3")));
  EXPECT_EQ(q_square(Q("1/4"), Q("1/2")), std::make_pair(Q("1/6"), Rational(0)));
  EXPECT_THROW(q_square(Q("3/2"), 0), domain_error);
}

TEST(Cylinder, CofibrationRetractExamples) {
  CylinderPoint f = C("{0-: [0,1/4), 1-: [1/4,1/2), 1+: [1/2,1)}", 2);
  EXPECT_EQ(cyl_cofibration_retract(f, 0), std::make_pair(f, Rational(0)));
  EXPECT_EQ(cyl_cofibration_retract(f, 1), std::make_pair(f, Rational(0)));  // y = 1/2
  CylinderPoint p = tau_plus(f);
  EXPECT_EQ(cyl_cofibration_retract(p, Q("3/4")), std::make_pair(p, Q("3/4")));
  CylinderPoint m = tau_minus(f);
  EXPECT_EQ(cyl_cofibration_retract(m, Q("3/4")), std::make_pair(m, Q("3/4")));
}

TEST(Cylinder, ComplexMembershipPreserved) {
  Sampler s(14);
  for (int trial = 0; trial < 100; ++trial) {
    SimplicialComplex k = s.complex(s.index(3));
    CylinderPoint f = s.cylinder_in(k);
    ASSERT_TRUE(in_complex(f, k));
    Rational t = s.unit_rational();
    EXPECT_TRUE(in_complex(cyl_homotopy(f, t), k));
    EXPECT_TRUE(in_complex(pointed_homotopy(f, t), k));
    EXPECT_TRUE(in_complex(g_plus(f, t), k));
    EXPECT_TRUE(in_complex(g_minus(f, t), k));
    EXPECT_TRUE(in_complex(cyl_cofibration_retract(f, t).first, k));
    EXPECT_TRUE(in_complex(cyl_project(f), k));
  }
}
