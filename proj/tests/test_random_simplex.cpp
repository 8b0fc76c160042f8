#include <gtest/gtest.h>

#include "randotop/random_simplex.hpp"
#include "randotop/sampling.hpp"

using namespace randotop;

namespace {

IntervalSet S(const char* text) { return parse_interval_set(text); }
Rational Q(const char* text) { return parse_rational(text); }
RandomSimplex F(const char* text) { return parse_random_simplex(text); }
ProbVector P(const char* text) { return parse_prob_vector(text); }

}  // namespace

TEST(RandomSimplex, RejectsOverlapAndGaps) {
  EXPECT_THROW(RandomSimplex({S("[0,1/2)"), S("[1/4,1)")}), invariant_error);
  EXPECT_THROW(RandomSimplex({S("[0,1/2)"), S("[3/4,1)")}), invariant_error);
  EXPECT_THROW(RandomSimplex({}), arity_error);
  EXPECT_THROW(ProbVector({Q("1/2"), Q("1/3")}), invariant_error);
  EXPECT_THROW(ProbVector({Q("3/2"), Q("-1/2")}), invariant_error);
}

TEST(RandomSimplex, Law) {
  EXPECT_EQ(law(F("{0: [0,1/3), 1: [1/3,2/3), 2: [2/3,1)}")), P("(1/3, 1/3, 1/3)"));
  EXPECT_EQ(law(F("{0: [0,1), 1: ∅, 2: ∅}")), ProbVector::vertex(2, 0));
}

TEST(RandomSimplex, Section) {
  EXPECT_EQ(to_string(section(P("(1/2, 1/3, 1/6)"))), "{0: [0,1/2), 1: [1/2,5/6), 2: [5/6,1)}");
  EXPECT_EQ(section(P("(1, 0)")), F("{0: [0,1), 1: ∅}"));
  EXPECT_EQ(section(P("(0, 0, 1)")), F("{0: ∅, 1: ∅, 2: [0,1)}"));
  Sampler s(5);
  for (int i = 0; i < 100; ++i) {
    ProbVector a = s.prob_vector(s.index(4));
    EXPECT_EQ(law(section(a)), a);
    EXPECT_EQ(section(law(section(a))), section(a));
  }
}

TEST(RandomSimplex, PushforwardFaceDegeneracy) {
  RandomSimplex f = F("{0: [0,1/2), 1: [1/2,1)}");
  EXPECT_EQ(pushforward(MonotoneMap::identity(1), f), f);
  EXPECT_EQ(face(1, f), F("{0: [0,1/2), 1: ∅, 2: [1/2,1)}"));
  RandomSimplex g = F("{0: [0,1/4), 1: [1/2,3/4), 2: [1/4,1/2)∪[3/4,1)}");
  EXPECT_EQ(degeneracy(0, g), F("{0: [0,1/4)∪[1/2,3/4), 1: [1/4,1/2)∪[3/4,1)}"));
  EXPECT_THROW(pushforward(MonotoneMap::identity(2), f), arity_error);
  EXPECT_THROW(degeneracy(0, F("{0: [0,1)}")), domain_error);
}

TEST(RandomSimplex, LawPushforward) {
  EXPECT_EQ(law_pushforward(MonotoneMap::identity(2), P("(1/4, 1/4, 1/2)")), P("(1/4, 1/4, 1/2)"));
  EXPECT_EQ(law_pushforward(MonotoneMap::face(1, 2), P("(1/2, 1/2)")), P("(1/2, 0, 1/2)"));
  EXPECT_EQ(law_pushforward(MonotoneMap::degeneracy(0, 1), P("(1/4, 1/4, 1/2)")), P("(1/2, 1/2)"));
  EXPECT_THROW(law_pushforward(MonotoneMap::identity(1), P("(1/4, 1/4, 1/2)")), arity_error);
}

TEST(RandomSimplex, EssentialImageAndInterior) {
  RandomSimplex f = section(P("(1/2, 1/2, 0)"));
  EXPECT_EQ(essential_image(f), (std::set<std::size_t>{0, 1}));
  EXPECT_FALSE(is_interior(f));
  EXPECT_TRUE(is_interior(section(ProbVector::uniform(2))));
  Sampler s(9);
  for (int i = 0; i < 50; ++i) {
    RandomSimplex g = s.random_simplex(2, true);
    ASSERT_TRUE(is_interior(g));
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_FALSE(is_interior(face(k, g)));
    for (std::size_t k = 0; k <= 1; ++k) EXPECT_TRUE(is_interior(degeneracy(k, g)));
  }
}

TEST(RandomSimplex, Distance) {
  RandomSimplex f = F("{0: [0,1/2), 1: [1/2,1)}");
  EXPECT_EQ(rv_distance(f, f), 0);
  EXPECT_EQ(rv_distance(F("{0: [0,1), 1: ∅}"), F("{0: ∅, 1: [0,1)}")), 1);
  EXPECT_EQ(rv_distance(f, F("{0: [0,1/4), 1: [1/4,1)}")), Q("1/4"));
  EXPECT_THROW(rv_distance(f, section(ProbVector::uniform(2))), arity_error);
}

TEST(RandomSimplex, ChainCorrespondence) {
  Chain x = to_chain(section(P("(1/2, 1/3, 1/6)")));
  ASSERT_EQ(x.length(), 2u);
  EXPECT_EQ(x.sets()[0], S("[0,1/2)"));
  EXPECT_EQ(x.sets()[1], S("[0,5/6)"));
  EXPECT_EQ(to_chain(F("{0: [0,1)}")).length(), 0u);
  Sampler s(13);
  for (int i = 0; i < 200; ++i) {
    RandomSimplex f = s.random_simplex(s.index(4));
    EXPECT_EQ(from_chain(to_chain(f)), f);
  }
}

TEST(RandomSimplex, ChainActionExamples) {
  RandomSimplex f = F("{0: [0,1/2), 1: [1/2,1)}");
  Chain x = to_chain(f);
  EXPECT_EQ(chain_action(MonotoneMap::identity(1), x), x);
  EXPECT_EQ(chain_action(MonotoneMap::face(1, 2), x), to_chain(face(1, f)));
  // σ constant to 0: every entry is X_{n+1} = [0,1)
  Chain c = chain_action(MonotoneMap::constant(1, 2, 0), x);
  EXPECT_EQ(c, Chain({IntervalSet::unit(), IntervalSet::unit()}));
  // σ constant to the top: every entry below the top is X_{−∞} = ∅
  EXPECT_EQ(chain_action(MonotoneMap::constant(1, 2, 2), x), Chain({IntervalSet{}, IntervalSet{}}));
}

TEST(RandomSimplex, MonotoneMapBasics) {
  EXPECT_EQ(enumerate_monotone(2, 2).size(), 10u);  // C(5,2)
  EXPECT_EQ(enumerate_monotone(0, 3).size(), 4u);
  EXPECT_TRUE(MonotoneMap::face(1, 3).injective());
  EXPECT_FALSE(MonotoneMap::face(1, 3).surjective());
  EXPECT_TRUE(MonotoneMap::degeneracy(1, 3).surjective());
  EXPECT_THROW(MonotoneMap(2, {1, 0}), invariant_error);
  EXPECT_THROW(MonotoneMap(1, {0, 2}), domain_error);
  EXPECT_THROW(compose(MonotoneMap::identity(2), MonotoneMap::identity(1)), arity_error);
  // simplicial identity D_j D_i = D_i D_{j−1} for i < j
  EXPECT_EQ(compose(MonotoneMap::face(3, 3), MonotoneMap::face(1, 2)), compose(MonotoneMap::face(1, 3), MonotoneMap::face(2, 2)));
}

TEST(RandomSimplex, HornLawRetract) {
  EXPECT_EQ(horn_law_retract(P("(1/2, 1/2, 0)"), 0), P("(1/2, 1/2, 0)"));
  EXPECT_EQ(horn_law_retract(P("(1/2, 1/3, 1/6)"), 0), P("(5/6, 1/6, 0)"));
  EXPECT_EQ(horn_law_retract(ProbVector::uniform(2), 0), P("(1, 0, 0)"));
  EXPECT_THROW(horn_law_retract(ProbVector::vertex(0, 0), 0), domain_error);
  EXPECT_THROW(horn_law_retract(ProbVector::uniform(2), 3), domain_error);
}

TEST(RandomSimplex, HornRetract) {
  RandomSimplex f = section(P("(1/2, 1/3, 1/6)"));
  RandomSimplex r = horn_retract(f, 0);
  EXPECT_EQ(to_string(r), "{0: [0,2/3)∪[5/6,1), 1: [2/3,5/6), 2: ∅}");
  EXPECT_EQ(law(r), P("(5/6, 1/6, 0)"));
  RandomSimplex v = F("{0: [0,1/2), 1: ∅, 2: [1/2,1)}");
  EXPECT_EQ(horn_retract(v, 0), v);
  EXPECT_THROW(horn_retract(F("{0: [0,1)}"), 0), domain_error);
}

TEST(RandomSimplex, TruncateTopAndRescale) {
  EXPECT_EQ(truncate_top_and_rescale(F("{0: [0,1/4), 1: [1/4,1/2), 2: [1/2,1)}")), F("{0: [0,1/2), 1: [1/2,1)}"));
  EXPECT_EQ(truncate_top_and_rescale(F("{0: [0,1/3), 1: [1/3,1), 2: ∅}")), F("{0: [0,1/3), 1: [1/3,1)}"));
  EXPECT_EQ(truncate_top_and_rescale(section(P("(1/2, 1/4, 1/4)"))), section(P("(2/3, 1/3)")));
  EXPECT_THROW(truncate_top_and_rescale(F("{0: [1/2,1), 1: [0,1/2)}")), precondition_error);
  EXPECT_THROW(truncate_top_and_rescale(F("{0: ∅, 1: [0,1)}")), precondition_error);
}

TEST(RandomSimplex, TextFormats) {
  EXPECT_EQ(to_string(P("(1/2, 1/3, 1/6)")), "(1/2, 1/3, 1/6)");
  EXPECT_THROW(parse_random_simplex("{1: [0,1)}"), domain_error);
  EXPECT_THROW(parse_random_simplex("0: [0,1)"), domain_error);
  EXPECT_THROW(parse_prob_vector("1/2, 1/2"), domain_error);
  Sampler s(21);
  for (int i = 0; i < 100; ++i) {
    RandomSimplex f = s.random_simplex_mixed(s.index(4));
    EXPECT_EQ(parse_random_simplex(to_string(f)), f);
  }
}
