#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mixedbody/error.hpp"
#include "mixedbody/mixedvol/mixed_volume.hpp"
#include "test_support.hpp"

namespace {

using mixedbody::ValidityError;
using namespace mixedbody::exactgeom;
using namespace mixedbody::mixedvol;
using testing_support::hull_of;
using testing_support::pt;
using testing_support::q;
using testing_support::random_polytope;

Polytope cube(std::size_t d) { return box(std::vector<Rat>(d, Rat(0)), std::vector<Rat>(d, Rat(1))); }

// Planar mixed area from support functions and edge vectors:
// V(K, L) = 1/2 sum over edges F of L of h_K(a_F) * lambda_F, where a_F is
// the primitive outer normal and the edge vector is lambda_F * (-a_2, a_1).
Rat mixed_area_oracle(const Polytope& k, const Polytope& l) {
  Rat sum(0);
  for (const auto& f : l.hrep().facets) {
    Rat h = dot(f.normal, k.vertices().front());
    for (const auto& v : k.vertices()) h = std::max(h, dot(f.normal, v));
    const Point& u = l.vertices()[f.vertices[0]];
    const Point& w = l.vertices()[f.vertices[1]];
    const Point e = w - u;
    const Rat lambda = f.normal[1].is_zero() ? abs(e[1] / f.normal[0]) : abs(e[0] / f.normal[1]);
    sum += h * lambda;
  }
  return sum / Rat(2);
}

TEST(MixedVolume, DiagonalOfCubeIsOne) {
  for (std::size_t d = 1; d <= 4; ++d) {
    BodyTuple t(std::vector<Polytope>(d, cube(d)));
    EXPECT_EQ(mixed_volume(t), Rat(1)) << d;
    EXPECT_EQ(mixed_volume_polyfit(t), Rat(1)) << d;
  }
}

TEST(MixedVolume, OrthogonalSegments) {
  BodyTuple t({hull_of({{0, 0}, {1, 0}}, 2), hull_of({{0, 0}, {0, 1}}, 2)});
  EXPECT_EQ(mixed_volume(t), q("1/2"));
  EXPECT_EQ(mixed_volume_polyfit(t), q("1/2"));
}

TEST(MixedVolume, SquareAndRectangle) {
  // vol(t1 K1 + t2 K2) = (t1 + t2)(t1 + 2 t2): t1 t2 coefficient 3 = 2V.
  BodyTuple t({cube(2), box({Rat(0), Rat(0)}, {Rat(1), Rat(2)})});
  EXPECT_EQ(mixed_volume(t), q("3/2"));
  EXPECT_EQ(mixed_volume_polyfit(t), q("3/2"));
}

TEST(MixedVolume, ScaledSimplicesAreMultilinearOnDiagonal) {
  // V(a D, b D, c D) = a b c vol(D) with D the standard 3-simplex.
  BodyTuple t({standard_simplex(3, Rat(2)), standard_simplex(3, Rat(3)), standard_simplex(3, q("1/2"))});
  EXPECT_EQ(mixed_volume(t), Rat(3) / Rat(6));
  EXPECT_EQ(mixed_volume_polyfit(t), Rat(3) / Rat(6));
}

TEST(MixedVolume, AgreesWithSupportFunctionOracleInThePlane) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    Polytope k = random_polytope(rng, 2, 3 + i % 5, 10);
    Polytope l = random_polytope(rng, 2, 3 + i % 4, 10);
    const Rat oracle = mixed_area_oracle(k, l);
    BodyTuple t({k, l});
    EXPECT_EQ(mixed_volume(t), oracle);
    EXPECT_EQ(mixed_volume_polyfit(t), oracle);
  }
}

TEST(MixedVolume, TwoRoutesAgreeInThreeDimensions) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 8; ++i) {
    BodyTuple t({random_polytope(rng, 3, 5, 6), random_polytope(rng, 3, 5, 6),
                 random_polytope(rng, 3, 4, 6)});
    EXPECT_EQ(mixed_volume(t), mixed_volume_polyfit(t));
  }
}

TEST(MixedVolume, LowerDimensionalBodiesAllowed) {
  // Three orthogonal unit segments in R^3: vol of the sum is t1 t2 t3.
  BodyTuple t({hull_of({{0, 0, 0}, {1, 0, 0}}, 3), hull_of({{0, 0, 0}, {0, 1, 0}}, 3),
               hull_of({{0, 0, 0}, {0, 0, 1}}, 3)});
  EXPECT_EQ(mixed_volume(t), q("1/6"));
  EXPECT_EQ(mixed_volume_polyfit(t), q("1/6"));
  BodyTuple zero({hull_of({{0, 0}, {1, 0}}, 2), hull_of({{0, 0}, {2, 0}}, 2)});
  EXPECT_EQ(mixed_volume(zero), Rat(0));
}

TEST(MixedVolume, SymmetryTranslationMonotonicity) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    Polytope a = random_polytope(rng, 3, 5, 5);
    Polytope b = random_polytope(rng, 3, 5, 5);
    Polytope c = random_polytope(rng, 3, 5, 5);
    const Rat v = mixed_volume(BodyTuple({a, b, c}));
    EXPECT_EQ(mixed_volume(BodyTuple({c, a, b})), v);
    EXPECT_EQ(mixed_volume(BodyTuple({b, c, a})), v);
    EXPECT_EQ(mixed_volume(BodyTuple({translate(a, pt({3, -1, 2})), b, c})), v);
    auto grown = a.vertices();
    grown.push_back(pt({7, 7, 7}));
    Polytope bigger = hull(grown, 3);
    ASSERT_TRUE(is_subset(a, bigger));
    EXPECT_GE(mixed_volume(BodyTuple({bigger, b, c})), v);
  }
}

TEST(MixedVolume, Multilinearity) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 15; ++i) {
    Polytope k = random_polytope(rng, 2, 4, 8);
    Polytope k2 = random_polytope(rng, 2, 4, 8);
    Polytope l = random_polytope(rng, 2, 5, 8);
    EXPECT_EQ(mixed_volume(BodyTuple({minkowski_sum(k, k2), l})),
              mixed_volume(BodyTuple({k, l})) + mixed_volume(BodyTuple({k2, l})));
    const Rat lambda = Rat(mpz_class(i + 1), mpz_class(3));
    EXPECT_EQ(mixed_volume(BodyTuple({scale(k, lambda), l})), lambda * mixed_volume(BodyTuple({k, l})));
  }
}

TEST(MixedVolume, InvalidTuplesRejected) {
  EXPECT_THROW(BodyTuple({cube(2)}), ValidityError);
  EXPECT_THROW(BodyTuple({cube(2), cube(3)}), ValidityError);
  EXPECT_THROW(BodyTuple({cube(2), Polytope(2)}), ValidityError);
  EXPECT_THROW(BodyTuple(std::vector<Polytope>{}), ValidityError);
  EXPECT_THROW(BodyTuple(std::vector<Polytope>(7, cube(7))), ValidityError);
}

TEST(MixedVolume, ReportCarriesMethodAndTerms) {
  BodyTuple t({cube(3), cube(3), standard_simplex(3)});
  auto ie = mixed_volume_report(t, Method::inclusion_exclusion);
  auto pf = mixed_volume_report(t, Method::polynomial_fit);
  EXPECT_EQ(ie.value, pf.value);
  EXPECT_EQ(ie.term_count, 7u);
  EXPECT_EQ(pf.term_count, 10u);
  EXPECT_EQ(pf.method, Method::polynomial_fit);
}

TEST(MinkowskiPolynomial, SingleBodyIsVolume) {
  std::vector<Polytope> one{standard_simplex(3, Rat(2))};
  auto p = minkowski_polynomial(one);
  ASSERT_EQ(p.coefficients().size(), 1u);
  EXPECT_EQ(p.coefficient({3}), q("8/6"));
}

TEST(MinkowskiPolynomial, SquareAndRectangleTable) {
  std::vector<Polytope> bodies{cube(2), box({Rat(0), Rat(0)}, {Rat(1), Rat(2)})};
  auto p = minkowski_polynomial(bodies);
  EXPECT_EQ(p.coefficient({2, 0}), Rat(1));
  EXPECT_EQ(p.coefficient({1, 1}), Rat(3));
  EXPECT_EQ(p.coefficient({0, 2}), Rat(2));
  EXPECT_EQ(p.coefficient({1, 0}), Rat(0));
}

TEST(MinkowskiPolynomial, EvaluatesToVolumeOfSumAndMatchesMultinomials) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = i % 2 == 0 ? 2 : 3;
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    std::vector<Polytope> bodies;
    for (std::size_t j = 0; j < n; ++j) bodies.push_back(random_polytope(rng, d, 5, 5));
    auto p = minkowski_polynomial(bodies);
    Polytope sum = bodies[0];
    for (std::size_t j = 1; j < n; ++j) sum = minkowski_sum(sum, bodies[j]);
    std::vector<Rat> ones(n, Rat(1));
    EXPECT_EQ(p.evaluate(ones), volume(sum));
    if (d == 2 && n == 2) {
      EXPECT_EQ(p.coefficient({1, 1}), Rat(2) * mixed_volume(BodyTuple({bodies[0], bodies[1]})));
      EXPECT_EQ(p.coefficient({2, 0}), volume(bodies[0]));
    }
    if (d == 3 && n == 2) {
      // c_(2,1) = 3 V(K1, K1, K2)
      EXPECT_EQ(p.coefficient({2, 1}),
                Rat(3) * mixed_volume(BodyTuple({bodies[0], bodies[0], bodies[1]})));
    }
  }
}

TEST(Ssz, CubeTuple) {
  for (std::size_t d = 2; d <= 3; ++d) {
    auto r = ssz_check(cube(d), BodyTuple(std::vector<Polytope>(d, cube(d))));
    ASSERT_EQ(r.cases(), 1u);
    const auto& c = r.checks().front();
    EXPECT_EQ(c.lhs, Rat(1));
    EXPECT_EQ(c.rhs, Rat(static_cast<long>(d)));
    EXPECT_TRUE(c.pass);
    EXPECT_FALSE(c.witness);
  }
}

TEST(Ssz, EqualityCaseHasZeroSlack) {
  auto r = ssz_check(cube(2), BodyTuple({hull_of({{0, 0}, {1, 0}}, 2), hull_of({{0, 0}, {0, 1}}, 2)}));
  const auto& c = r.checks().front();
  EXPECT_EQ(c.lhs, q("1/2"));
  EXPECT_EQ(c.rhs, q("1/2"));
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.note, "slack=0");
}

TEST(Ssz, RandomPlanarTuplesSatisfyInequality) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 100; ++i) {
    auto r = ssz_check(random_polytope(rng, 2, 4, 10),
                       BodyTuple({random_polytope(rng, 2, 4, 10), random_polytope(rng, 2, 4, 10)}));
    EXPECT_TRUE(r.passed());
  }
  EXPECT_THROW(ssz_check(cube(3), BodyTuple({cube(2), cube(2)})), ValidityError);
}

}  // namespace
