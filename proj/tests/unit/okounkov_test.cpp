#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "mixedbody/error.hpp"
#include "mixedbody/okounkov/toric.hpp"
#include "test_support.hpp"

namespace {

using mixedbody::InternalError;
using mixedbody::ParseError;
using mixedbody::ValidityError;
using namespace mixedbody::exactgeom;
using namespace mixedbody::okounkov;
using testing_support::hull_of;
using testing_support::pt;
using testing_support::q;
using testing_support::random_polytope;
using testing_support::shoelace_area;

ToricBundle simplex_bundle(std::size_t d, long r) { return ToricBundle(standard_simplex(d, Rat(r)), "simplex"); }

ToricBundle box_bundle(std::vector<long> sides) {
  std::vector<Rat> lo, hi;
  for (long s : sides) {
    lo.emplace_back(0);
    hi.emplace_back(s);
  }
  return ToricBundle(box(lo, hi), "box");
}

FlagValuation trivial_flag(std::size_t d) {
  IntMatrix m(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return FlagValuation(m, LatticePoint(d, 0));
}

// Pick's theorem: lattice points of a lattice polygon = A + B/2 + 1 with B
// the boundary count, sum of gcds of edge vectors.
Rat pick_count(const Polytope& p) {
  long boundary = 0;
  for (const auto& f : p.hrep().facets) {
    const Point e = p.vertices()[f.vertices[1]] - p.vertices()[f.vertices[0]];
    boundary += std::gcd(std::abs(e[0].num().get_si()), std::abs(e[1].num().get_si()));
  }
  return shoelace_area(p) + Rat(boundary, 2) + Rat(1);
}

TEST(Sections, SmallCounts) {
  EXPECT_EQ(sections(simplex_bundle(2, 1), 1), (std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(sections(simplex_bundle(2, 1), 2).size(), 6u);
  EXPECT_EQ(sections(box_bundle({1, 1}), 3).size(), 16u);
  EXPECT_THROW(sections(simplex_bundle(2, 1), 0), ValidityError);
}

TEST(Sections, EhrhartPolynomials) {
  for (unsigned m = 1; m <= 6; ++m) {
    const long k = m;
    EXPECT_EQ(sections(simplex_bundle(3, 1), m).size(), static_cast<std::size_t>((k + 1) * (k + 2) * (k + 3) / 6));
    EXPECT_EQ(sections(box_bundle({1, 2, 1}), m).size(), static_cast<std::size_t>((k + 1) * (2 * k + 1) * (k + 1)));
  }
}

TEST(Sections, PickOnRandomPolygons) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    ToricBundle t(random_polytope(rng, 2, 3 + i % 6, 8));
    for (unsigned m = 1; m <= 3; ++m) {
      const auto pts = sections(t, m);
      EXPECT_EQ(Rat(static_cast<long>(pts.size())), pick_count(scale(t.polytope(), Rat(static_cast<long>(m)))));
      EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    }
  }
}

TEST(Sections, SemigroupProperty) {
  ToricBundle t(hull_of({{0, 0}, {3, 1}, {1, 2}}, 2));
  const auto s1 = sections(t, 1), s2 = sections(t, 2), s3 = sections(t, 3);
  for (const auto& a : s1) {
    for (const auto& b : s2) {
      LatticePoint c{a[0] + b[0], a[1] + b[1]};
      EXPECT_TRUE(std::binary_search(s3.begin(), s3.end(), c));
    }
  }
}

TEST(Bundle, RejectsNonLatticeOrFlatPolytopes) {
  EXPECT_THROW(ToricBundle(hull_of({{0, 0}, {1, 1}}, 2)), ValidityError);
  const std::vector<Point> half{pt({0, 0}), pt({1, 0}), Point{q("0"), q("1/2")}};
  EXPECT_THROW(ToricBundle(hull(half, 2)), ValidityError);
  EXPECT_THROW(ToricBundle(Polytope(2)), ValidityError);
}

TEST(Flag, RejectsNonUnimodular) {
  EXPECT_THROW(FlagValuation({{2, 0}, {0, 1}}, {0, 0}), ValidityError);
  EXPECT_THROW(FlagValuation({{1, 0}, {0, 1}}, {0, 0, 0}), ValidityError);
  FlagValuation f({{2, 1}, {1, 1}}, {0, 0});
  EXPECT_EQ(f.inverse(), (IntMatrix{{1, -1}, {-1, 2}}));
}

TEST(Valuation, Examples) {
  const FlagValuation id = trivial_flag(2);
  EXPECT_EQ(valuation_image(id, {2, 3}, 5), (LatticePoint{2, 3}));

  // Base vertex (1, 0) of the unit triangle. With nu(a) = M (a - m v) the
  // matrix [[-1, -1], [1, 0]] sends the vertex (0, 0) to (1, -1); its
  // transpose is the one mapping P - v into the orthant.
  ToricBundle t = simplex_bundle(2, 1);
  FlagValuation bad({{-1, -1}, {1, 0}}, {1, 0});
  EXPECT_FALSE(bad.valid_for(t));
  EXPECT_THROW(valuation_image(bad, {0, 0}, 1), ValidityError);
  FlagValuation good({{-1, 1}, {-1, 0}}, {1, 0});
  EXPECT_TRUE(good.valid_for(t));
  for (unsigned m = 1; m <= 4; ++m) {
    EXPECT_EQ(valuation_image(good, {static_cast<std::int64_t>(m), 0}, m), (LatticePoint{0, 0}));
    for (const auto& a : sections(t, m)) {
      for (auto c : valuation_image(good, a, m)) EXPECT_GE(c, 0);
    }
  }
}

TEST(Valuation, IsAdditive) {
  ToricBundle t(hull_of({{0, 0}, {4, 1}, {1, 3}}, 2));
  for (const auto& nu : common_flags(std::span<const ToricBundle>(&t, 1), 6)) {
    const auto s1 = sections(t, 1), s2 = sections(t, 2);
    for (const auto& a : s1) {
      for (const auto& b : s2) {
        const LatticePoint c{a[0] + b[0], a[1] + b[1]};
        const auto va = valuation_image(nu, a, 1), vb = valuation_image(nu, b, 2), vc = valuation_image(nu, c, 3);
        EXPECT_EQ(vc, (LatticePoint{va[0] + vb[0], va[1] + vb[1]}));
      }
    }
  }
}

TEST(Approximant, TrivialFlagOnSimplex) {
  ToricBundle t = simplex_bundle(2, 1);
  EXPECT_EQ(approximant(t, trivial_flag(2), 1), t.polytope());
}

TEST(Approximant, ExactInThePlane) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 8; ++i) {
    ToricBundle t(random_polytope(rng, 2, 3 + i % 5, 7));
    for (const auto& nu : common_flags(std::span<const ToricBundle>(&t, 1), 3)) {
      const Polytope body = okounkov_body(t, nu);
      for (unsigned m = 1; m <= 4; ++m) EXPECT_EQ(approximant(t, nu, m), body);
    }
  }
}

TEST(Approximant, InclusionChainInSpace) {
  // Lattice tetrahedron without interior or extra boundary points: the
  // fractional vertex content keeps Delta_m strictly growing.
  ToricBundle t(hull_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}}, 3), "reeve");
  const FlagValuation nu = common_flags(std::span<const ToricBundle>(&t, 1), 1).front();
  const Polytope body = okounkov_body(t, nu);
  for (unsigned m : {1u, 2u, 4u}) {
    const Polytope a = approximant(t, nu, m), b = approximant(t, nu, 2 * m);
    EXPECT_TRUE(is_subset(a, b));
    EXPECT_TRUE(is_subset(b, body));
  }
  EXPECT_EQ(volume(body), q("1/2"));
}

TEST(Approximant, GenericSystem) {
  // Semigroup generated in degree 1 by a non-saturated set.
  struct Sparse final : GradedSectionSystem {
    std::size_t dim() const override { return 2; }
    std::vector<LatticePoint> sections(unsigned m) const override {
      const auto k = static_cast<std::int64_t>(m);
      return {{0, 0}, {0, 2 * k}, {2 * k, 0}};
    }
  };
  EXPECT_EQ(approximant(Sparse{}, trivial_flag(2), 3), standard_simplex(2, Rat(2)));
}

TEST(OkounkovBody, VolumeMatchesMomentPolytope) {
  std::mt19937_64 rng(43);
  for (std::size_t d : {2u, 3u}) {
    for (int i = 0; i < 6; ++i) {
      ToricBundle t(random_polytope(rng, d, static_cast<int>(d) + 3, 5));
      for (const auto& nu : common_flags(std::span<const ToricBundle>(&t, 1), 5)) {
        EXPECT_EQ(volume(okounkov_body(t, nu)), volume(t.polytope()));
      }
    }
  }
}

TEST(OkounkovBody, TrivialFlagReturnsPolytope) {
  ToricBundle t(hull_of({{0, 0}, {3, 0}, {1, 2}, {0, 1}}, 2));
  EXPECT_EQ(okounkov_body(t, trivial_flag(2)), t.polytope());
}

TEST(OkounkovBody, ScalesWithPowers) {
  ToricBundle t(hull_of({{1, 0}, {3, 1}, {0, 2}}, 2));
  const FlagValuation nu = adapted_flag(t, 0);
  for (unsigned p = 1; p <= 3; ++p) {
    LatticePoint pv = nu.vertex();
    for (auto& x : pv) x *= p;
    const FlagValuation nup(nu.matrix(), pv);
    EXPECT_EQ(okounkov_body(power(t, p), nup), scale(okounkov_body(t, nu), Rat(static_cast<long>(p))));
  }
}

TEST(OkounkovBody, InvalidFlagThrows) {
  ToricBundle t = simplex_bundle(2, 2);
  EXPECT_THROW(okounkov_body(t, FlagValuation({{1, 0}, {0, 1}}, {1, 0})), ValidityError);
}

TEST(IntersectionNumber, ProjectivePlane) {
  for (long a = 1; a <= 3; ++a) {
    for (long b = 1; b <= 3; ++b) {
      const ToricBundle ts[] = {simplex_bundle(2, a), simplex_bundle(2, b)};
      EXPECT_EQ(intersection_number(ts), Rat(a * b));
    }
  }
}

TEST(IntersectionNumber, ProductOfLines) {
  const ToricBundle ts[] = {box_bundle({1, 1}), box_bundle({1, 2})};
  EXPECT_EQ(intersection_number(ts), Rat(3));
}

TEST(IntersectionNumber, DiagonalIsSelfIntersection) {
  std::mt19937_64 rng(47);
  for (std::size_t d : {2u, 3u}) {
    ToricBundle t(random_polytope(rng, d, 6, 4));
    const std::vector<ToricBundle> ts(d, t);
    const Rat n = intersection_number(ts);
    EXPECT_EQ(n, factorial(static_cast<unsigned>(d)) * volume(t.polytope()));
    EXPECT_TRUE(n.is_integer());
  }
}

TEST(IntersectionNumber, DimensionMismatch) {
  const ToricBundle ts[] = {simplex_bundle(2, 1), simplex_bundle(3, 1)};
  EXPECT_THROW(intersection_number(ts), ValidityError);
}

TEST(TheoremCheck, Examples) {
  {
    const ToricBundle ts[] = {simplex_bundle(2, 1), simplex_bundle(2, 2)};
    for (const auto& nu : common_flags(ts, 5)) {
      auto rep = theorem_check(ts, nu);
      EXPECT_TRUE(rep.passed());
      EXPECT_EQ(rep.checks().front().lhs, Rat(2));
      EXPECT_EQ(rep.checks().front().rhs, Rat(2));
    }
  }
  {
    const ToricBundle ts[] = {box_bundle({1, 1}), box_bundle({1, 2})};
    auto rep = theorem_check(ts, common_flags(ts, 1).front());
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.checks().front().rhs, Rat(3));
  }
}

TEST(TheoremCheck, FlagInvarianceOnRandomTuples) {
  std::mt19937_64 rng(53);
  for (std::size_t d : {2u, 3u}) {
    for (int i = 0; i < 3; ++i) {
      std::vector<ToricBundle> ts;
      for (std::size_t j = 0; j < d; ++j) ts.emplace_back(random_polytope(rng, d, static_cast<int>(d) + 2, 4));
      const auto flags = common_flags(ts, 5);
      ASSERT_EQ(flags.size(), 5u);
      for (const auto& nu : flags) EXPECT_TRUE(theorem_check(ts, nu).passed());
    }
  }
}

TEST(TheoremCheck, ReportsBundleWithoutCommonFlag) {
  const ToricBundle ts[] = {ToricBundle(standard_simplex(2, Rat(1)), "a"),
                            ToricBundle(translate(standard_simplex(2, Rat(1)), pt({-1, 0})), "b")};
  try {
    theorem_check(ts, trivial_flag(2));
    FAIL() << "expected ValidityError";
  } catch (const ValidityError& e) {
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos) << e.what();
  }
}

TEST(CommonFlags, DistinctAndValid) {
  const ToricBundle ts[] = {simplex_bundle(3, 2), box_bundle({1, 2, 3})};
  const auto flags = common_flags(ts, 8);
  ASSERT_EQ(flags.size(), 8u);
  for (std::size_t i = 0; i < flags.size(); ++i) {
    for (const auto& t : ts) EXPECT_TRUE(flags[i].valid_for(t));
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(flags[i] == flags[j]);
  }
}

TEST(Subadditivity, EqualBundles) {
  ToricBundle t = simplex_bundle(2, 1);
  auto rep = subadditivity_check(t, t, trivial_flag(2), 2);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.cases(), 4u);
}

TEST(Subadditivity, SimplexAndSquare) {
  const ToricBundle ts[] = {simplex_bundle(2, 1), box_bundle({1, 1})};
  for (const auto& nu : common_flags(ts, 5)) {
    auto rep = subadditivity_check(ts[0], ts[1], nu, 3);
    EXPECT_TRUE(rep.passed());
  }
}

TEST(MuThreshold, HandValues) {
  ToricBundle sq = box_bundle({1, 1});
  const std::size_t f = facet_with_normal(sq, {Rat(1), Rat(0)});
  EXPECT_EQ(mu_threshold(sq, f), Rat(1));
  for (long r = 1; r <= 4; ++r) {
    ToricBundle t = simplex_bundle(2, r);
    EXPECT_EQ(mu_threshold(t, facet_with_normal(t, {Rat(1), Rat(0)})), Rat(r));
    // The hypotenuse x + y <= r has inner normal (-1, -1).
    EXPECT_EQ(mu_threshold(t, facet_with_normal(t, {Rat(-1), Rat(-1)})), Rat(r));
  }
  EXPECT_THROW(mu_threshold(sq, 4), ValidityError);
}

TEST(MuThreshold, TighteningBeyondKillsFullDimension) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 10; ++i) {
    ToricBundle t(random_polytope(rng, 2, 5, 6));
    for (std::size_t f = 0; f < t.polytope().hrep().facets.size(); ++f) {
      const Rat mu = mu_threshold(t, f);
      const auto& h = t.polytope().hrep().facets[f];
      EXPECT_TRUE(clip(t.polytope(), h.normal, h.offset - mu + q("1/3")).full_dimensional());
      EXPECT_FALSE(clip(t.polytope(), h.normal, h.offset - mu).full_dimensional());
      EXPECT_TRUE(clip(t.polytope(), h.normal, h.offset - mu - q("1/3")).empty());
    }
  }
}

TEST(AdaptedFlag, FirstRowIsInnerNormal) {
  std::mt19937_64 rng(61);
  for (std::size_t d : {2u, 3u}) {
    for (int i = 0; i < 5; ++i) {
      ToricBundle t(random_polytope(rng, d, static_cast<int>(d) + 3, 7));
      for (std::size_t f = 0; f < t.polytope().hrep().facets.size(); ++f) {
        const FlagValuation nu = adapted_flag(t, f);
        const InnerFacet h = inner_facet(t, f);
        Vec row;
        for (auto x : nu.matrix()[0]) row.emplace_back(static_cast<long>(x));
        EXPECT_EQ(row, h.normal);
        Point v;
        for (auto x : nu.vertex()) v.emplace_back(static_cast<long>(x));
        EXPECT_EQ(dot(row, v), h.offset);
        EXPECT_TRUE(nu.valid_for(t));
      }
    }
  }
}

TEST(SliceFormula, SimplexFamily) {
  for (std::size_t d : {2u, 3u}) {
    const long r = 3;
    ToricBundle t = simplex_bundle(d, r);
    Vec e1(d);
    e1[0] = Rat(1);
    const std::size_t f = facet_with_normal(t, e1);
    const FlagValuation nu = adapted_flag(t, f);
    const std::vector<Rat> taus{q("0"), q("1/2"), q("1"), q("3/2"), q("2"), q("5/2"), q("3"), q("4")};
    auto rep = slice_formula_check(t, nu, f, taus);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.cases(), 7u);
    EXPECT_EQ(rep.notes().size(), 1u);  // tau = mu
    for (const auto& c : rep.checks()) {
      const Rat tau = Rat::parse(c.name.substr(c.name.find('@') + 1));
      if (tau < Rat(r)) {
        EXPECT_EQ(c.lhs, pow(Rat(r) - tau, static_cast<unsigned>(d - 1)) / factorial(static_cast<unsigned>(d - 1)));
      } else {
        EXPECT_EQ(c.lhs, Rat(0));
      }
    }
  }
}

TEST(SliceFormula, EveryFacetOfRandomPolytopes) {
  std::mt19937_64 rng(67);
  for (std::size_t d : {2u, 3u}) {
    for (int i = 0; i < 4; ++i) {
      ToricBundle t(random_polytope(rng, d, static_cast<int>(d) + 3, 6));
      for (std::size_t f = 0; f < t.polytope().hrep().facets.size(); ++f) {
        const Rat mu = mu_threshold(t, f);
        const std::vector<Rat> taus{Rat(0), mu / Rat(3), mu / Rat(2), mu * q("5/6"), mu + Rat(1)};
        EXPECT_TRUE(slice_formula_check(t, adapted_flag(t, f), f, taus).passed());
      }
    }
  }
}

TEST(SliceFormula, FlagMustMatchFacet) {
  ToricBundle t = simplex_bundle(2, 2);
  const std::size_t f = facet_with_normal(t, {Rat(-1), Rat(-1)});
  const std::vector<Rat> taus{Rat(1)};
  EXPECT_THROW(slice_formula_check(t, trivial_flag(2), f, taus), ValidityError);
}

TEST(Lemma51, SimplexFamilyPassesEndToEnd) {
  for (std::size_t d : {2u, 3u}) {
    std::vector<ToricBundle> ts{simplex_bundle(d, 2)};
    for (std::size_t j = 1; j < d; ++j) ts.push_back(simplex_bundle(d, static_cast<long>(j + 2)));
    Vec e1(d);
    e1[0] = Rat(1);
    const std::size_t f = facet_with_normal(ts[0], e1);
    const FlagValuation nu = adapted_flag(ts[0], f);
    auto rep = lemma51_check(ts, nu, mu_threshold(ts[0], f));
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.checks().back().name, "slice_identity");
    EXPECT_TRUE(theorem_check(ts, nu).passed());
  }
}

TEST(Lemma51, SquareFailsConditionA) {
  const ToricBundle ts[] = {box_bundle({1, 1}), box_bundle({1, 1})};
  const std::size_t f = facet_with_normal(ts[0], {Rat(1), Rat(0)});
  const FlagValuation nu = adapted_flag(ts[0], f);
  auto rep = lemma51_check(ts, nu, Rat(1));
  EXPECT_FALSE(rep.passed());
  ASSERT_FALSE(rep.notes().empty());
  EXPECT_NE(rep.notes().front().find("cone"), std::string::npos);
  EXPECT_THROW(lemma51_check(ts, nu, Rat(2)), ValidityError);
}

TEST(Json, RoundTripAndErrors) {
  ToricBundle t(hull_of({{0, 0}, {2, 0}, {0, 3}}, 2), "tri");
  ToricBundle back = bundle_from_json(bundle_to_json(t));
  EXPECT_EQ(back.polytope(), t.polytope());
  EXPECT_EQ(back.label(), "tri");
  FlagValuation nu({{1, 1}, {0, 1}}, {0, 0});
  EXPECT_TRUE(flag_from_json(flag_to_json(nu)) == nu);
  EXPECT_THROW(flag_from_json(nlohmann::json::parse(R"({"matrix": [[1, 0.5], [0, 1]], "vertex": [0, 0]})")),
               ParseError);
  EXPECT_THROW(flag_from_json(nlohmann::json::parse(R"({"matrix": [[1, 0], [0, 1]]})")), ParseError);
  EXPECT_THROW(bundle_from_json(nlohmann::json::parse(R"({"dim": 3, "polytope": {"dim": 2, "vertices": [[0,0],[1,0],[0,1]]}})")),
               ParseError);
  EXPECT_THROW(bundle_from_json(nlohmann::json::parse(R"({"polytope": {"dim": 2, "vertices": [[0,0],[1,0]]}})")),
               ValidityError);
}

}  // namespace
