#include <gtest/gtest.h>

#include "goodsg/arf.hpp"
#include "goodsg/constructions.hpp"
#include "goodsg/good_semigroup.hpp"
#include "oracle.hpp"
#include "random_semigroups.hpp"

using goodsg::Axiom;
using goodsg::GoodSemigroup;
using goodsg::IndexSet;
using goodsg::NumericalIdeal;
using goodsg::NumericalSemigroup;
using goodsg::Point;
using goodsg::SmallSet;

namespace {

using Points = std::vector<Point>;

NumericalSemigroup ns(std::vector<goodsg::Coord> g) {
  return NumericalSemigroup::from_generators(std::move(g));
}

GoodSemigroup dup23() {
  auto const s = ns({2, 3});
  return goodsg::duplication(s, NumericalIdeal::from_generators(s, {6}));
}

GoodSemigroup plane_curve() {
  return goodsg::from_maximal_elements(
      ns({4, 6, 13}), ns({2, 3}),
      {{0, 0}, {4, 2}, {6, 3}, {8, 4}, {10, 5}, {12, 6}, {14, 7}, {16, 8},
       {18, 9}, {20, 10}, {24, 12}, {22, 11}, {28, 14}});
}

Points const kBig25 = {{4, 3},   {7, 13},  {11, 17}, {14, 27},
                       {15, 27}, {16, 20}, {25, 12}, {25, 16}};

}  // namespace

TEST(ClosureSmall, NonGoodFigures) {
  EXPECT_EQ(goodsg::closure_small({{2, 2}, {4, 2}}, {6, 6}).points(),
            (Points{{0, 0}, {2, 2}, {4, 2}, {4, 4}, {6, 4}, {6, 6}}));
  EXPECT_EQ(goodsg::closure_small({{3, 4}, {7, 8}}, {8, 10}).points(),
            (Points{{0, 0}, {3, 4}, {6, 8}, {7, 8}, {8, 10}}));
  Points const sixteen = {
      {0, 0},   {4, 4},   {4, 8},   {6, 4},   {6, 8},   {6, 12},
      {8, 4},   {8, 8},   {8, 12},  {8, 16},  {10, 8},  {10, 12},
      {10, 16}, {12, 8},  {12, 12}, {12, 16}, {14, 8},  {14, 12},
      {14, 16}, {16, 8},  {16, 12}, {16, 16}};
  EXPECT_EQ(goodsg::closure_small({{4, 8}, {8, 4}, {6, 12}}, {16, 16}).points(),
            sixteen);
}

TEST(ClosureSmall, RejectsNegativeInput) {
  EXPECT_THROW(goodsg::closure_small({{-1, 2}}, {4, 4}), goodsg::InvalidArgument);
  EXPECT_THROW(goodsg::closure_small({{1, 2}}, {4, -4}), goodsg::InvalidArgument);
  EXPECT_THROW(goodsg::closure_small({{1, 2, 3}}, {4, 4}),
               goodsg::DimensionMismatch);
}

TEST(NormalizeConductor, LowersTop) {
  auto const x = goodsg::normalize_conductor(
      goodsg::closure_small({{4, 3}, {3, 4}}, {6, 7}));
  EXPECT_EQ(x.top(), (Point{6, 6}));
  EXPECT_EQ(x.points(), (Points{{0, 0}, {3, 3}, {3, 4}, {4, 3}, {6, 6}}));

  auto const y = goodsg::normalize_conductor(
      goodsg::closure_small({{5, 3}, {3, 4}}, {6, 7}));
  EXPECT_EQ(y.top(), (Point{6, 6}));
  EXPECT_EQ(y.points(), (Points{{0, 0}, {3, 3}, {3, 4}, {5, 3}, {6, 6}}));

  auto const s = dup23();
  EXPECT_EQ(goodsg::normalize_conductor(s.small()), s.small());
}

TEST(Validate, AcceptsProduct) {
  Points pts;
  for (auto x : {0, 3, 5}) {
    for (auto y : {0, 4, 5, 8, 9, 10, 12}) {
      pts.push_back(Point{x, y});
    }
  }
  EXPECT_TRUE(goodsg::validate_small_set(SmallSet(pts)).ok());
}

TEST(Validate, ReportsLiftingFailures) {
  auto const r1 = goodsg::validate_small_set(
      goodsg::closure_small({{2, 2}, {4, 2}}, {6, 6}));
  EXPECT_EQ(r1.violated, Axiom::kLifting);
  EXPECT_EQ(r1.witness, (Points{{2, 2}, {4, 2}}));

  auto const r2 = goodsg::validate_small_set(
      goodsg::closure_small({{3, 4}, {7, 8}}, {8, 10}));
  EXPECT_EQ(r2.violated, Axiom::kLifting);
  EXPECT_EQ(r2.witness, (Points{{6, 8}, {7, 8}}));
}

TEST(Validate, ReportsOtherAxioms) {
  EXPECT_EQ(goodsg::validate_small_set(SmallSet({{1, 1}, {2, 2}})).violated,
            Axiom::kZero);
  EXPECT_EQ(
      goodsg::validate_small_set(SmallSet({{0, 0}, {2, 1}, {1, 2}, {3, 3}}))
          .violated,
      Axiom::kMeet);
  EXPECT_EQ(goodsg::validate_small_set(SmallSet({{0, 0}, {2, 2}, {5, 5}}))
                .violated,
            Axiom::kAddition);
  // R(X) already contains (1,1) + N^2.
  EXPECT_EQ(goodsg::validate_small_set(
                SmallSet({{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}))
                .violated,
            Axiom::kConductor);
}

TEST(FromGenerators, BigExample) {
  auto const s = goodsg::good_semigroup_from_generators(kBig25, {25, 27});
  EXPECT_EQ(s.conductor(), (Point{25, 27}));
}

TEST(FromGenerators, RejectsNonGood) {
  try {
    goodsg::good_semigroup_from_generators({{2, 2}, {4, 2}}, {6, 6});
    FAIL() << "expected NotGoodSemigroup";
  } catch (goodsg::NotGoodSemigroup const& e) {
    EXPECT_EQ(e.report().violated, Axiom::kLifting);
    EXPECT_EQ(e.candidate().size(), 6U);
  }
}

TEST(FromGenerators, ConductorOnly) {
  auto const s = goodsg::good_semigroup_from_generators({{1, 1}}, {1, 1});
  EXPECT_EQ(s.small_elements(), (Points{{0, 0}, {1, 1}}));
}

TEST(Contains, Duplication) {
  auto const s = dup23();
  EXPECT_TRUE(s.contains({6, 100}));
  EXPECT_FALSE(s.contains({7, 9}));
  EXPECT_TRUE(s.contains({9, 9}));
  EXPECT_FALSE(s.contains({-1, 9}));
}

TEST(Subset, ChainLevels) {
  auto const s = goodsg::good_semigroup_from_generators({{4, 3}, {3, 4}}, {6, 7});
  EXPECT_TRUE(goodsg::is_subset(s, s));
  auto const t = goodsg::arf_closure(ns({3, 4}));
  auto const t1 = goodsg::build_chain_level(t, t, 1);
  auto const t2 = goodsg::build_chain_level(t, t, 2);
  EXPECT_TRUE(goodsg::is_subset(s, t1));
  EXPECT_FALSE(goodsg::is_subset(s, t2));
  auto const w = goodsg::subset_witness(s, t2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (Point{3, 4}));
  EXPECT_TRUE(s.contains({4, 3}) && !t2.contains({4, 3}));
}

TEST(Borders, Duplication) {
  auto const s = dup23();
  EXPECT_EQ(goodsg::border(s, IndexSet{0}), (Points{{8, 6}, {8, 8}}));
  EXPECT_EQ(goodsg::border(s, IndexSet{1}), (Points{{6, 8}, {8, 8}}));
  EXPECT_EQ(goodsg::border(s, IndexSet{}), s.small_elements());
  EXPECT_EQ(goodsg::border(s, IndexSet::all(2)), (Points{{8, 8}}));
}

TEST(IsLocal, Examples) {
  EXPECT_FALSE(goodsg::is_local(goodsg::cartesian(ns({3, 5, 7}), ns({2, 5}))));
  EXPECT_TRUE(goodsg::is_local(dup23()));
  EXPECT_TRUE(goodsg::is_local(
      GoodSemigroup::from_small(SmallSet({{0, 0}, {1, 1}}))));
  EXPECT_FALSE(goodsg::is_local(GoodSemigroup::from_small(SmallSet({{0, 0}}))));
}

TEST(MaximalElements, Examples) {
  auto const s = goodsg::good_semigroup_from_generators(kBig25, {25, 27});
  EXPECT_EQ(goodsg::maximal_elements(s),
            (Points{{0, 0}, {4, 3}, {7, 13}, {8, 6}, {11, 17}, {12, 9}, {16, 20},
                    {20, 23}, {24, 26}}));
  EXPECT_EQ(goodsg::maximal_elements(plane_curve()),
            (Points{{0, 0}, {4, 2}, {6, 3}, {8, 4}, {10, 5}, {12, 6}, {14, 7},
                    {16, 8}, {18, 9}, {20, 10}, {22, 11}, {24, 12}, {28, 14}}));
  EXPECT_EQ(goodsg::maximal_elements(
                GoodSemigroup::from_small(SmallSet({{0, 0}, {3, 2}}))),
            (Points{{0, 0}}));
}

TEST(DeltaFiber, Examples) {
  auto const s = plane_curve();
  EXPECT_FALSE(goodsg::delta_fiber_nonempty(s, {28, 14}, 0));
  EXPECT_FALSE(goodsg::delta_fiber_nonempty(s, {28, 14}, 1));
  EXPECT_TRUE(goodsg::delta_fiber_nonempty(s, {29, -7}, 0));
  EXPECT_FALSE(goodsg::delta_fiber_nonempty(s, {-1, 5}, 0));
  auto const cube = goodsg::good_semigroup_from_generators({{1, 1, 1}}, {1, 1, 1});
  EXPECT_THROW(goodsg::delta_fiber_nonempty(cube, {0, 0, 0}, 0),
               goodsg::UnsupportedDimension);
  EXPECT_THROW(goodsg::maximal_elements(cube), goodsg::UnsupportedDimension);
}

TEST(Projection, Examples) {
  auto const s = GoodSemigroup::from_small(
      SmallSet({{0, 0}, {3, 3}, {3, 4}, {5, 3}, {6, 6}}));
  EXPECT_EQ(goodsg::projection(s, 0), ns({3, 5, 7}));
  EXPECT_EQ(goodsg::projection(s, 1), ns({3, 4}));
  auto const p = goodsg::cartesian(ns({3, 5, 7}), ns({4, 5}));
  EXPECT_EQ(goodsg::projection(p, 0), ns({3, 5, 7}));
  EXPECT_EQ(goodsg::projection(p, 1), ns({4, 5}));
}

TEST(GoodSemigroupProperties, ClosureMatchesBruteForce) {
  goodsg::testing::Rng rng(31);
  for (int t = 0; t < 150; ++t) {
    Point const c{std::uniform_int_distribution<goodsg::Coord>(1, 20)(rng),
                  std::uniform_int_distribution<goodsg::Coord>(1, 20)(rng)};
    auto g = goodsg::testing::random_points(rng, c, 1 + t % 4);
    g.push_back(c);  // keeps C in C meet [G]
    ASSERT_EQ(goodsg::closure_small(g, c).points(),
              goodsg::oracle::brute_closure(g, c))
        << "C=" << c;
  }
}

TEST(GoodSemigroupProperties, TruncatedFixpointMatchesUntruncatedClosure) {
  goodsg::testing::Rng rng(32);
  for (int t = 0; t < 60; ++t) {
    Point const c{std::uniform_int_distribution<goodsg::Coord>(2, 12)(rng),
                  std::uniform_int_distribution<goodsg::Coord>(2, 12)(rng)};
    // Generators beyond the box: truncating first must not matter.
    auto g = goodsg::testing::random_points(rng, c + Point{6, 6}, 3);
    Points truncated;
    for (auto const& x : g) {
      truncated.push_back(meet(x, c));
    }
    auto expected = goodsg::oracle::brute_closure(g, c);
    auto const got = goodsg::closure_small(truncated, c).points();
    if (!std::binary_search(expected.begin(), expected.end(), c)) {
      expected.push_back(c);
      std::sort(expected.begin(), expected.end());
    }
    ASSERT_EQ(got, expected);
  }
}

TEST(GoodSemigroupProperties, MembershipMatchesRays) {
  goodsg::testing::Rng rng(33);
  for (int t = 0; t < 100; ++t) {
    auto const s = goodsg::testing::random_local(rng, 15);
    Point const hi = s.conductor() + Point{3, 3};
    for (goodsg::Coord x = 0; x <= hi[0]; ++x) {
      for (goodsg::Coord y = 0; y <= hi[1]; ++y) {
        ASSERT_EQ(s.contains({x, y}), goodsg::oracle::brute_member(s, {x, y}));
      }
    }
  }
}

TEST(GoodSemigroupProperties, SmallElementsGenerateThemselves) {
  goodsg::testing::Rng rng(34);
  for (int t = 0; t < 100; ++t) {
    auto const s = goodsg::testing::random_local(rng, 15);
    EXPECT_EQ(goodsg::closure_small(s.small_elements(), s.conductor()),
              s.small());
  }
}

TEST(GoodSemigroupProperties, SubsetMatchesBoxScan) {
  goodsg::testing::Rng rng(35);
  int hits = 0;
  for (int t = 0; t < 120; ++t) {
    auto const s = goodsg::testing::random_local(rng, 10);
    auto const u = t % 3 == 0 ? goodsg::arf_closure(s)
                              : goodsg::testing::random_local(rng, 10);
    Point const hi = join(s.conductor(), u.conductor()) + Point{2, 2};
    bool expected = true;
    for (goodsg::Coord x = 0; x <= hi[0]; ++x) {
      for (goodsg::Coord y = 0; y <= hi[1]; ++y) {
        if (goodsg::oracle::brute_member(s, {x, y}) &&
            !goodsg::oracle::brute_member(u, {x, y})) {
          expected = false;
        }
      }
    }
    ASSERT_EQ(goodsg::is_subset(s, u), expected);
    hits += expected ? 1 : 0;
  }
  EXPECT_GT(hits, 30);
}

TEST(GoodSemigroupProperties, FibresAndMaximalElementsMatchSearch) {
  goodsg::testing::Rng rng(36);
  for (int t = 0; t < 80; ++t) {
    auto const s = goodsg::testing::random_local(rng, 15);
    Point const& c = s.conductor();
    for (goodsg::Coord x = -1; x <= c[0] + 1; ++x) {
      for (goodsg::Coord y = -1; y <= c[1] + 1; ++y) {
        for (std::size_t i = 0; i < 2; ++i) {
          ASSERT_EQ(goodsg::delta_fiber_nonempty(s, {x, y}, i),
                    goodsg::oracle::brute_fiber(s, {x, y}, i));
        }
      }
    }
    Points brute;
    for (auto const& a : s.small_elements()) {
      if (!goodsg::oracle::brute_fiber(s, a, 0) &&
          !goodsg::oracle::brute_fiber(s, a, 1)) {
        brute.push_back(a);
      }
    }
    ASSERT_EQ(goodsg::maximal_elements(s), brute);
  }
}

TEST(GoodSemigroupProperties, HigherDimensionRoundTrip) {
  auto const s = goodsg::good_semigroup_from_generators(
      {{2, 2, 3}, {3, 3, 2}, {5, 5, 5}}, {6, 6, 6});
  EXPECT_TRUE(goodsg::validate_small_set(s.small()).ok());
  EXPECT_EQ(goodsg::closure_small(s.small_elements(), s.conductor()), s.small());
  EXPECT_TRUE(goodsg::is_local(s));
  EXPECT_THROW(goodsg::projection(s, 0), goodsg::UnsupportedDimension);
}
