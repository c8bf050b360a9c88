#include <gtest/gtest.h>

#include "ramanujan/combinatorics.hpp"
#include "ramanujan/forests.hpp"
#include "ramanujan/json_io.hpp"
#include "ramanujan/qpolys.hpp"

using namespace ramanujan;
using namespace ramanujan::forests;

TEST(Forests, PlantedCountSumsToCayley) {
  for (int n = 1; n <= 7; ++n) {
    Integer total = 0;
    for (const auto& d : degree_sequences(n, n - 1)) total += planted_count(d);
    EXPECT_EQ(total, power(Integer(n), n - 1)) << n;
  }
}

TEST(Forests, PlantedCountAllForestsIsRootedTreesOnNPlusOne) {
  // Forests of rooted trees on [n] correspond to rooted trees on [n+1]
  // rooted at n+1: (n+1)^(n-1).
  for (int n = 1; n <= 6; ++n) {
    Integer total = 0;
    for (int k = 1; k <= n; ++k) {
      for (const auto& d : degree_sequences(n, n - k)) total += planted_count(d);
    }
    EXPECT_EQ(total, power(Integer(n + 1), n - 1)) << n;
  }
}

TEST(Forests, PlantedCountRejectsBadInput) {
  const long neg[] = {-1, 2};
  EXPECT_THROW(planted_count(neg), std::invalid_argument);
  const long too_many[] = {3, 0};
  EXPECT_THROW(planted_count(too_many), std::invalid_argument);
}

TEST(Forests, TypeVectorsAndTypes) {
  const long d[] = {2, 0, 1, 0};
  EXPECT_EQ(type_of(d), (std::vector<long>{2, 1, 1}));
  for (const auto& r : type_vectors(4)) {
    long n = 0;
    long k = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      n += r[i];
      k += (1 - static_cast<long>(i)) * r[i];
    }
    EXPECT_EQ(n, 4);
    EXPECT_GE(k, 1);
    EXPECT_NE(r.back(), 0);
  }
  const long bad[] = {0, 2};
  EXPECT_THROW(type_count(bad, TypeFlavor::kPlanted), std::invalid_argument);
}

TEST(Forests, UnlabeledPlaneTreesByTypeSumToCatalan) {
  for (int n = 1; n <= 8; ++n) {
    Integer trees = 0;
    for (const auto& r : type_vectors(n)) {
      long k = 0;
      for (std::size_t i = 0; i < r.size(); ++i) k += (1 - static_cast<long>(i)) * r[i];
      if (k == 1) trees += type_count(r, TypeFlavor::kPlaneUnlabeled);
    }
    EXPECT_EQ(trees, catalan(n - 1)) << n;
  }
}

TEST(Forests, FixedRootForestsAgainstQnk) {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n && r <= 3; ++r) {
      const auto polys = forest_generating_polys(n, r);
      const Universe& u = polys.begin()->second.universe();
      for (int k = 0; k < n - r; ++k) {
        const Poly q = qpolys::q_nk(n - r, k).substitute({{"x", Poly(qpolys::xt(), Integer(r))}}).in(u);
        EXPECT_EQ(polys.at(k), Integer(r) * q) << n << "," << r << "," << k;
      }
    }
  }
  EXPECT_THROW(forest_generating_polys(3, 3), std::invalid_argument);
  EXPECT_THROW(enumerate_fixed_root_forests(3, 4, std::nullopt, [](const RootedPlaneForest&, const ForestStats&) {}),
               std::invalid_argument);
}

TEST(Forests, FixedRootForestCount) {
  // roots 1..r, in order; the total is the k-sum at t = 1
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n && r <= 3; ++r) {
      std::size_t seen = 0;
      enumerate_fixed_root_forests(n, r, std::nullopt, [&](const RootedPlaneForest& f, const ForestStats&) {
        ASSERT_EQ(f.components.size(), static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) ASSERT_EQ(f.components[i].root(), i + 1);
        ++seen;
      });
      Integer expect = 0;
      for (int k = 0; k < n - r; ++k) {
        expect += Integer(r) * qpolys::q_nk(n - r, k).evaluate({{"x", Integer(r)}, {"t", Integer(1)}});
      }
      EXPECT_EQ(Integer(static_cast<unsigned long>(seen)), expect);
    }
  }
}

TEST(Forests, JsonRoundTrip) {
  RootedPlaneForest f;
  f.components = {trees::PlaneTree::parse("1(4)"), trees::PlaneTree::parse("2(3,5)")};
  const auto back = io::forest_from_json(io::forest_to_json(f));
  ASSERT_EQ(back.components.size(), 2u);
  EXPECT_EQ(back.components[1], f.components[1]);
}
