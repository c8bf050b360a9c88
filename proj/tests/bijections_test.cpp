#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "ramanujan/bijections.hpp"
#include "ramanujan/combinatorics.hpp"
#include "ramanujan/enumerate.hpp"
#include "ramanujan/json_io.hpp"
#include "ramanujan/tree_stats.hpp"

using namespace ramanujan;
using namespace ramanujan::bijections;
using trees::PlaneTree;

namespace {

nlohmann::json load(const std::string& name) { return io::read_file(std::string(FIXTURE_DIR) + "/" + name); }
PlaneTree T(const std::string& s) { return PlaneTree::parse(s); }

}  // namespace

TEST(Psi, WorkedExample) {
  const auto p = Permutation::from_cycles(8, {{2, 4, 1}, {7, 3}, {5}, {8, 6}});
  EXPECT_EQ(psi(p), (std::vector<int>{2, 4, 1, 7, 3, 5, 8, 6}));
  EXPECT_EQ(psi_inv({2, 4, 1, 7, 3, 5, 8, 6}), p);
  EXPECT_EQ(p.cycles(), (std::vector<std::vector<int>>{{2, 4, 1}, {7, 3}, {5}, {8, 6}}));
}

TEST(Psi, IdentityAndErrors) {
  EXPECT_EQ(psi(Permutation::identity(5)), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_THROW(Permutation({1, 1, 2}), PermutationError);
  EXPECT_THROW(psi_inv({1, 3}), PermutationError);
}

TEST(Psi, BijectiveOnS6WithCycleTransport) {
  std::vector<int> w(6);
  std::iota(w.begin(), w.end(), 1);
  std::set<std::vector<int>> images;
  do {
    const Permutation p(w);
    const auto img = psi(p);
    EXPECT_EQ(p.cycles().size(), trees::right_to_left_minima(img).size());
    EXPECT_EQ(psi_inv(img), p);
    images.insert(img);
  } while (std::next_permutation(w.begin(), w.end()));
  EXPECT_EQ(images.size(), 720u);
}

TEST(Phi, FigureSixTree) {
  const auto fig1 = io::tree_from_json(load("fig1_tree.json"));
  const auto fig6 = io::tree_from_json(load("fig6_tree.json"));
  EXPECT_EQ(phi(fig1), fig6);
  EXPECT_EQ(phi_inv(fig6), fig1);
  const auto s1 = trees::stats(fig1);
  const auto s6 = trees::stats(fig6);
  EXPECT_EQ(s6.really_eld_total, s1.eld_total);
  for (auto v : fig1.labels()) EXPECT_EQ(s6.really_young[v], s1.young[v]);
  // The caption files this tree under six really improper edges; the
  // definitions give five.
  EXPECT_EQ(s1.improper(), 6);
  EXPECT_EQ(s6.really_improper(), 5);
}

TEST(Phi, IncreasingTreesAreFixed) {
  trees::EnumSpec spec = trees::EnumSpec::on(5);
  spec.increasing_only = true;
  trees::enumerate(spec, [&](const PlaneTree& t, const trees::TreeStats&) { EXPECT_EQ(phi(t), t); });
}

TEST(Phi, BijectionOnP4WithTransport) {
  std::set<PlaneTree> images;
  std::map<int, int> by_improper;
  std::map<int, int> by_really_improper;
  trees::enumerate(trees::EnumSpec::on(4), [&](const PlaneTree& t, const trees::TreeStats& s) {
    const auto p = phi(t);
    const auto sp = trees::stats(p);
    EXPECT_EQ(phi_inv(p), t);
    EXPECT_EQ(sp.really_eld_total, s.eld_total);
    images.insert(p);
    ++by_improper[s.improper()];
    ++by_really_improper[sp.really_improper()];
  });
  EXPECT_EQ(images.size(), 120u);
  // The improper distribution is not carried over at n = 4.
  EXPECT_EQ(by_improper[1], 45);
  EXPECT_EQ(by_really_improper[1], 46);
}

TEST(Contract, FigureSevenToFigureTwoE) {
  const auto fig7 = load("fig7_pair.json");
  const auto fig2e = load("fig2e_pair.json");
  const auto t1 = io::tree_from_json(fig2e["T1"]);
  const auto t2 = io::tree_from_json(fig2e["T2"]);
  const auto t3 = io::tree_from_json(fig7["T3"]);
  const auto t4 = io::tree_from_json(fig7["T4"]);
  EXPECT_EQ(contract(t3, 2, 5), t1);
  EXPECT_EQ(contract(t4, 2, 5), t2);
  EXPECT_TRUE(i_equivalent(t1, t2, 2));
  EXPECT_FALSE(i_equivalent(t1, t2, 3));
  EXPECT_TRUE(ij_equivalent(t3, t4, 2, 5));
  EXPECT_TRUE(ij_equivalent(t3, t3, 2, 5));
  EXPECT_FALSE(ij_equivalent(t3, t1, 2, 5));
}

TEST(Contract, SmallCases) {
  EXPECT_EQ(contract(T("1(2)"), 1, 2), PlaneTree::single(1));
  EXPECT_EQ(contract(T("1(3,2,4)"), 1, 2), T("1(3,4)"));
  EXPECT_EQ(contract(T("1(3,2(5,6),4)"), 1, 2), T("1(3,5,6,4)"));
  EXPECT_THROW(contract(T("1(3,2)"), 3, 2), trees::TreeError);
}

TEST(Contract, ClassSizesAndMembers) {
  const auto t = T("3(9,2(6(4,7),5(8),1(10)))");
  const auto cls = ij_class(t, 2, 5);
  // contraction leaves 2 with m = 3 children: m! orders, (m+1)(m+2)/2 runs
  EXPECT_EQ(cls.size(), 6u * 10u);
  std::set<PlaneTree> uniq(cls.begin(), cls.end());
  EXPECT_EQ(uniq.size(), cls.size());
  for (const auto& c : cls) {
    EXPECT_TRUE(ij_equivalent(c, t, 2, 5));
    EXPECT_EQ(c.size(), t.size());
  }
  EXPECT_EQ(i_class(T("1(2,3,4)"), 1).size(), 6u);
}

TEST(RootSwap, SmallCasesAndInverse) {
  EXPECT_EQ(root_swap12(T("1(2)")), T("2(1)"));
  EXPECT_THROW(root_swap12(T("2(1)")), trees::TreeError);
  for (int n = 2; n <= 5; ++n) {
    std::set<PlaneTree> image;
    trees::enumerate(trees::EnumSpec::rooted(n, 1), [&](const PlaneTree& t, const trees::TreeStats& s) {
      const auto p = root_swap12(t);
      const auto sp = trees::stats(p);
      EXPECT_EQ(p.root(), 2);
      EXPECT_EQ(root_swap(p, 2, 1), t);
      EXPECT_EQ(sp.eld_total, s.eld_total);
      EXPECT_EQ(sp.young[1] + 1, s.young[1]);
      EXPECT_EQ(sp.young[2], s.young[2] + 1);
      image.insert(p);
    });
    EXPECT_EQ(Integer(static_cast<unsigned long>(image.size())), factorial(n - 1) * catalan(n - 1));
  }
}
