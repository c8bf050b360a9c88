#include <gtest/gtest.h>

#include <set>

#include "ramanujan/combinatorics.hpp"
#include "ramanujan/half_mobile.hpp"
#include "ramanujan/json_io.hpp"
#include "ramanujan/qpolys.hpp"

using namespace ramanujan;
using namespace ramanujan::halfmobile;

namespace {

nlohmann::json load(const std::string& name) { return io::read_file(std::string(FIXTURE_DIR) + "/" + name); }

const char* kFig4Image = "3([8,13(1,[10,11,6])]); [7,2(4,9([12,5]))]";

}  // namespace

TEST(HalfMobile, FigureFourForward) {
  const auto tree = io::tree_from_json(load("fig4_tree.json"));
  const auto forest = theta(tree);
  EXPECT_EQ(to_string(forest), kFig4Image);
  EXPECT_EQ(forest, io::hm_from_json(load("fig4_forest.json")));
  const auto s = hm_stats(forest);
  EXPECT_EQ(s.tree, 2);
  EXPECT_EQ(s.bdeg, 5);
  EXPECT_EQ(s.imp, 4);
}

TEST(HalfMobile, FigureFourBackward) {
  const auto forest = io::hm_from_json(load("fig4_forest.json"));
  EXPECT_FALSE(validate(forest).has_value());
  EXPECT_EQ(theta_inv(forest), io::tree_from_json(load("fig4_tree.json")));
}

TEST(HalfMobile, TextAndJsonRoundTrip) {
  const auto f = parse_forest(kFig4Image);
  EXPECT_EQ(to_string(f), kFig4Image);
  EXPECT_EQ(io::hm_from_json(io::hm_to_json(f)), f);
  // rotation of a black vertex and reordering of white children are the same forest
  EXPECT_EQ(parse_forest("[2(9([5,12]),4),7]; 3([13(1,[6,10,11]),8])"), f);
}

TEST(HalfMobile, ValidationNamesThePath) {
  HalfMobileForest bad;
  bad.n = 3;
  bad.components = {HmNode::white(1, {HmNode::blackv({HmNode::white(2)})}), HmNode::white(3)};
  const auto err = validate(bad);
  ASSERT_TRUE(err.has_value());
  EXPECT_NE(err->find("components[0].children[0]"), std::string::npos) << *err;

  HalfMobileForest missing;
  missing.n = 3;
  missing.components = {HmNode::white(1), HmNode::white(3)};
  EXPECT_TRUE(validate(missing).has_value());
  EXPECT_THROW(theta_inv(missing), HmError);
  EXPECT_THROW(io::hm_from_json(nlohmann::json::parse(R"({"components":[{"kind":"grey","children":[]}]})")),
               io::InputError);
}

TEST(HalfMobile, ThetaNeedsRootOne) {
  EXPECT_THROW(theta(trees::PlaneTree::parse("2(1,3)")), HmError);
}

TEST(HalfMobile, ImageEqualsDirectGenerator) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> image;
    enumerate_hm(n, std::nullopt, [&](const HalfMobileForest& f, const HmStats&) { image.insert(to_string(f)); });
    std::set<std::string> direct;
    enumerate_hm_direct(n, [&](const HalfMobileForest& f) {
      EXPECT_FALSE(validate(f).has_value());
      direct.insert(to_string(f));
    });
    EXPECT_EQ(image, direct) << n;
    EXPECT_EQ(Integer(static_cast<unsigned long>(direct.size())), factorial(n) * catalan(n));
  }
}

TEST(HalfMobile, ThreeVariableGeneratingFunction) {
  const auto& u = qpolys::xyzt();
  for (int n = 1; n <= 5; ++n) {
    Poly sum(u);
    enumerate_hm_direct(n, [&](const HalfMobileForest& f) {
      const auto s = hm_stats(f);
      sum += Poly::variable(u, "x").pow(s.tree - 1) * Poly::variable(u, "y").pow(s.imp) *
             Poly::variable(u, "t").pow(s.bdeg);
    });
    EXPECT_EQ(sum, qpolys::q_n(n).substitute({{"z", Poly(u, Integer(1))}})) << n;
  }
}

TEST(HalfMobile, FilterByImp) {
  std::size_t seen = 0;
  enumerate_hm(3, 1, [&](const HalfMobileForest&, const HmStats& s) {
    EXPECT_EQ(s.imp, 1);
    ++seen;
  });
  // Q_{3,1}(1,1) = 3 + 4 + 5
  EXPECT_EQ(seen, 12u);
}
