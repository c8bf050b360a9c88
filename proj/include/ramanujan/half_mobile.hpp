#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramanujan/enumerate.hpp"
#include "ramanujan/plane_tree.hpp"

namespace ramanujan::halfmobile {

using trees::Label;

// White vertices carry a label; black ones carry none.  Children of a
// white vertex are unordered and kept sorted by beta.  Children of a black
// vertex are a cyclic order, stored as the rotation whose last entry has
// the smallest beta.
struct HmNode {
  bool black = false;
  Label label = 0;
  std::vector<HmNode> children;

  static HmNode white(Label label, std::vector<HmNode> children = {});
  static HmNode blackv(std::vector<HmNode> children);

  bool operator==(const HmNode&) const = default;
};

struct HalfMobileForest {
  int n = 0;  // white labels are 1..n
  std::vector<HmNode> components;

  bool operator==(const HalfMobileForest&) const = default;
};

class HmError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HmStats {
  int imp = 0;
  int tree = 0;
  int bdeg = 0;
  bool operator==(const HmStats&) const = default;
};

// Smallest white label below (and including) the node.
Label beta(const HmNode& node);

// Sorts white children and components by beta and rotates black children
// so the smallest beta comes last.  Does not check the other invariants.
void canonicalize(HmNode& node);
void canonicalize(HalfMobileForest& forest);

// First violated invariant, prefixed by the path to the offending node
// (e.g. "components[1].children[0]: ..."), or nullopt when valid.
std::optional<std::string> validate(const HalfMobileForest& forest);

// Requires a valid forest.  A black component root has no father, so its
// rightmost edge is proper.
HmStats hm_stats(const HalfMobileForest& forest);

// Compact text: white "3(...)", black "[...]", components joined by "; ".
std::string to_string(const HmNode& node);
std::string to_string(const HalfMobileForest& forest);
// Inverse of to_string; n is the largest white label.  The result is
// canonicalized and validated (HmError on failure).
HalfMobileForest parse_forest(const std::string& text);

// T must be rooted at 1 with labels 1..n+1 (HmError otherwise).
HalfMobileForest theta(const trees::PlaneTree& tree);
// Throws HmError unless validate(forest) passes.
trees::PlaneTree theta_inv(const HalfMobileForest& forest);

using ForestVisitor = std::function<void(const HalfMobileForest&, const HmStats&)>;

// The image of theta over all plane trees on [n+1] rooted at 1, each
// forest once (a repeated image throws std::logic_error).  With k set,
// only forests with imp == k are visited.
void enumerate_hm(int n, std::optional<int> k, const ForestVisitor& visit,
                  trees::EnumBound bound = trees::EnumBound::from_env());

// Independent recursive construction of every canonical forest on [n]:
// set partitions into white-rooted or black-rooted units.
void enumerate_hm_direct(int n, const std::function<void(const HalfMobileForest&)>& visit,
                         trees::EnumBound bound = trees::EnumBound::from_env());

}  // namespace ramanujan::halfmobile
