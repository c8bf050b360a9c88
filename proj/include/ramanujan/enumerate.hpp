#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ramanujan/plane_tree.hpp"
#include "ramanujan/poly.hpp"
#include "ramanujan/tree_stats.hpp"

namespace ramanujan::trees {

enum class WeightMode {
  kO,         // x^{young(1) - 1} t^{eld}
  kP,         // x^{young(1)} t^{eld}
  kMultivar,  // t^{eld} prod_i x_i^{young(i)}
};

struct EnumSpec {
  std::vector<Label> labels;
  std::optional<Label> root;
  std::optional<int> improper;
  std::optional<int> really_improper;
  WeightMode weight = WeightMode::kP;
  // Only increasing trees; the enumerator prunes instead of filtering.
  bool increasing_only = false;

  static EnumSpec on(int n);  // labels 1..n, any root
  static EnumSpec rooted(int n, Label root);

  // Throws std::invalid_argument when inconsistent.
  void validate() const;
};

// Hard cap on the number of labels an enumeration may touch.
struct EnumBound {
  int max_labels = 8;
  // RAMANUJAN_MAX_LABELS overrides the default of 8.
  static EnumBound from_env();
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Selects a slice of the top-level choices (root, first child subset and
// first child).  The union of the slices 0..count-1 is the whole stream.
struct Shard {
  int index = 0;
  int count = 1;
};

using TreeVisitor = std::function<void(const PlaneTree&, const TreeStats&)>;

// Streams every tree satisfying `spec` exactly once to `visit`, in a
// fixed order (subsets in binary order, roots ascending).  The tree
// reference is only valid during the call.
void enumerate(const EnumSpec& spec, const TreeVisitor& visit, EnumBound bound = EnumBound::from_env(),
               Shard shard = {});

// Same as enumerate but without computing statistics or applying the
// improper filters.
void for_each_tree(const std::vector<Label>& labels, std::optional<Label> root,
                   const std::function<void(const PlaneTree&)>& visit, EnumBound bound = EnumBound::from_env());

std::vector<PlaneTree> collect(const EnumSpec& spec, EnumBound bound = EnumBound::from_env());
std::uint64_t count(const EnumSpec& spec, EnumBound bound = EnumBound::from_env());

// Universe used for weights: {x, t} for the o- and p-modes, otherwise
// t together with x_i for every label i.
Universe weight_universe(const EnumSpec& spec);
Poly weight(const EnumSpec& spec, const TreeStats& s);

// Sum of weights over the enumerated set, split over `jobs` threads.
Poly generating_poly(const EnumSpec& spec, int jobs = 1, EnumBound bound = EnumBound::from_env());

enum class KStat { kImproper, kReallyImproper };
// One pass producing the generating polynomial for every value of the
// chosen statistic; the corresponding filter in `spec` is ignored.
std::map<int, Poly> generating_polys_by(const EnumSpec& spec, KStat stat, int jobs = 1,
                                        EnumBound bound = EnumBound::from_env());

// Labeled plane trees on [n] counted by number of leaves.
std::map<int, Integer> leaf_profile(int n, EnumBound bound = EnumBound::from_env());

// Ordered forests on `labels`, handed over as one tree whose root is the
// extra label `virtual_root` (larger than every label) and whose root
// children are the component roots in order.
void for_each_ordered_forest(const std::vector<Label>& labels,
                             const std::function<void(const PlaneTree&, Label virtual_root)>& visit,
                             EnumBound bound = EnumBound::from_env());

}  // namespace ramanujan::trees
