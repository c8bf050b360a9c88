#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ramanujan/enumerate.hpp"
#include "ramanujan/plane_tree.hpp"
#include "ramanujan/poly.hpp"

namespace ramanujan::forests {

using trees::Label;
using trees::PlaneTree;

// Components of a forest of plane trees.  In fixed-root mode the
// components are stored by increasing root label; for plane forests the
// stored order is the forest's order.
struct RootedPlaneForest {
  std::vector<PlaneTree> components;
};

struct ForestStats {
  int eld = 0;       // summed over components
  int improper = 0;  // summed over components
};

ForestStats forest_stats(const RootedPlaneForest& forest);

using FixedRootVisitor = std::function<void(const RootedPlaneForest&, const ForestStats&)>;

// Every forest of r plane trees on [n] whose roots are 1..r, each once;
// with k set only those with k improper edges.  Throws
// std::invalid_argument unless 1 <= r <= n.
void enumerate_fixed_root_forests(int n, int r, std::optional<int> k, const FixedRootVisitor& visit,
                                  trees::EnumBound bound = trees::EnumBound::from_env());

// Sum of t^eld over the forests above, keyed by improper count, over {t}.
// Requires 1 <= r < n: at r = n the matching coefficient Q_{0,k} is not
// defined.
std::map<int, Poly> forest_generating_polys(int n, int r, trees::EnumBound bound = trees::EnumBound::from_env());

// binom(n-1, k-1) * multinomial(n-k; d_1..d_n) where k = n - sum(d).
// Throws std::invalid_argument when k < 1 or an entry is negative.
Integer planted_count(std::span<const long> d);

enum class TypeFlavor { kPlanted, kPlaneUnlabeled };

// r = (r_0, ..., r_m) with n = sum r_i and k = sum (1 - i) r_i >= 1.
// Throws std::invalid_argument when the constraints fail.
Integer type_count(std::span<const long> r, TypeFlavor flavor);

// Degree sequences d in N^n with sum(d) == total.
std::vector<std::vector<long>> degree_sequences(int n, int total);
// Type vectors (r_0..r_{n-1}, trailing zeros trimmed) of n vertices with
// at least one component.
std::vector<std::vector<long>> type_vectors(int n);
std::vector<long> type_of(std::span<const long> degrees);

// Labeled plane forests on [n] (ordered components), counted by ordered
// degree sequence, from exhaustive enumeration.
std::map<std::vector<long>, Integer> plane_forest_degree_counts(int n,
                                                                trees::EnumBound bound = trees::EnumBound::from_env());

}  // namespace ramanujan::forests
