#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ramanujan/plane_tree.hpp"

namespace ramanujan::trees {

using Edge = std::pair<Label, Label>;  // (parent, child)

// Number of positions with a smaller entry somewhere to their right.
int gdes(std::span<const int> word);
// Positions (0-based) that are right-to-left minima.
std::vector<std::size_t> right_to_left_minima(std::span<const int> word);

// Statistics of a plane tree.  Per-vertex vectors are indexed by label
// (entries for labels not in the tree are zero).
struct TreeStats {
  std::vector<Label> beta;  // smallest descendant, vertex included
  std::vector<int> deg;
  std::vector<int> eld;          // elder children per vertex
  std::vector<int> young;        // deg - eld
  std::vector<int> reld;         // really elder children per vertex
  std::vector<int> really_young; // deg - reld
  std::vector<char> elder;       // vertex is an elder child
  std::vector<char> really_elder;
  int eld_total = 0;
  int really_eld_total = 0;
  std::vector<Edge> improper_edges;         // preorder of the child
  std::vector<Edge> really_improper_edges;
  std::vector<Label> leaves;                // ascending
  bool increasing = false;

  int improper() const { return static_cast<int>(improper_edges.size()); }
  int really_improper() const { return static_cast<int>(really_improper_edges.size()); }
  std::vector<Label> elder_set() const;
};

TreeStats stats(const PlaneTree& tree);

// Cheaper single-purpose passes used inside the enumerators.
int improper_count(const PlaneTree& tree);
int really_improper_count(const PlaneTree& tree);

}  // namespace ramanujan::trees
