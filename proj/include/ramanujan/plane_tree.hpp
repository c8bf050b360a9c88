#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramanujan::trees {

using Label = int;

class TreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rooted tree on distinct positive labels with linearly ordered children.
// Stored flat: child lists and parents indexed by label.
class PlaneTree {
 public:
  // Children lists keyed by parent; labels that never appear as keys are
  // leaves.  Throws TreeError unless the lists form one tree rooted at
  // `root` with pairwise distinct labels.
  PlaneTree(Label root, const std::map<Label, std::vector<Label>>& children);

  static PlaneTree single(Label root);

  Label root() const { return root_; }
  std::size_t size() const { return labels_.size(); }
  // Sorted ascending.
  const std::vector<Label>& labels() const { return labels_; }
  Label max_label() const { return labels_.back(); }
  bool contains(Label v) const;
  std::span<const Label> children(Label v) const;
  std::size_t degree(Label v) const { return children(v).size(); }
  std::optional<Label> parent(Label v) const;
  bool has_edge(Label parent, Label child) const;
  // Preorder, children left to right.
  std::vector<Label> preorder() const;

  // Copy with the children of v replaced (same multiset required).
  PlaneTree with_children(Label v, std::vector<Label> order) const;
  // Copy with labels renamed through `rename` (must be injective).
  PlaneTree relabeled(const std::map<Label, Label>& rename) const;

  std::map<Label, std::vector<Label>> child_map() const;
  // The subtree rooted at v as a tree of its own.
  PlaneTree subtree(Label v) const;

  // Bracket notation, e.g. "10(3(9,14(11,2,12,7)),8,4(1,6(13,5)))".
  std::string to_string() const;
  static PlaneTree parse(const std::string& text);

  bool operator==(const PlaneTree& other) const;
  std::strong_ordering operator<=>(const PlaneTree& other) const;

 private:
  PlaneTree() = default;
  friend class TreeBuilder;

  Label root_ = 0;
  std::vector<Label> labels_;
  std::vector<std::vector<Label>> kids_;  // index = label
  std::vector<Label> parent_;             // index = label; 0 = none
};

// Mutable construction used by the enumerators; hands out a PlaneTree
// whose child lists are edited in place.
class TreeBuilder {
 public:
  explicit TreeBuilder(const std::vector<Label>& labels, Label root);
  void push_child(Label parent, Label child);
  void pop_child(Label parent);
  void set_root(Label root) { tree_.root_ = root; }
  const PlaneTree& tree() const { return tree_; }

 private:
  PlaneTree tree_;
};

}  // namespace ramanujan::trees
