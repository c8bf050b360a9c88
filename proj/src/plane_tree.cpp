#include "ramanujan/plane_tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace ramanujan::trees {

namespace {
constexpr Label kMaxLabel = 1 << 20;
}

PlaneTree::PlaneTree(Label root, const std::map<Label, std::vector<Label>>& children) {
  root_ = root;
  std::vector<Label> all{root};
  for (const auto& [p, kids] : children) {
    all.push_back(p);
    all.insert(all.end(), kids.begin(), kids.end());
  }
  for (Label v : all) {
    if (v <= 0) throw TreeError("labels must be positive, got " + std::to_string(v));
    if (v > kMaxLabel) throw TreeError("label " + std::to_string(v) + " is too large");
  }
  const Label max_label = *std::max_element(all.begin(), all.end());
  kids_.assign(max_label + 1, {});
  parent_.assign(max_label + 1, 0);
  std::vector<char> seen(max_label + 1, 0);
  seen[root] = 1;
  labels_.push_back(root);
  // Walk from the root so that unreachable lists are detected.
  std::vector<Label> stack{root};
  std::vector<char> expanded(max_label + 1, 0);
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    expanded[v] = 1;
    auto it = children.find(v);
    if (it == children.end()) continue;
    for (Label c : it->second) {
      if (seen[c]) throw TreeError("label " + std::to_string(c) + " occurs more than once");
      seen[c] = 1;
      parent_[c] = v;
      kids_[v].push_back(c);
      labels_.push_back(c);
      stack.push_back(c);
    }
  }
  for (const auto& [p, kids] : children) {
    if (!expanded[p] && !kids.empty()) {
      throw TreeError("children listed for vertex " + std::to_string(p) + " which is not in the tree");
    }
  }
  std::sort(labels_.begin(), labels_.end());
}

PlaneTree PlaneTree::single(Label root) { return PlaneTree(root, {}); }

bool PlaneTree::contains(Label v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

std::span<const Label> PlaneTree::children(Label v) const {
  if (v <= 0 || static_cast<std::size_t>(v) >= kids_.size()) return {};
  return kids_[v];
}

std::optional<Label> PlaneTree::parent(Label v) const {
  if (v <= 0 || static_cast<std::size_t>(v) >= parent_.size() || parent_[v] == 0) return std::nullopt;
  return parent_[v];
}

bool PlaneTree::has_edge(Label p, Label c) const {
  auto q = parent(c);
  return q && *q == p;
}

std::vector<Label> PlaneTree::preorder() const {
  std::vector<Label> out;
  out.reserve(labels_.size());
  std::vector<Label> stack{root_};
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto& k = kids_[v];
    for (auto it = k.rbegin(); it != k.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

PlaneTree PlaneTree::with_children(Label v, std::vector<Label> order) const {
  auto current = std::vector<Label>(children(v).begin(), children(v).end());
  auto a = current;
  auto b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw TreeError("reordering must keep the children of " + std::to_string(v));
  PlaneTree out = *this;
  out.kids_[v] = std::move(order);
  return out;
}

PlaneTree PlaneTree::relabeled(const std::map<Label, Label>& rename) const {
  auto map = [&](Label v) {
    auto it = rename.find(v);
    return it == rename.end() ? v : it->second;
  };
  std::map<Label, std::vector<Label>> ch;
  for (Label v : labels_) {
    if (kids_[v].empty()) continue;
    auto& dst = ch[map(v)];
    for (Label c : kids_[v]) dst.push_back(map(c));
  }
  return PlaneTree(map(root_), ch);
}

std::map<Label, std::vector<Label>> PlaneTree::child_map() const {
  std::map<Label, std::vector<Label>> out;
  for (Label v : labels_) {
    if (!kids_[v].empty()) out[v] = kids_[v];
  }
  return out;
}

PlaneTree PlaneTree::subtree(Label v) const {
  if (!contains(v)) throw TreeError("vertex " + std::to_string(v) + " is not in the tree");
  std::map<Label, std::vector<Label>> ch;
  std::vector<Label> stack{v};
  while (!stack.empty()) {
    const Label u = stack.back();
    stack.pop_back();
    if (kids_[u].empty()) continue;
    ch[u] = kids_[u];
    stack.insert(stack.end(), kids_[u].begin(), kids_[u].end());
  }
  return PlaneTree(v, ch);
}

std::string PlaneTree::to_string() const {
  std::ostringstream os;
  std::function<void(Label)> rec = [&](Label v) {
    os << v;
    const auto& k = kids_[v];
    if (k.empty()) return;
    os << '(';
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) os << ',';
      rec(k[i]);
    }
    os << ')';
  };
  rec(root_);
  return os.str();
}

PlaneTree PlaneTree::parse(const std::string& text) {
  std::size_t pos = 0;
  std::map<Label, std::vector<Label>> ch;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::function<Label()> node = [&]() -> Label {
    skip();
    const std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > kMaxLabel) throw TreeError("label too large at position " + std::to_string(start));
      ++pos;
    }
    if (pos == start) throw TreeError("expected a label at position " + std::to_string(pos));
    const Label v = static_cast<Label>(value);
    skip();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      auto& kids = ch[v];
      if (!kids.empty()) throw TreeError("label " + std::to_string(v) + " occurs more than once");
      for (;;) {
        kids.push_back(node());
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw TreeError("expected ',' or ')' at position " + std::to_string(pos));
      }
    }
    return v;
  };
  const Label root = node();
  skip();
  if (pos != text.size()) throw TreeError("trailing characters at position " + std::to_string(pos));
  return PlaneTree(root, ch);
}

bool PlaneTree::operator==(const PlaneTree& other) const {
  if (root_ != other.root_ || labels_ != other.labels_) return false;
  for (Label v : labels_) {
    if (kids_[v] != other.kids_[v]) return false;
  }
  return true;
}

std::strong_ordering PlaneTree::operator<=>(const PlaneTree& other) const {
  if (auto c = root_ <=> other.root_; c != 0) return c;
  if (auto c = labels_ <=> other.labels_; c != 0) return c;
  for (Label v : labels_) {
    if (auto c = kids_[v] <=> other.kids_[v]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

TreeBuilder::TreeBuilder(const std::vector<Label>& labels, Label root) {
  if (labels.empty()) throw TreeError("empty label set");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw TreeError("duplicate labels");
  }
  if (sorted.front() <= 0 || sorted.back() > kMaxLabel) throw TreeError("labels out of range");
  tree_.root_ = root;
  tree_.labels_ = std::move(sorted);
  tree_.kids_.assign(tree_.labels_.back() + 1, {});
  tree_.parent_.assign(tree_.labels_.back() + 1, 0);
}

void TreeBuilder::push_child(Label parent, Label child) {
  tree_.kids_[parent].push_back(child);
  tree_.parent_[child] = parent;
}

void TreeBuilder::pop_child(Label parent) {
  const Label c = tree_.kids_[parent].back();
  tree_.kids_[parent].pop_back();
  tree_.parent_[c] = 0;
}

}  // namespace ramanujan::trees
