#include "ramanujan/half_mobile.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "ramanujan/tree_stats.hpp"

namespace ramanujan::halfmobile {

HmNode HmNode::white(Label label, std::vector<HmNode> children) {
  HmNode n;
  n.label = label;
  n.children = std::move(children);
  return n;
}

HmNode HmNode::blackv(std::vector<HmNode> children) {
  HmNode n;
  n.black = true;
  n.children = std::move(children);
  return n;
}

Label beta(const HmNode& node) {
  Label b = node.black ? INT_MAX : node.label;
  for (const auto& c : node.children) b = std::min(b, beta(c));
  return b;
}

namespace {

void sort_by_beta(std::vector<HmNode>& nodes) {
  std::sort(nodes.begin(), nodes.end(),
            [](const HmNode& a, const HmNode& b) { return beta(a) < beta(b); });
}

}  // namespace

void canonicalize(HmNode& node) {
  for (auto& c : node.children) canonicalize(c);
  if (node.black) {
    if (node.children.empty()) return;
    auto min_it = std::min_element(node.children.begin(), node.children.end(),
                                   [](const HmNode& a, const HmNode& b) { return beta(a) < beta(b); });
    std::rotate(node.children.begin(), min_it + 1, node.children.end());
  } else {
    sort_by_beta(node.children);
  }
}

void canonicalize(HalfMobileForest& forest) {
  for (auto& c : forest.components) canonicalize(c);
  sort_by_beta(forest.components);
}

namespace {

std::optional<std::string> check_node(const HmNode& node, const std::string& path, int n,
                                      std::vector<char>& seen) {
  if (node.black) {
    if (node.label != 0) return path + ": black vertex carries a label";
    if (node.children.size() < 2) return path + ": black vertex needs at least two children";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (node.children[i].black) {
        return path + ".children[" + std::to_string(i) + "]: black vertex has a black child";
      }
    }
    const Label last = beta(node.children.back());
    for (std::size_t i = 0; i + 1 < node.children.size(); ++i) {
      if (beta(node.children[i]) < last) {
        return path + ": last child of a black vertex must have the smallest beta";
      }
    }
  } else {
    if (node.label < 1 || node.label > n) {
      return path + ": label " + std::to_string(node.label) + " outside 1.." + std::to_string(n);
    }
    if (seen[node.label]) return path + ": label " + std::to_string(node.label) + " repeated";
    seen[node.label] = 1;
    for (std::size_t i = 1; i < node.children.size(); ++i) {
      if (beta(node.children[i - 1]) > beta(node.children[i])) {
        return path + ": children of a white vertex must be sorted by beta";
      }
    }
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (auto err = check_node(node.children[i], path + ".children[" + std::to_string(i) + "]", n, seen)) {
      return err;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate(const HalfMobileForest& forest) {
  if (forest.n < 0) return std::string("negative n");
  std::vector<char> seen(forest.n + 1, 0);
  for (std::size_t i = 0; i < forest.components.size(); ++i) {
    const std::string path = "components[" + std::to_string(i) + "]";
    if (auto err = check_node(forest.components[i], path, forest.n, seen)) return err;
    if (i && beta(forest.components[i - 1]) > beta(forest.components[i])) {
      return path + ": components must be sorted by beta";
    }
  }
  for (int v = 1; v <= forest.n; ++v) {
    if (!seen[v]) return "label " + std::to_string(v) + " missing";
  }
  return std::nullopt;
}

namespace {

void collect_stats(const HmNode& node, std::optional<Label> father, HmStats& s) {
  if (node.black) {
    s.bdeg += static_cast<int>(node.children.size()) - 1;
    const HmNode& right = node.children.back();
    if (father && *father > beta(right)) ++s.imp;
    for (const auto& c : node.children) collect_stats(c, std::nullopt, s);
    return;
  }
  for (const auto& c : node.children) {
    if (!c.black && node.label > beta(c)) ++s.imp;
    collect_stats(c, node.label, s);
  }
}

void write(std::ostream& os, const HmNode& node) {
  if (node.black) {
    os << '[';
  } else {
    os << node.label;
    if (node.children.empty()) return;
    os << '(';
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) os << ',';
    write(os, node.children[i]);
  }
  os << (node.black ? ']' : ')');
}

class TextParser {
 public:
  explicit TextParser(const std::string& text) : text_(text) {}

  HalfMobileForest forest() {
    HalfMobileForest f;
    skip();
    if (pos_ == text_.size()) return f;
    for (;;) {
      f.components.push_back(node());
      skip();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ';') fail("expected ';' between components");
      ++pos_;
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw HmError(what + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::vector<HmNode> list(char close) {
    std::vector<HmNode> out;
    for (;;) {
      out.push_back(node());
      skip();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == close) {
        ++pos_;
        return out;
      }
      fail(std::string("expected ',' or '") + close + "'");
    }
  }

  HmNode node() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      return HmNode::blackv(list(']'));
    }
    long value = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > (1 << 20)) fail("label too large");
    }
    if (pos_ == start) fail("expected a label or '['");
    HmNode n = HmNode::white(static_cast<Label>(value));
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      n.children = list(')');
    }
    return n;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

Label max_label(const HmNode& node) {
  Label m = node.black ? 0 : node.label;
  for (const auto& c : node.children) m = std::max(m, max_label(c));
  return m;
}

}  // namespace

HmStats hm_stats(const HalfMobileForest& forest) {
  HmStats s;
  s.tree = static_cast<int>(forest.components.size());
  for (const auto& c : forest.components) collect_stats(c, std::nullopt, s);
  return s;
}

std::string to_string(const HmNode& node) {
  std::ostringstream os;
  write(os, node);
  return os.str();
}

std::string to_string(const HalfMobileForest& forest) {
  std::ostringstream os;
  for (std::size_t i = 0; i < forest.components.size(); ++i) {
    if (i) os << "; ";
    write(os, forest.components[i]);
  }
  return os.str();
}

HalfMobileForest parse_forest(const std::string& text) {
  HalfMobileForest f = TextParser(text).forest();
  for (const auto& c : f.components) f.n = std::max(f.n, static_cast<int>(max_label(c)));
  canonicalize(f);
  if (auto err = validate(f)) throw HmError(*err);
  return f;
}

// ---------------------------------------------------------------------------
// theta

namespace {

std::vector<HmNode> units_of(const trees::PlaneTree& t, const trees::TreeStats& s, Label v);

HmNode white_of(const trees::PlaneTree& t, const trees::TreeStats& s, Label v) {
  return HmNode::white(v - 1, units_of(t, s, v));
}

// Children of v grouped between right-to-left minima of their beta word.
std::vector<HmNode> units_of(const trees::PlaneTree& t, const trees::TreeStats& s, Label v) {
  const auto kids = t.children(v);
  std::vector<int> word;
  for (Label c : kids) word.push_back(s.beta[c]);
  std::vector<HmNode> units;
  std::size_t start = 0;
  for (std::size_t end : trees::right_to_left_minima(word)) {
    if (end == start) {
      units.push_back(white_of(t, s, kids[end]));
    } else {
      std::vector<HmNode> block;
      for (std::size_t i = start; i <= end; ++i) block.push_back(white_of(t, s, kids[i]));
      units.push_back(HmNode::blackv(std::move(block)));
    }
    start = end + 1;
  }
  return units;
}

void emit_children(const std::vector<HmNode>& units, Label parent, std::map<Label, std::vector<Label>>& ch);

void emit_white(const HmNode& node, std::map<Label, std::vector<Label>>& ch) {
  emit_children(node.children, node.label + 1, ch);
}

// Units sorted by beta and concatenated; a black unit contributes its
// children in stored order.
void emit_children(const std::vector<HmNode>& units, Label parent, std::map<Label, std::vector<Label>>& ch) {
  std::vector<const HmNode*> order;
  for (const auto& u : units) order.push_back(&u);
  std::stable_sort(order.begin(), order.end(), [](const HmNode* a, const HmNode* b) { return beta(*a) < beta(*b); });
  std::vector<Label> kids;
  for (const HmNode* u : order) {
    if (u->black) {
      for (const auto& c : u->children) {
        kids.push_back(c.label + 1);
        emit_white(c, ch);
      }
    } else {
      kids.push_back(u->label + 1);
      emit_white(*u, ch);
    }
  }
  if (!kids.empty()) ch[parent] = std::move(kids);
}

}  // namespace

HalfMobileForest theta(const trees::PlaneTree& tree) {
  if (tree.root() != 1) throw HmError("theta needs a tree rooted at 1");
  const auto& labels = tree.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != static_cast<Label>(i + 1)) throw HmError("theta needs the label set 1..n+1");
  }
  const auto s = trees::stats(tree);
  HalfMobileForest f;
  f.n = static_cast<int>(labels.size()) - 1;
  f.components = units_of(tree, s, 1);
  canonicalize(f);
  return f;
}

trees::PlaneTree theta_inv(const HalfMobileForest& forest) {
  if (auto err = validate(forest)) throw HmError(*err);
  std::map<Label, std::vector<Label>> ch;
  emit_children(forest.components, 1, ch);
  return trees::PlaneTree(1, ch);
}

void enumerate_hm(int n, std::optional<int> k, const ForestVisitor& visit, trees::EnumBound bound) {
  if (n < 0) throw HmError("n must be nonnegative");
  std::vector<Label> labels(n + 1);
  std::iota(labels.begin(), labels.end(), 1);
  std::unordered_set<std::string> seen;
  trees::for_each_tree(labels, 1, [&](const trees::PlaneTree& t) {
    const HalfMobileForest f = theta(t);
    if (!seen.insert(to_string(f)).second) {
      throw std::logic_error("theta maps two trees to " + to_string(f));
    }
    const HmStats s = hm_stats(f);
    if (!k || s.imp == *k) visit(f, s);
  }, bound);
}

// ---------------------------------------------------------------------------
// Direct construction

namespace {

using Mask = std::uint32_t;

void set_partitions(Mask mask, std::vector<Mask>& blocks, const std::function<void(const std::vector<Mask>&)>& cb) {
  if (mask == 0) {
    cb(blocks);
    return;
  }
  const Mask low = mask & (~mask + 1);
  const Mask rest = mask ^ low;
  Mask sub = 0;
  do {
    blocks.push_back(low | sub);
    set_partitions(rest ^ sub, blocks, cb);
    blocks.pop_back();
    sub = (sub - rest) & rest;
  } while (sub != 0);
}

void cartesian(const std::vector<const std::vector<HmNode>*>& lists, std::vector<HmNode>& current,
               const std::function<void(const std::vector<HmNode>&)>& cb) {
  if (current.size() == lists.size()) {
    cb(current);
    return;
  }
  for (const auto& node : *lists[current.size()]) {
    current.push_back(node);
    cartesian(lists, current, cb);
    current.pop_back();
  }
}

class DirectBuilder {
 public:
  const std::vector<HmNode>& units(Mask mask) {
    if (auto it = units_.find(mask); it != units_.end()) return it->second;
    std::vector<HmNode> out = white_rooted(mask);
    if (__builtin_popcount(mask) >= 2) {
      auto b = black_rooted(mask);
      out.insert(out.end(), b.begin(), b.end());
    }
    return units_.emplace(mask, std::move(out)).first->second;
  }

  const std::vector<HmNode>& whites(Mask mask) {
    if (auto it = whites_.find(mask); it != whites_.end()) return it->second;
    return whites_.emplace(mask, white_rooted(mask)).first->second;
  }

  // Unordered collections of units covering `mask`.
  void unit_sets(Mask mask, const std::function<void(const std::vector<HmNode>&)>& cb) {
    std::vector<Mask> blocks;
    set_partitions(mask, blocks, [&](const std::vector<Mask>& parts) {
      std::vector<const std::vector<HmNode>*> lists;
      for (Mask m : parts) lists.push_back(&units(m));
      std::vector<HmNode> current;
      cartesian(lists, current, cb);
    });
  }

 private:
  std::vector<HmNode> white_rooted(Mask mask) {
    std::vector<HmNode> out;
    for (Mask bits = mask; bits; bits &= bits - 1) {
      const int i = __builtin_ctz(bits);
      unit_sets(mask & ~(1u << i), [&](const std::vector<HmNode>& kids) {
        out.push_back(HmNode::white(i + 1, kids));
      });
    }
    return out;
  }

  // At least two white trees in a cycle; the block holding the smallest
  // label is written last and the others in every order.
  std::vector<HmNode> black_rooted(Mask mask) {
    std::vector<HmNode> out;
    std::vector<Mask> blocks;
    set_partitions(mask, blocks, [&](const std::vector<Mask>& parts) {
      if (parts.size() < 2) return;
      // parts[0] holds the lowest bit of mask.
      std::vector<Mask> others(parts.begin() + 1, parts.end());
      std::sort(others.begin(), others.end());
      do {
        std::vector<const std::vector<HmNode>*> lists;
        for (Mask m : others) lists.push_back(&whites(m));
        lists.push_back(&whites(parts[0]));
        std::vector<HmNode> current;
        cartesian(lists, current, [&](const std::vector<HmNode>& kids) { out.push_back(HmNode::blackv(kids)); });
      } while (std::next_permutation(others.begin(), others.end()));
    });
    return out;
  }

  std::map<Mask, std::vector<HmNode>> units_;
  std::map<Mask, std::vector<HmNode>> whites_;
};

}  // namespace

void enumerate_hm_direct(int n, const std::function<void(const HalfMobileForest&)>& visit, trees::EnumBound bound) {
  if (n < 0) throw HmError("n must be nonnegative");
  if (n + 1 > bound.max_labels) {
    throw trees::BoundExceeded("half-mobile forests on " + std::to_string(n) + " labels exceed the cap");
  }
  if (n == 0) {
    visit(HalfMobileForest{});
    return;
  }
  DirectBuilder builder;
  builder.unit_sets((1u << n) - 1, [&](const std::vector<HmNode>& comps) {
    HalfMobileForest f;
    f.n = n;
    f.components = comps;
    canonicalize(f);
    visit(f);
  });
}

}  // namespace ramanujan::halfmobile
