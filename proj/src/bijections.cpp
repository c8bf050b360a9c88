#include "ramanujan/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ramanujan/tree_stats.hpp"

namespace ramanujan::bijections {

using trees::TreeError;

namespace {

// rank[i] = position of keys[i] in sorted order.
std::vector<std::size_t> ranks(const std::vector<Label>& keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> rank(keys.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

template <typename Reorder>
PlaneTree reorder_all(const PlaneTree& tree, Reorder reorder) {
  const auto s = trees::stats(tree);
  auto ch = tree.child_map();
  for (auto& [v, kids] : ch) {
    std::vector<Label> betas;
    for (Label c : kids) betas.push_back(s.beta[c]);
    kids = reorder(kids, betas);
  }
  return PlaneTree(tree.root(), ch);
}

}  // namespace

PlaneTree phi(const PlaneTree& tree) {
  return reorder_all(tree, [](const std::vector<Label>& kids, const std::vector<Label>& betas) {
    auto sorted = kids;
    std::sort(sorted.begin(), sorted.end());
    const auto r = ranks(betas);
    std::vector<Label> out(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) out[i] = sorted[r[i]];
    return out;
  });
}

PlaneTree phi_inv(const PlaneTree& tree) {
  return reorder_all(tree, [](const std::vector<Label>& kids, const std::vector<Label>& betas) {
    std::vector<Label> by_beta(kids.size());
    const auto rb = ranks(betas);
    for (std::size_t i = 0; i < kids.size(); ++i) by_beta[rb[i]] = kids[i];
    const auto rl = ranks(kids);
    std::vector<Label> out(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) out[i] = by_beta[rl[i]];
    return out;
  });
}

PlaneTree contract(const PlaneTree& tree, Label i, Label j) {
  if (!tree.has_edge(i, j)) {
    throw TreeError("no edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  auto ch = tree.child_map();
  auto& kids = ch[i];
  auto pos = std::find(kids.begin(), kids.end(), j);
  const auto jk = tree.children(j);
  pos = kids.erase(pos);
  kids.insert(pos, jk.begin(), jk.end());
  ch.erase(j);
  if (kids.empty()) ch.erase(i);
  return PlaneTree(tree.root(), ch);
}

bool i_equivalent(const PlaneTree& a, const PlaneTree& b, Label i) {
  if (a.root() != b.root() || a.labels() != b.labels()) return false;
  auto ca = a.child_map();
  auto cb = b.child_map();
  if (auto it = ca.find(i); it != ca.end()) std::sort(it->second.begin(), it->second.end());
  if (auto it = cb.find(i); it != cb.end()) std::sort(it->second.begin(), it->second.end());
  return ca == cb;
}

bool ij_equivalent(const PlaneTree& a, const PlaneTree& b, Label i, Label j) {
  if (!a.has_edge(i, j) || !b.has_edge(i, j)) return false;
  return i_equivalent(contract(a, i, j), contract(b, i, j), i);
}

std::vector<PlaneTree> i_class(const PlaneTree& tree, Label i) {
  if (!tree.contains(i)) throw TreeError("vertex " + std::to_string(i) + " is not in the tree");
  std::vector<Label> kids(tree.children(i).begin(), tree.children(i).end());
  std::sort(kids.begin(), kids.end());
  std::vector<PlaneTree> out;
  do {
    out.push_back(tree.with_children(i, kids));
  } while (std::next_permutation(kids.begin(), kids.end()));
  return out;
}

std::vector<PlaneTree> ij_class(const PlaneTree& tree, Label i, Label j) {
  const PlaneTree base = contract(tree, i, j);
  std::vector<Label> kids(base.children(i).begin(), base.children(i).end());
  std::sort(kids.begin(), kids.end());
  auto ch = base.child_map();
  std::vector<PlaneTree> out;
  do {
    for (std::size_t a = 0; a <= kids.size(); ++a) {
      for (std::size_t b = a; b <= kids.size(); ++b) {
        auto m = ch;
        std::vector<Label> mine(kids.begin(), kids.begin() + a);
        mine.push_back(j);
        mine.insert(mine.end(), kids.begin() + b, kids.end());
        m[i] = std::move(mine);
        if (b > a) {
          m[j] = std::vector<Label>(kids.begin() + a, kids.begin() + b);
        } else {
          m.erase(j);
        }
        out.emplace_back(base.root(), m);
      }
    }
  } while (std::next_permutation(kids.begin(), kids.end()));
  return out;
}

PlaneTree root_swap(const PlaneTree& tree, Label a, Label b) {
  if (tree.root() != a) throw TreeError("root_swap needs the tree rooted at " + std::to_string(a));
  if (a == b || !tree.contains(b)) throw TreeError("vertex " + std::to_string(b) + " is not below the root");
  Label top = b;
  while (*tree.parent(top) != a) top = *tree.parent(top);
  auto ch = tree.child_map();
  std::vector<Label> root_kids = ch[a];
  const auto t = std::find(root_kids.begin(), root_kids.end(), top) - root_kids.begin();
  std::vector<Label> moved(root_kids.begin() + t + 1, root_kids.end());
  std::vector<Label> b_kids(tree.children(b).begin(), tree.children(b).end());
  root_kids.resize(t + 1);
  root_kids.insert(root_kids.end(), b_kids.begin(), b_kids.end());
  ch[a] = std::move(root_kids);
  if (moved.empty()) {
    ch.erase(b);
  } else {
    ch[b] = std::move(moved);
  }
  return PlaneTree(a, ch).relabeled({{a, b}, {b, a}});
}

}  // namespace ramanujan::bijections
