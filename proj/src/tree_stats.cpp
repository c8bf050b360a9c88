#include "ramanujan/tree_stats.hpp"

#include <algorithm>
#include <climits>

namespace ramanujan::trees {

int gdes(std::span<const int> word) {
  int count = 0;
  int suffix_min = INT_MAX;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it > suffix_min) ++count;
    suffix_min = std::min(suffix_min, *it);
  }
  return count;
}

std::vector<std::size_t> right_to_left_minima(std::span<const int> word) {
  std::vector<std::size_t> out;
  int suffix_min = INT_MAX;
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] < suffix_min) out.push_back(i);
    suffix_min = std::min(suffix_min, word[i]);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Label> TreeStats::elder_set() const {
  std::vector<Label> out;
  for (std::size_t v = 0; v < elder.size(); ++v) {
    if (elder[v]) out.push_back(static_cast<Label>(v));
  }
  return out;
}

namespace {

std::vector<Label> compute_beta(const PlaneTree& tree, const std::vector<Label>& order) {
  std::vector<Label> beta(tree.max_label() + 1, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Label b = *it;
    for (Label c : tree.children(*it)) b = std::min(b, beta[c]);
    beta[*it] = b;
  }
  return beta;
}

}  // namespace

TreeStats stats(const PlaneTree& tree) {
  const auto order = tree.preorder();
  const std::size_t size = tree.max_label() + 1;
  TreeStats s;
  s.beta = compute_beta(tree, order);
  s.deg.assign(size, 0);
  s.eld.assign(size, 0);
  s.young.assign(size, 0);
  s.reld.assign(size, 0);
  s.really_young.assign(size, 0);
  s.elder.assign(size, 0);
  s.really_elder.assign(size, 0);
  s.increasing = true;

  for (Label v : order) {
    const auto kids = tree.children(v);
    s.deg[v] = static_cast<int>(kids.size());
    if (kids.empty()) s.leaves.push_back(v);
    Label min_beta = INT_MAX;
    Label min_label = INT_MAX;
    for (std::size_t i = kids.size(); i-- > 0;) {
      const Label c = kids[i];
      if (s.beta[c] > min_beta) {
        s.elder[c] = 1;
        ++s.eld[v];
      }
      if (c > min_label) {
        s.really_elder[c] = 1;
        ++s.reld[v];
      }
      min_beta = std::min(min_beta, s.beta[c]);
      min_label = std::min(min_label, c);
      if (c < v) s.increasing = false;
    }
    s.young[v] = s.deg[v] - s.eld[v];
    s.really_young[v] = s.deg[v] - s.reld[v];
    s.eld_total += s.eld[v];
    s.really_eld_total += s.reld[v];
  }
  for (Label c : order) {
    const auto p = tree.parent(c);
    if (!p) continue;
    const bool above_beta = *p > s.beta[c];
    if (!s.elder[c] && above_beta) s.improper_edges.emplace_back(*p, c);
    if (!s.really_elder[c] && above_beta) s.really_improper_edges.emplace_back(*p, c);
  }
  std::sort(s.leaves.begin(), s.leaves.end());
  return s;
}

int improper_count(const PlaneTree& tree) { return stats(tree).improper(); }

int really_improper_count(const PlaneTree& tree) { return stats(tree).really_improper(); }

}  // namespace ramanujan::trees
