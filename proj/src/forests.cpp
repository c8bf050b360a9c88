#include "ramanujan/forests.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "ramanujan/combinatorics.hpp"
#include "ramanujan/tree_stats.hpp"

namespace ramanujan::forests {

ForestStats forest_stats(const RootedPlaneForest& forest) {
  ForestStats s;
  for (const auto& c : forest.components) {
    const auto ts = trees::stats(c);
    s.eld += ts.eld_total;
    s.improper += ts.improper();
  }
  return s;
}

namespace {

struct Component {
  PlaneTree tree;
  ForestStats stats;
};

void product(const std::vector<std::vector<Component>>& lists, std::size_t at, RootedPlaneForest& current,
             ForestStats acc, std::optional<int> k, const FixedRootVisitor& visit) {
  if (at == lists.size()) {
    if (!k || acc.improper == *k) visit(current, acc);
    return;
  }
  for (const auto& c : lists[at]) {
    if (k && acc.improper + c.stats.improper > *k) continue;
    current.components.push_back(c.tree);
    product(lists, at + 1, current, {acc.eld + c.stats.eld, acc.improper + c.stats.improper}, k, visit);
    current.components.pop_back();
  }
}

}  // namespace

void enumerate_fixed_root_forests(int n, int r, std::optional<int> k, const FixedRootVisitor& visit,
                                  trees::EnumBound bound) {
  if (r < 1 || r > n) {
    throw std::invalid_argument("fixed-root forests need 1 <= r <= n, got r=" + std::to_string(r) +
                                " n=" + std::to_string(n));
  }
  if (n > bound.max_labels) {
    throw trees::BoundExceeded("forests on " + std::to_string(n) + " labels exceed the cap of " +
                               std::to_string(bound.max_labels));
  }
  // owner[i] is the component (root label) receiving label r + 1 + i.
  std::vector<int> owner(n - r, 1);
  for (;;) {
    std::vector<std::vector<Component>> lists(r);
    for (int root = 1; root <= r; ++root) {
      trees::EnumSpec spec;
      spec.labels.push_back(root);
      for (int i = 0; i < n - r; ++i) {
        if (owner[i] == root) spec.labels.push_back(r + 1 + i);
      }
      spec.root = root;
      trees::enumerate(spec, [&](const PlaneTree& t, const trees::TreeStats& s) {
        lists[root - 1].push_back({t, {s.eld_total, s.improper()}});
      }, bound);
    }
    RootedPlaneForest current;
    product(lists, 0, current, {}, k, visit);
    // Next assignment in base r.
    int i = 0;
    while (i < n - r && owner[i] == r) owner[i++] = 1;
    if (i == n - r) break;
    ++owner[i];
  }
}

std::map<int, Poly> forest_generating_polys(int n, int r, trees::EnumBound bound) {
  if (r >= n) throw std::invalid_argument("forest generating polynomials need r < n");
  const Universe u({"t"});
  const Poly t = Poly::variable(u, "t");
  std::map<int, std::map<int, long>> counts;
  enumerate_fixed_root_forests(n, r, std::nullopt, [&](const RootedPlaneForest&, const ForestStats& s) {
    ++counts[s.improper][s.eld];
  }, bound);
  std::map<int, Poly> out;
  for (const auto& [k, by_eld] : counts) {
    Poly p(u);
    for (const auto& [e, c] : by_eld) p += Integer(c) * t.pow(static_cast<unsigned>(e));
    out.emplace(k, std::move(p));
  }
  return out;
}

Integer planted_count(std::span<const long> d) {
  const long n = static_cast<long>(d.size());
  long sum = 0;
  for (long v : d) {
    if (v < 0) throw std::invalid_argument("degree entries must be nonnegative");
    sum += v;
  }
  const long k = n - sum;
  if (k < 1) throw std::invalid_argument("degree sequence leaves no component (k = " + std::to_string(k) + ")");
  return binomial(n - 1, k - 1) * multinomial(n - k, d);
}

Integer type_count(std::span<const long> r, TypeFlavor flavor) {
  long n = 0;
  long k = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0) throw std::invalid_argument("type entries must be nonnegative");
    n += r[i];
    k += (1 - static_cast<long>(i)) * r[i];
  }
  if (n < 1) throw std::invalid_argument("type vector describes no vertices");
  if (k < 1) throw std::invalid_argument("type vector gives k = " + std::to_string(k) + ", need k >= 1");
  const Integer m = multinomial(n, r);
  if (flavor == TypeFlavor::kPlaneUnlabeled) {
    const Integer num = Integer(k) * m;
    if (num % n != 0) throw std::logic_error("plane forest count is not an integer");
    return num / n;
  }
  Integer denom = 1;
  for (std::size_t i = 0; i < r.size(); ++i) denom *= power(factorial(static_cast<long>(i)), r[i]);
  return binomial(n - 1, k - 1) * (factorial(n - k) / denom) * m;
}

namespace {

void compositions(int slots, int total, std::vector<long>& current, std::vector<std::vector<long>>& out) {
  if (static_cast<int>(current.size()) == slots - 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    current.push_back(v);
    compositions(slots, total - v, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> degree_sequences(int n, int total) {
  std::vector<std::vector<long>> out;
  if (n < 1 || total < 0) return out;
  std::vector<long> current;
  compositions(n, total, current, out);
  return out;
}

std::vector<long> type_of(std::span<const long> degrees) {
  std::vector<long> r;
  for (long d : degrees) {
    if (d < 0) throw std::invalid_argument("degree entries must be nonnegative");
    if (static_cast<std::size_t>(d) >= r.size()) r.resize(d + 1, 0);
    ++r[d];
  }
  return r;
}

std::vector<std::vector<long>> type_vectors(int n) {
  std::vector<std::vector<long>> out;
  if (n < 1) return out;
  std::vector<std::vector<long>> all;
  std::vector<long> current;
  compositions(n, n, current, all);
  for (auto& r : all) {
    long k = 0;
    for (std::size_t i = 0; i < r.size(); ++i) k += (1 - static_cast<long>(i)) * r[i];
    if (k < 1) continue;
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    out.push_back(r);
  }
  return out;
}

std::map<std::vector<long>, Integer> plane_forest_degree_counts(int n, trees::EnumBound bound) {
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::map<std::vector<long>, long> counts;
  std::vector<long> d(n);
  trees::for_each_ordered_forest(labels, [&](const PlaneTree& t, Label) {
    for (int i = 1; i <= n; ++i) d[i - 1] = static_cast<long>(t.degree(i));
    ++counts[d];
  }, bound);
  std::map<std::vector<long>, Integer> out;
  for (const auto& [key, c] : counts) out.emplace(key, Integer(c));
  return out;
}

}  // namespace ramanujan::forests
