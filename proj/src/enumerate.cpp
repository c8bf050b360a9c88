#include "ramanujan/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

namespace ramanujan::trees {

EnumSpec EnumSpec::on(int n) {
  EnumSpec s;
  s.labels.resize(std::max(n, 0));
  std::iota(s.labels.begin(), s.labels.end(), 1);
  return s;
}

EnumSpec EnumSpec::rooted(int n, Label root) {
  EnumSpec s = on(n);
  s.root = root;
  return s;
}

void EnumSpec::validate() const {
  if (labels.empty()) throw std::invalid_argument("empty label set");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate labels");
  }
  if (sorted.front() <= 0) throw std::invalid_argument("labels must be positive");
  if (root && !std::binary_search(sorted.begin(), sorted.end(), *root)) {
    throw std::invalid_argument("root " + std::to_string(*root) + " is not a label");
  }
  if (improper && really_improper) {
    throw std::invalid_argument("set at most one of improper and really_improper");
  }
}

EnumBound EnumBound::from_env() {
  EnumBound b;
  if (const char* v = std::getenv("RAMANUJAN_MAX_LABELS")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n > 0 && n <= 30) b.max_labels = static_cast<int>(n);
  }
  return b;
}

namespace {

void check_bound(std::size_t n, EnumBound bound) {
  if (n > static_cast<std::size_t>(bound.max_labels)) {
    throw BoundExceeded("enumeration over " + std::to_string(n) + " labels exceeds the cap of " +
                        std::to_string(bound.max_labels) + " (RAMANUJAN_MAX_LABELS)");
  }
}

// Builds every plane tree by growing ordered forests under a vertex.  The
// continuation runs once the current forest is complete.
class Walker {
 public:
  Walker(std::vector<Label> labels, bool increasing_only, Shard shard,
         std::function<void(const PlaneTree&)> visit)
      : labels_(std::move(labels)),
        increasing_(increasing_only),
        shard_(shard),
        visit_(std::move(visit)),
        builder_(labels_, labels_.front()) {}

  void run(std::optional<Label> root) {
    const std::uint32_t all = labels_.size() == 32 ? ~0u : (1u << labels_.size()) - 1;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (root && labels_[i] != *root) continue;
      builder_.set_root(labels_[i]);
      forest(all & ~(1u << i), labels_[i], [this] { visit_(builder_.tree()); }, true);
    }
  }

 private:
  bool mine() { return counter_++ % static_cast<std::uint64_t>(shard_.count) == static_cast<std::uint64_t>(shard_.index); }

  void forest(std::uint32_t rest, Label parent, const std::function<void()>& k, bool top) {
    if (rest == 0) {
      if (!top || mine()) k();
      return;
    }
    // Nonempty submasks of `rest` in increasing order.
    std::uint32_t sub = 0;
    do {
      sub = (sub - rest) & rest;
      for (std::uint32_t bits = sub; bits; bits &= bits - 1) {
        const int i = __builtin_ctz(bits);
        const Label a = labels_[i];
        if (increasing_ && a < parent) continue;
        if (top && !mine()) continue;
        builder_.push_child(parent, a);
        const std::uint32_t remainder = rest & ~sub;
        forest(sub & ~(1u << i), a, [&] { forest(remainder, parent, k, false); }, false);
        builder_.pop_child(parent);
      }
    } while (sub != rest);
  }

  std::vector<Label> labels_;
  bool increasing_;
  Shard shard_;
  std::function<void(const PlaneTree&)> visit_;
  TreeBuilder builder_;
  std::uint64_t counter_ = 0;
};

std::vector<Label> sorted_labels(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

bool accepts(const EnumSpec& spec, const TreeStats& s) {
  if (spec.improper && s.improper() != *spec.improper) return false;
  if (spec.really_improper && s.really_improper() != *spec.really_improper) return false;
  return true;
}

// Exponent vectors (in universe order) mapped to counts.
class WeightAccumulator {
 public:
  WeightAccumulator(const EnumSpec& spec)
      : spec_(&spec), universe_(weight_universe(spec)), slots_(index_slots(spec, universe_)) {}

  void add(const TreeStats& s) {
    key_.assign(universe_.size(), 0);
    fill_key(s);
    ++counts_[key_];
  }

  void merge(const WeightAccumulator& other) {
    for (const auto& [k, c] : other.counts_) counts_[k] += c;
  }

  Poly poly() const {
    Poly out(universe_);
    for (const auto& [k, c] : counts_) {
      Monomial m;
      for (std::size_t v = 0; v < k.size(); ++v) {
        if (k[v]) m = m * Monomial::variable(static_cast<VarId>(v), k[v]);
      }
      out += Poly::term(universe_, m, Integer(static_cast<long>(c)));
    }
    return out;
  }

 private:
  struct Slots {
    VarId t = 0;
    VarId x = 0;                       // o- and p-modes
    std::vector<std::pair<Label, VarId>> per_label;  // multivar
  };

  static Slots index_slots(const EnumSpec& spec, const Universe& u) {
    Slots s;
    s.t = u.at("t");
    if (spec.weight == WeightMode::kMultivar) {
      for (Label l : spec.labels) s.per_label.emplace_back(l, u.at("x" + std::to_string(l)));
    } else {
      s.x = u.at("x");
    }
    return s;
  }

  void fill_key(const TreeStats& s) {
    key_[slots_.t] = static_cast<std::uint32_t>(s.eld_total);
    switch (spec_->weight) {
      case WeightMode::kO: {
        const int y = s.young.size() > 1 ? s.young[1] : 0;
        if (y < 1) throw std::invalid_argument("o-mode weight needs young(1) >= 1");
        key_[slots_.x] = static_cast<std::uint32_t>(y - 1);
        break;
      }
      case WeightMode::kP:
        key_[slots_.x] = static_cast<std::uint32_t>(s.young.size() > 1 ? s.young[1] : 0);
        break;
      case WeightMode::kMultivar:
        for (const auto& [l, v] : slots_.per_label) key_[v] = static_cast<std::uint32_t>(s.young[l]);
        break;
    }
  }

  const EnumSpec* spec_;
  Universe universe_;
  Slots slots_;
  std::vector<std::uint32_t> key_;
  std::map<std::vector<std::uint32_t>, long long> counts_;
};

// Runs `body(shard)` on `jobs` threads and rethrows the first failure.
template <typename Body>
void parallel_shards(int jobs, Body body) {
  jobs = std::max(jobs, 1);
  if (jobs == 1) {
    body(Shard{0, 1});
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int i = 0; i < jobs; ++i) {
    threads.emplace_back([&, i] {
      try {
        body(Shard{i, jobs});
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

void enumerate(const EnumSpec& spec, const TreeVisitor& visit, EnumBound bound, Shard shard) {
  spec.validate();
  check_bound(spec.labels.size(), bound);
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) {
    throw std::invalid_argument("bad shard");
  }
  Walker walker(sorted_labels(spec.labels), spec.increasing_only, shard, [&](const PlaneTree& t) {
    const TreeStats s = stats(t);
    if (accepts(spec, s)) visit(t, s);
  });
  walker.run(spec.root);
}

void for_each_tree(const std::vector<Label>& labels, std::optional<Label> root,
                   const std::function<void(const PlaneTree&)>& visit, EnumBound bound) {
  EnumSpec spec;
  spec.labels = labels;
  spec.root = root;
  spec.validate();
  check_bound(labels.size(), bound);
  Walker walker(sorted_labels(labels), false, Shard{}, visit);
  walker.run(root);
}

std::vector<PlaneTree> collect(const EnumSpec& spec, EnumBound bound) {
  std::vector<PlaneTree> out;
  enumerate(spec, [&](const PlaneTree& t, const TreeStats&) { out.push_back(t); }, bound);
  return out;
}

std::uint64_t count(const EnumSpec& spec, EnumBound bound) {
  std::uint64_t n = 0;
  if (!spec.improper && !spec.really_improper && !spec.increasing_only) {
    spec.validate();
    check_bound(spec.labels.size(), bound);
    Walker walker(sorted_labels(spec.labels), false, Shard{}, [&](const PlaneTree&) { ++n; });
    walker.run(spec.root);
    return n;
  }
  enumerate(spec, [&](const PlaneTree&, const TreeStats&) { ++n; }, bound);
  return n;
}

Universe weight_universe(const EnumSpec& spec) {
  if (spec.weight != WeightMode::kMultivar) return Universe({"x", "t"});
  std::vector<std::string> names{"t"};
  for (Label l : spec.labels) names.push_back("x" + std::to_string(l));
  return Universe(names);
}

Poly weight(const EnumSpec& spec, const TreeStats& s) {
  WeightAccumulator acc(spec);
  acc.add(s);
  return acc.poly();
}

Poly generating_poly(const EnumSpec& spec, int jobs, EnumBound bound) {
  spec.validate();
  check_bound(spec.labels.size(), bound);
  std::vector<WeightAccumulator> parts(std::max(jobs, 1), WeightAccumulator(spec));
  parallel_shards(jobs, [&](Shard shard) {
    auto& acc = parts[shard.index];
    enumerate(spec, [&](const PlaneTree&, const TreeStats& s) { acc.add(s); }, bound, shard);
  });
  for (std::size_t i = 1; i < parts.size(); ++i) parts[0].merge(parts[i]);
  return parts[0].poly();
}

std::map<int, Poly> generating_polys_by(const EnumSpec& spec, KStat stat, int jobs, EnumBound bound) {
  EnumSpec open = spec;
  open.improper.reset();
  open.really_improper.reset();
  open.validate();
  check_bound(open.labels.size(), bound);
  std::vector<std::map<int, WeightAccumulator>> parts(std::max(jobs, 1));
  parallel_shards(jobs, [&](Shard shard) {
    auto& mine = parts[shard.index];
    enumerate(open, [&](const PlaneTree&, const TreeStats& s) {
      const int k = stat == KStat::kImproper ? s.improper() : s.really_improper();
      auto it = mine.find(k);
      if (it == mine.end()) it = mine.emplace(k, WeightAccumulator(open)).first;
      it->second.add(s);
    }, bound, shard);
  });
  std::map<int, Poly> out;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    for (auto& [k, acc] : parts[i]) {
      auto it = parts[0].find(k);
      if (it == parts[0].end()) {
        parts[0].emplace(k, acc);
      } else {
        it->second.merge(acc);
      }
    }
  }
  for (const auto& [k, acc] : parts[0]) out.emplace(k, acc.poly());
  return out;
}

std::map<int, Integer> leaf_profile(int n, EnumBound bound) {
  if (n < 1) throw std::invalid_argument("leaf_profile needs n >= 1");
  std::map<int, std::uint64_t> counts;
  for_each_tree(EnumSpec::on(n).labels, std::nullopt, [&](const PlaneTree& t) {
    int leaves = 0;
    for (Label v : t.labels()) leaves += t.degree(v) == 0;
    ++counts[leaves];
  }, bound);
  std::map<int, Integer> out;
  for (const auto& [k, c] : counts) out.emplace(k, Integer(static_cast<unsigned long>(c)));
  return out;
}

void for_each_ordered_forest(const std::vector<Label>& labels,
                             const std::function<void(const PlaneTree&, Label)>& visit, EnumBound bound) {
  if (labels.empty()) throw std::invalid_argument("empty label set");
  check_bound(labels.size(), bound);
  auto all = sorted_labels(labels);
  const Label v = all.back() + 1;
  all.push_back(v);
  Walker walker(all, false, Shard{}, [&](const PlaneTree& t) { visit(t, v); });
  walker.run(v);
}

}  // namespace ramanujan::trees
