#include "ramanujan/qpolys.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ramanujan::qpolys {

const Universe& xyzt() { return Universe::xyzt(); }

const Universe& xt() {
  static const Universe u({"x", "t"});
  return u;
}

const Universe& xy() {
  static const Universe u({"x", "y"});
  return u;
}

const Universe& y_only() {
  static const Universe u({"y"});
  return u;
}

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + " needs n >= 1, got " + std::to_string(n));
}

Poly var(const Universe& u, std::string_view name) { return Poly::variable(u, name); }
Poly cst(const Universe& u, long c) { return Poly(u, Integer(c)); }

// Sequence memo for one-index recurrences, grown under a lock.
template <typename Step>
class SequenceMemo {
 public:
  SequenceMemo(Poly first, Step step) : step_(step) { values_.push_back(std::move(first)); }

  Poly get(int n) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) <= values_.size()) return values_[n - 1];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() < static_cast<std::size_t>(n)) {
      const int m = static_cast<int>(values_.size());
      values_.push_back(step_(values_.back(), m));
    }
    return values_[n - 1];
  }

 private:
  Step step_;
  std::shared_mutex mutex_;
  std::vector<Poly> values_;
};

}  // namespace

Poly q_n(int n) {
  require_positive(n, "Q_n");
  static SequenceMemo memo(cst(xyzt(), 1), [](const Poly& q, int m) {
    const auto& u = xyzt();
    Poly head = var(u, "x") + cst(u, m) * var(u, "z");
    return head * q + (var(u, "y") + var(u, "t")) * q.shifted_derivative("y", m);
  });
  return memo.get(n);
}

Poly p_n(int n) {
  require_positive(n, "P_n");
  static SequenceMemo memo(cst(xy(), 1), [](const Poly& p, int m) {
    const auto& u = xy();
    return (var(u, "x") + cst(u, m)) * p + var(u, "y") * p.shifted_derivative("y", m);
  });
  return memo.get(n);
}

Poly r_n(int n) {
  require_positive(n, "R_n");
  static SequenceMemo memo(cst(y_only(), 1), [](const Poly& r, int m) {
    const auto& u = y_only();
    return cst(u, m) * r + var(u, "y") * r.shifted_derivative("y", m);
  });
  return memo.get(n);
}

// ---------------------------------------------------------------------------
// QTable

const Poly* QTable::find(int n, int k) const {
  auto it = entries_.find({n, k});
  return it == entries_.end() ? nullptr : &it->second;
}

const Poly& QTable::get(int n, int k) {
  require_positive(n, "Q_{n,k}");
  static const Poly zero(xt());
  if (k < 0 || k >= n) return zero;
  {
    std::shared_lock lock(mutex_);
    if (const Poly* p = find(n, k)) return *p;
  }
  build(n);
  std::shared_lock lock(mutex_);
  return *find(n, k);
}

void QTable::build(int max_n) {
  std::unique_lock lock(mutex_);
  const auto& u = xt();
  if (entries_.empty()) {
    entries_.emplace(std::pair{1, 0}, cst(u, 1));
    built_to_ = 1;
  }
  for (int n = built_to_ + 1; n <= max_n; ++n) {
    for (int k = 0; k < n; ++k) {
      Poly value(u);
      if (const Poly* prev = find(n - 1, k)) {
        value += (var(u, "x") + cst(u, n - 1) + cst(u, n + k - 1) * var(u, "t")) * *prev;
      }
      if (const Poly* prev = find(n - 1, k - 1)) {
        value += Integer(n + k - 2) * *prev;
      }
      entries_.insert_or_assign(std::pair{n, k}, std::move(value));
    }
    built_to_ = n;
  }
}

int QTable::built_to() const {
  std::shared_lock lock(mutex_);
  return built_to_;
}

nlohmann::json QTable::to_json(int max_n) {
  build(max_n);
  nlohmann::json j = nlohmann::json::object();
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k < n; ++k) {
      j[std::to_string(n) + "," + std::to_string(k)] = get(n, k).render();
    }
  }
  return j;
}

void QTable::load_json(QTable& table, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("QTable cache must be a JSON object");
  int max_n = 0;
  std::vector<std::tuple<int, int, Poly>> parsed;
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad QTable key '" + key + "'");
    int n = 0;
    int k = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(key.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument(key);
      k = std::stoi(key.substr(comma + 1), &used);
      if (used != key.size() - comma - 1) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad QTable key '" + key + "'");
    }
    if (n < 1 || k < 0 || k >= n) throw std::invalid_argument("QTable key out of range '" + key + "'");
    if (!value.is_string()) throw std::invalid_argument("QTable value for '" + key + "' is not a string");
    parsed.emplace_back(n, k, Poly::parse(value.get<std::string>(), xt()));
    max_n = std::max(max_n, n);
  }
  table.build(max_n);
  for (const auto& [n, k, p] : parsed) {
    if (!(table.get(n, k) == p)) {
      throw std::invalid_argument("QTable entry " + std::to_string(n) + "," + std::to_string(k) +
                                  " disagrees with the recurrence");
    }
  }
}

QTable& shared_table() {
  static QTable table;
  return table;
}

Poly q_nk(int n, int k, bool shifted) {
  Poly p = shared_table().get(n, k);
  if (!shifted || p.is_zero()) return p;
  const auto& u = xt();
  return p.substitute({{"x", var(u, "x") - var(u, "t") - cst(u, 1)}});
}

Poly q_nk_shifted_recurrence(int n, int k) {
  require_positive(n, "Q_{n,k}");
  const auto& u = xt();
  if (k < 0 || k >= n) return Poly(u);
  std::vector<Poly> row{cst(u, 1)};  // row[k] for current n
  for (int m = 2; m <= n; ++m) {
    std::vector<Poly> next(m, Poly(u));
    for (int j = 0; j < m; ++j) {
      if (j < m - 1) {
        next[j] += (var(u, "x") + cst(u, m - 2) + cst(u, m + j - 2) * var(u, "t")) * row[j];
      }
      if (j >= 1) next[j] += Integer(m + j - 2) * row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

// ---------------------------------------------------------------------------
// Closed forms

std::optional<ClosedForm> closed_form_from_string(std::string_view name) {
  if (name == "t-equals-minus-y") return ClosedForm::kSpecial2;
  if (name == "factor") return ClosedForm::kFactor;
  if (name == "y-equals-z") return ClosedForm::kQnxt;
  if (name == "gessel-seo") return ClosedForm::kGesselSeo;
  return std::nullopt;
}

Poly closed_form(ClosedForm form, int n) {
  require_positive(n, "closed form");
  const auto& u = xyzt();
  const Poly x = var(u, "x");
  const Poly z = var(u, "z");
  const Poly t = var(u, "t");
  Poly product = form == ClosedForm::kGesselSeo ? x : cst(u, 1);
  for (int k = 1; k <= n - 1; ++k) {
    switch (form) {
      case ClosedForm::kSpecial2: product *= x + Integer(k) * z; break;
      case ClosedForm::kFactor: product *= x + Integer(k) * z + Integer(k) * t; break;
      case ClosedForm::kQnxt: product *= x + Integer(n) * z + Integer(k) * t; break;
      case ClosedForm::kGesselSeo: product *= x + Integer(n - k) * z + Integer(k) * t; break;
    }
  }
  return product;
}

Poly closed_form(std::string_view name, int n) {
  auto form = closed_form_from_string(name);
  if (!form) throw DomainError("unknown closed form '" + std::string(name) + "'");
  return closed_form(*form, n);
}

// ---------------------------------------------------------------------------
// Identity names

namespace {
constexpr std::pair<IdentityName, std::string_view> kNames[] = {
    {IdentityName::kDuality, "duality"},
    {IdentityName::kExpansion, "expansion"},
    {IdentityName::kSpecial2, "t-equals-minus-y"},
    {IdentityName::kFactor, "factor"},
    {IdentityName::kQnxt, "y-equals-z"},
    {IdentityName::kRec2, "second-recurrence"},
    {IdentityName::kRec3, "shifted-recurrence"},
    {IdentityName::kDiff, "diff"},
    {IdentityName::kMainconj, "reflection"},
    {IdentityName::kOperatorRemark, "operator-form"},
    {IdentityName::kChu, "chu"},
    {IdentityName::kGesselSeo, "gessel-seo"},
    {IdentityName::kEqEquiv, "dual-form"},
};
}  // namespace

const std::vector<IdentityName>& all_identity_names() {
  static const std::vector<IdentityName> names = [] {
    std::vector<IdentityName> v;
    for (const auto& [n, s] : kNames) v.push_back(n);
    return v;
  }();
  return names;
}

std::string_view to_string(IdentityName name) {
  for (const auto& [n, s] : kNames) {
    if (n == name) return s;
  }
  return "?";
}

std::optional<IdentityName> identity_from_string(std::string_view name) {
  for (const auto& [n, s] : kNames) {
    if (s == name) return n;
  }
  return std::nullopt;
}

}  // namespace ramanujan::qpolys
