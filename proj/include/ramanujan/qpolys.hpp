#pragma once

// The generalized Ramanujan polynomials Q_n(x,y,z,t), their coefficient
// table Q_{n,k}(x,t), the classical specializations P_n and R_n, and the
// product closed forms at special values.

#include <map>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ramanujan/poly.hpp"
#include "ramanujan/report.hpp"

namespace ramanujan::qpolys {

const Universe& xyzt();
const Universe& xt();
const Universe& xy();
const Universe& y_only();

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Q_1 = 1, Q_{n+1} = [x + n z + (y + t)(n + y d/dy)] Q_n.  Throws
// DomainError for n < 1.
Poly q_n(int n);

// P_1 = 1, P_{n+1} = [x + n + y(n + y d/dy)] P_n, over {x, y}.
Poly p_n(int n);

// R_1 = 1, R_{n+1} = [n(1 + y) + y^2 d/dy] R_n, over {y}.
Poly r_n(int n);

// Coefficient of y^k in Q_n(x,y,1,t), over {x, t}; zero when k < 0 or
// k >= n.  With `shifted` the result is Q_{n,k}(x - t - 1, t).
Poly q_nk(int n, int k, bool shifted = false);

// Q_{n,k}(x - t - 1, t) computed by its own recurrence
//   S_{n,k} = [x + n - 2 + t(n + k - 2)] S_{n-1,k} + (n + k - 2) S_{n-1,k-1},
// independent of the substitution route used by q_nk(..., true).
Poly q_nk_shifted_recurrence(int n, int k);

// Memoized Q_{n,k} table.  Safe to read from many threads; entries are
// built on demand under an exclusive lock.
class QTable {
 public:
  const Poly& get(int n, int k);
  void build(int max_n);
  int built_to() const;

  // {"n,k": canonical text} for 1 <= n <= max_n, 0 <= k < n.
  nlohmann::json to_json(int max_n);
  // Entries are parsed and checked against the recurrence; throws
  // std::invalid_argument on malformed keys or mismatching entries.
  static void load_json(QTable& table, const nlohmann::json& j);

 private:
  const Poly* find(int n, int k) const;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, Poly> entries_;
  int built_to_ = 0;
};

QTable& shared_table();

enum class ClosedForm { kSpecial2, kFactor, kQnxt, kGesselSeo };

std::optional<ClosedForm> closed_form_from_string(std::string_view name);

// t-equals-minus-y: prod_{k=1}^{n-1} (x + k z)
// factor:     prod_{k=1}^{n-1} (x + k z + k t)
// y-equals-z: prod_{k=1}^{n-1} (x + n z + k t)
// gessel-seo: x prod_{k=1}^{n-1} (x + (n - k) z + k t)
Poly closed_form(ClosedForm form, int n);
Poly closed_form(std::string_view name, int n);  // DomainError on unknown name

enum class IdentityName {
  kDuality,
  kExpansion,
  kSpecial2,
  kFactor,
  kQnxt,
  kRec2,
  kRec3,
  kDiff,
  kMainconj,
  kOperatorRemark,
  kChu,
  kGesselSeo,
  kEqEquiv,
};

const std::vector<IdentityName>& all_identity_names();
std::string_view to_string(IdentityName name);
std::optional<IdentityName> identity_from_string(std::string_view name);

// Builds both sides of the named identity at the given n exactly and
// compares them.  Identities indexed by k report one instance per k
// (or only the requested one).  dual-form and the enumeration half of
// gessel-seo sum over explicitly enumerated plane trees.
VerificationReport verify_identity(IdentityName name, int n, std::optional<int> k = std::nullopt);

}  // namespace ramanujan::qpolys
