#include <gtest/gtest.h>

#include "ramanujan/combinatorics.hpp"
#include "ramanujan/qpolys.hpp"
#include "ramanujan/suite.hpp"

using namespace ramanujan;
using namespace ramanujan::qpolys;

namespace {

Poly P4(const std::string& s) { return Poly::parse(s, xyzt()); }
Poly Pxt(const std::string& s) { return Poly::parse(s, xt()); }

// Q_n at fixed numeric x, z, t as coefficients in y, straight from the
// defining recurrence.
std::vector<Integer> q_numeric(int n, long x, long z, long t) {
  std::vector<Integer> q = {Integer(1)};
  for (int m = 1; m < n; ++m) {
    std::vector<Integer> next(q.size() + 1, Integer(0));
    for (std::size_t k = 0; k < q.size(); ++k) {
      // [x + m z + (y + t)(m + y d/dy)] applied to q_k y^k
      const Integer c = q[k];
      next[k] += c * (x + m * z);
      next[k + 1] += c * (m + static_cast<long>(k));
      next[k] += c * t * (m + static_cast<long>(k));
    }
    q = std::move(next);
  }
  return q;
}

}  // namespace

TEST(Qn, FirstValues) {
  EXPECT_EQ(q_n(1).render(), "1");
  EXPECT_EQ(q_n(2), P4("x+y+z+t"));
  EXPECT_EQ(q_n(3), P4("x^2+3xy+3xz+3xt+3y^2+4yz+5yt+2z^2+4zt+2t^2"));
  EXPECT_THROW(q_n(0), DomainError);
}

TEST(Qn, AgreesWithNumericRecurrence) {
  const long pts[][3] = {{2, 3, 5}, {-1, 4, 2}, {7, -2, 3}, {0, 1, -6}};
  for (int n = 1; n <= 9; ++n) {
    const Poly q = q_n(n);
    for (const auto& pt : pts) {
      const auto coeffs = q_numeric(n, pt[0], pt[1], pt[2]);
      for (long y = -2; y <= 2; ++y) {
        Integer expect = 0;
        Integer yp = 1;
        for (const auto& c : coeffs) {
          expect += c * yp;
          yp *= y;
        }
        EXPECT_EQ(q.evaluate({{"x", Integer(pt[0])}, {"y", Integer(y)}, {"z", Integer(pt[1])}, {"t", Integer(pt[2])}}),
                  expect)
            << "n=" << n;
      }
    }
  }
}

TEST(Qn, HomogeneousOfDegreeNMinusOne) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_TRUE(q_n(n).is_homogeneous());
    EXPECT_EQ(q_n(n).total_degree(), n - 1);
  }
}

TEST(Qn, AllOnesIsNFactorialTimesCatalan) {
  for (int n = 1; n <= 10; ++n) {
    const Integer v = q_n(n).evaluate({{"x", Integer(1)}, {"y", Integer(1)}, {"z", Integer(1)}, {"t", Integer(1)}});
    EXPECT_EQ(v, factorial(n) * catalan(n)) << n;
  }
}

TEST(Qn, DualityAtFour) {
  const Poly q = q_n(4);
  const Poly dual = q.substitute({{"x", P4("x + 4z + 4t")}, {"z", P4("-t")}, {"t", P4("-z")}});
  EXPECT_EQ(q, dual);
}

TEST(Qnk, TableOneCellForCell) {
  for (const auto& [key, text] : harness::golden_qnk()) {
    const auto [n, k] = key;
    if (k < 0) continue;
    EXPECT_EQ(q_nk(n, k).render(), Pxt(text).render()) << n << "," << k;
  }
  EXPECT_TRUE(q_nk(3, 3).is_zero());
  EXPECT_TRUE(q_nk(3, -1).is_zero());
}

TEST(Qnk, TableTwoCellForCell) {
  for (const auto& [key, text] : harness::golden_qnk_shifted()) {
    const auto [n, k] = key;
    if (k < 0) continue;
    EXPECT_EQ(q_nk(n, k, true).render(), Pxt(text).render()) << n << "," << k;
  }
}

TEST(Qnk, FirstRecurrenceDirectly) {
  const Poly x = Pxt("x");
  const Poly t = Pxt("t");
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      const Poly rhs = (x + Pxt(std::to_string(n - 1)) + Integer(n + k - 1) * t) * q_nk(n - 1, k) +
                       Integer(n + k - 2) * q_nk(n - 1, k - 1);
      EXPECT_EQ(q_nk(n, k), rhs) << n << "," << k;
    }
  }
}

TEST(Qnk, ShiftedRouteAgreesWithOwnRecurrence) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) EXPECT_EQ(q_nk(n, k, true), q_nk_shifted_recurrence(n, k)) << n << "," << k;
  }
}

TEST(Qnk, KZeroFactorsAndTopIsDoubleFactorial) {
  for (int n = 1; n <= 9; ++n) {
    Poly prod(xt(), Integer(1));
    for (int k = 1; k < n; ++k) prod *= Pxt("x + " + std::to_string(k) + " + " + std::to_string(k) + "t");
    EXPECT_EQ(q_nk(n, 0), prod);
    EXPECT_EQ(q_nk(n, n - 1), Poly(xt(), odd_double_factorial(n - 1)));
  }
}

TEST(Specializations, RamanujanPolynomials) {
  for (int n = 1; n <= 9; ++n) {
    const Poly r = r_n(n);
    EXPECT_EQ(r.evaluate({{"y", Integer(0)}}), factorial(n - 1));
    EXPECT_EQ(r.evaluate({{"y", Integer(1)}}), power(Integer(n), n - 1));
    EXPECT_EQ(q_n(n).substitute({{"z", P4("1")}, {"t", P4("0")}}), p_n(n).in(xyzt()));
  }
  EXPECT_EQ(r_n(3), Poly::parse("2 + 4y + 3y^2", y_only()));
}

TEST(ClosedForms, ProductsAtSpecialValues) {
  EXPECT_EQ(closed_form("t-equals-minus-y", 3), P4("(x+z)(x+2z)"));
  EXPECT_EQ(closed_form("y-equals-z", 3), P4("(x+3z+t)(x+3z+2t)"));
  EXPECT_EQ(q_n(5).substitute({{"t", P4("-y")}}), closed_form(ClosedForm::kSpecial2, 5));
  EXPECT_EQ(q_n(5).substitute({{"y", P4("0")}}), closed_form(ClosedForm::kFactor, 5));
  EXPECT_EQ(q_n(5).substitute({{"y", P4("z")}}), closed_form(ClosedForm::kQnxt, 5));
  EXPECT_THROW(closed_form("nope", 3), DomainError);
}

TEST(Identities, EveryNamePassesUpToFive) {
  for (IdentityName name : all_identity_names()) {
    const int lo = (name == IdentityName::kRec2 || name == IdentityName::kRec3 || name == IdentityName::kDiff) ? 2 : 1;
    for (int n = lo; n <= 5; ++n) {
      const auto report = verify_identity(name, n);
      EXPECT_EQ(report.overall(), Status::kPass) << to_string(name) << " n=" << n;
      EXPECT_FALSE(report.instances.empty());
    }
  }
}

TEST(Identities, PrintedShiftedRecurrenceFailsFromThree) {
  const auto report = verify_identity(IdentityName::kRec3, 3, 0);
  ASSERT_EQ(report.instances.size(), 1u);
  EXPECT_EQ(report.instances[0].status, Status::kPass);
  EXPECT_FALSE(report.instances[0].notes["shifted_recurrence_unshifted_rhs"].get<bool>());
  EXPECT_TRUE(report.instances[0].notes["shifted_recurrence_shifted_rhs"].get<bool>());
}

TEST(Identities, DomainErrors) {
  EXPECT_THROW(verify_identity(IdentityName::kRec2, 1), DomainError);
  EXPECT_THROW(verify_identity(IdentityName::kDuality, 3, 1), DomainError);
  EXPECT_EQ(identity_from_string("duality"), IdentityName::kDuality);
  EXPECT_FALSE(identity_from_string("thm-1-1").has_value());
}

TEST(QTable, JsonRoundTripAndTamperDetection) {
  QTable table;
  table.build(5);
  EXPECT_GE(table.built_to(), 5);
  const auto j = table.to_json(5);
  EXPECT_EQ(j.at("3,1").get<std::string>(), Pxt("3x+4+5t").render());
  QTable fresh;
  QTable::load_json(fresh, j);
  EXPECT_EQ(fresh.get(4, 2), q_nk(4, 2));
  auto bad = j;
  bad["4,2"] = "15*x + 25*t + 35";
  QTable other;
  EXPECT_THROW(QTable::load_json(other, bad), std::invalid_argument);
  bad = j;
  bad["four,2"] = "1";
  EXPECT_THROW(QTable::load_json(other, bad), std::invalid_argument);
}
