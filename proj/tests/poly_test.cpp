#include <gtest/gtest.h>

#include <random>

#include "ramanujan/combinatorics.hpp"
#include "ramanujan/poly.hpp"

using namespace ramanujan;

namespace {

const Universe& u4() { return Universe::xyzt(); }
Poly P(const std::string& s) { return Poly::parse(s, u4()); }

std::map<std::string, Integer, std::less<>> point(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  return {{"x", d(rng)}, {"y", d(rng)}, {"z", d(rng)}, {"t", d(rng)}};
}

}  // namespace

TEST(Universe, OrdersNamesAndRejectsStrangers) {
  Universe u({"t", "x2", "x", "x10", "x1"});
  EXPECT_EQ(u.names(), (std::vector<std::string>{"x", "t", "x1", "x2", "x10"}));
  EXPECT_THROW(Universe({"w"}), PolyError);
  EXPECT_THROW(Universe({"x", "x"}), PolyError);
}

TEST(Poly, RenderIsCanonicalGrlex) {
  EXPECT_EQ(P("t + x + z + y").render(), "x + y + z + t");
  EXPECT_EQ(P("(x+1)^2").render(), "x^2 + 2*x + 1");
  EXPECT_EQ(P("x - x").render(), "0");
  EXPECT_EQ(P("-3xy^2 + 2").render(), "-3*x*y^2 + 2");
}

TEST(Poly, ParseRelaxedSyntax) {
  EXPECT_EQ(P("3x"), P("3*x"));
  EXPECT_EQ(P("(3x+4)t"), P("3*x*t + 4*t"));
  EXPECT_EQ(P("2xt^2"), P("2*x*t^2"));
  EXPECT_EQ(P("xy"), P("x*y"));
  EXPECT_EQ(P("(x+3+t)(x+3+2t)"), P("x^2 + 3xt + 2t^2 + 6x + 9t + 9"));
  const Universe iu = Universe::indexed(3, true);
  EXPECT_EQ(Poly::parse("x1x2^2", iu), Poly::parse("x1*x2^2", iu));
}

TEST(Poly, ParseErrorsCarryPosition) {
  try {
    P("x + (y");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(P("x + w"), ParseError);
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("x^"), ParseError);
}

TEST(Poly, RoundTripThroughRender) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-20, 20);
  std::uniform_int_distribution<int> e(0, 3);
  const char* names[] = {"x", "y", "z", "t"};
  for (int trial = 0; trial < 50; ++trial) {
    Poly p(u4());
    for (int term = 0; term < 6; ++term) {
      Poly m(u4(), Integer(c(rng)));
      for (const char* v : names) m *= Poly::variable(u4(), v).pow(e(rng));
      p += m;
    }
    EXPECT_EQ(Poly::parse(p.render(), u4()), p);
  }
}

TEST(Poly, ArithmeticAgreesWithEvaluation) {
  std::mt19937 rng(11);
  const Poly a = P("x^2 - 3xy + 7zt - 2");
  const Poly b = P("(x + y + z + t)^3 - 5t");
  for (int i = 0; i < 20; ++i) {
    const auto pt = point(rng);
    const Integer ea = a.evaluate(pt);
    const Integer eb = b.evaluate(pt);
    EXPECT_EQ((a * b).evaluate(pt), ea * eb);
    EXPECT_EQ((a + b).evaluate(pt), ea + eb);
    EXPECT_EQ((a - b).evaluate(pt), ea - eb);
    EXPECT_EQ(a.pow(3).evaluate(pt), ea * ea * ea);
  }
}

TEST(Poly, BinomialExpansionCoefficients) {
  const Poly p = P("x + y").pow(12);
  const VarId x = u4().at("x");
  const VarId y = u4().at("y");
  for (int k = 0; k <= 12; ++k) {
    Monomial m;
    if (k > 0) m = m * Monomial::variable(x, k);
    if (k < 12) m = m * Monomial::variable(y, 12 - k);
    EXPECT_EQ(p.coefficient(m), binomial(12, k));
  }
  EXPECT_EQ(p.total_degree(), 12);
  EXPECT_TRUE(p.is_homogeneous());
}

TEST(Poly, BigCoefficientsStayExact) {
  const Poly p = P("2x + 3").pow(80);
  EXPECT_EQ(p.evaluate({{"x", Integer(0)}, {"y", Integer(0)}, {"z", Integer(0)}, {"t", Integer(0)}}),
            power(Integer(3), 80));
  EXPECT_EQ(p.coefficient(Monomial::variable(u4().at("x"), 80)), power(Integer(2), 80));
}

TEST(Poly, SubstituteIsSimultaneous) {
  const Poly p = P("x^2 + 2y");
  const Poly swapped = p.substitute({{"x", P("y")}, {"y", P("x")}});
  EXPECT_EQ(swapped, P("y^2 + 2x"));
  EXPECT_EQ(P("xz").substitute({{"z", P("x + 1")}}), P("x^2 + x"));
}

TEST(Poly, DerivativesFollowTheLeibnizRule) {
  const Poly p = P("x^3y^2 + 4y z - t");
  EXPECT_EQ(p.derivative("y"), P("2x^3y + 4z"));
  EXPECT_EQ(p.shifted_derivative("y", 3), P("3x^3y^2 + 12yz - 3t + 2x^3y^2 + 4yz"));
  const Poly a = P("x + y^2");
  const Poly b = P("xy - 1");
  EXPECT_EQ((a * b).derivative("y"), a.derivative("y") * b + a * b.derivative("y"));
}

TEST(Poly, UniverseMismatchIsAnError) {
  const Universe xt({"x", "t"});
  const Poly a = Poly::parse("x + t", xt);
  EXPECT_THROW(a + P("x"), UniverseMismatch);
  EXPECT_EQ(a.in(u4()), P("x + t"));
  EXPECT_THROW(P("y").in(xt), UniverseMismatch);
}

TEST(Poly, EvaluateNeedsEveryVariable) {
  EXPECT_THROW(P("x + y").evaluate({{"x", Integer(1)}}), UnassignedVariable);
}

TEST(Combinatorics, AgainstDirectDefinitions) {
  for (long n = 0; n <= 15; ++n) {
    Integer row = 0;
    for (long k = 0; k <= n; ++k) row += binomial(n, k);
    EXPECT_EQ(row, power(Integer(2), n));
    EXPECT_EQ(catalan(n) * Integer(n + 1), binomial(2 * n, n));
    Integer dbl = 1;
    for (long i = 1; i <= 2 * n - 1; i += 2) dbl *= i;
    EXPECT_EQ(odd_double_factorial(n), dbl);
    if (n >= 1) {
      Integer sum = 0;
      for (long k = 1; k <= n; ++k) sum += narayana(n, k);
      EXPECT_EQ(sum, catalan(n));
    }
  }
  const long parts[] = {2, 3, 1};
  EXPECT_EQ(multinomial(6, parts), Integer(60));
  EXPECT_EQ(binomial(3, 5), Integer(0));
}
