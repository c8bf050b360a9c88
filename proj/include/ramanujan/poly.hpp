#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients over a named, totally ordered variable universe.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramanujan {

using Integer = mpz_class;

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UniverseMismatch : public PolyError {
 public:
  using PolyError::PolyError;
};

class ParseError : public PolyError {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnassignedVariable : public PolyError {
 public:
  using PolyError::PolyError;
};

// Position of a variable inside its universe.
using VarId = std::uint16_t;

// An ordered set of variable names drawn from the family
// x < y < z < t < x1 < x2 < ...  Universes are kept sorted by that order,
// so comparing VarIds of one universe compares the variables.
class Universe {
 public:
  // Throws PolyError on names outside the family or duplicates.
  explicit Universe(std::vector<std::string> names);

  static const Universe& xyzt();
  // {x1, ..., xn}, optionally with t.
  static Universe indexed(int n, bool with_t);

  std::size_t size() const { return names_->size(); }
  const std::string& name(VarId v) const { return (*names_)[v]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<VarId> find(std::string_view name) const;
  VarId at(std::string_view name) const;  // throws PolyError
  bool contains(std::string_view name) const { return find(name).has_value(); }

  bool operator==(const Universe& other) const;

  // Rank in the global variable order; -1 for names outside the family.
  static long rank(std::string_view name);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Exponent map with no explicit zeros, sorted by VarId.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarId v, std::uint32_t exponent = 1);

  const std::vector<std::pair<VarId, std::uint32_t>>& factors() const { return factors_; }
  std::uint32_t exponent(VarId v) const;
  std::uint64_t degree() const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial without(VarId v) const;
  Monomial with_exponent(VarId v, std::uint32_t e) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<VarId, std::uint32_t>> factors_;
};

// Graded lexicographic, largest first: higher total degree first, then
// higher exponent of the earliest variable in universe order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Integer, GrlexDescending>;

  explicit Poly(Universe universe) : universe_(std::move(universe)) {}
  Poly(Universe universe, const Integer& constant);

  static Poly variable(const Universe& universe, std::string_view name);
  static Poly term(const Universe& universe, const Monomial& m, const Integer& c);

  // Relaxed syntax: integers, variables, + - * ^, parentheses and implicit
  // multiplication ("3x", "(3x+4)t", "xy" when x and y are declared).
  static Poly parse(std::string_view text, const Universe& universe);

  const Universe& universe() const { return universe_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;
  // Maximal total degree; -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(std::string_view name) const;
  bool is_homogeneous() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Integer& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
  friend Poly operator*(const Integer& c, Poly a) { return a *= c; }

  Poly pow(unsigned e) const;

  // Simultaneous substitution; unassigned variables stay put.  Replacement
  // polynomials must live in this polynomial's universe.
  Poly substitute(const std::map<std::string, Poly, std::less<>>& assignment) const;

  Poly derivative(std::string_view name) const;
  // n*p + v*dp/dv
  Poly shifted_derivative(std::string_view name, long n) const;

  Integer evaluate(const std::map<std::string, Integer, std::less<>>& point) const;

  // Same polynomial expressed over another universe; throws UniverseMismatch
  // when a variable that occurs is not declared there.
  Poly in(const Universe& target) const;

  // Canonical text: grlex order, " + " / " - " separators, '*' between
  // factors, "^e" for e >= 2, unit coefficients omitted.
  std::string render() const;

  bool operator==(const Poly& other) const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  void check_same(const Poly& other, const char* op) const;

  Universe universe_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace ramanujan
