#include "ramanujan/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ramanujan {

ParseError::ParseError(const std::string& what, std::size_t position)
    : PolyError(what + " at position " + std::to_string(position)), position_(position) {}

// ---------------------------------------------------------------------------
// Universe

long Universe::rank(std::string_view name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "z") return 2;
  if (name == "t") return 3;
  if (name.size() >= 2 && name[0] == 'x' && name[1] != '0') {
    long index = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
      index = index * 10 + (c - '0');
      if (index > 1'000'000) return -1;
    }
    return 3 + index;
  }
  return -1;
}

Universe::Universe(std::vector<std::string> names) {
  for (const auto& n : names) {
    if (rank(n) < 0) throw PolyError("variable name '" + n + "' is not in the x,y,z,t,x1,x2,... family");
  }
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return rank(a) < rank(b); });
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    throw PolyError("duplicate variable name in universe");
  }
  if (names.size() > 0xFFFF) throw PolyError("universe too large");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const Universe& Universe::xyzt() {
  static const Universe u({"x", "y", "z", "t"});
  return u;
}

Universe Universe::indexed(int n, bool with_t) {
  std::vector<std::string> names;
  if (with_t) names.emplace_back("t");
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Universe(std::move(names));
}

std::optional<VarId> Universe::find(std::string_view name) const {
  const auto& v = *names_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == name) return static_cast<VarId>(i);
  }
  return std::nullopt;
}

VarId Universe::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw PolyError("variable '" + std::string(name) + "' is not declared in this universe");
}

bool Universe::operator==(const Universe& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(VarId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (const auto& [var, e] : factors_) {
    if (var == v) return e;
  }
  return 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::without(VarId v) const { return with_exponent(v, 0); }

Monomial Monomial::with_exponent(VarId v, std::uint32_t e) const {
  Monomial out;
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && f.first >= v) {
      if (e > 0) out.factors_.emplace_back(v, e);
      placed = true;
      if (f.first == v) continue;
    }
    out.factors_.push_back(f);
  }
  if (!placed && e > 0) out.factors_.emplace_back(v, e);
  return out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  // Equal degrees force equal lengths once all shared factors agree.
  return i < fa.size() && i >= fb.size();
}

// ---------------------------------------------------------------------------
// Poly basics

Poly::Poly(Universe universe, const Integer& constant) : universe_(std::move(universe)) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly Poly::variable(const Universe& universe, std::string_view name) {
  Poly p(universe);
  p.terms_.emplace(Monomial::variable(universe.at(name)), Integer(1));
  return p;
}

Poly Poly::term(const Universe& universe, const Monomial& m, const Integer& c) {
  Poly p(universe);
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_same(const Poly& other, const char* op) const {
  if (!(universe_ == other.universe_)) {
    throw UniverseMismatch(std::string("universe mismatch in ") + op);
  }
}

Integer Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

long Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_.begin()->first.degree());
}

long Poly::degree_in(std::string_view name) const {
  if (terms_.empty()) return -1;
  auto v = universe_.find(name);
  if (!v) return 0;
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m.exponent(*v));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& kv) { return kv.first.degree() == d; });
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  check_same(other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same(other, "sub");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b, "mul");
  Poly out(a.universe_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result(universe_, Integer(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::substitute(const std::map<std::string, Poly, std::less<>>& assignment) const {
  std::vector<std::optional<Poly>> images(universe_.size());
  for (const auto& [name, image] : assignment) {
    auto v = universe_.find(name);
    if (!v) throw UniverseMismatch("substitution for undeclared variable '" + name + "'");
    check_same(image, "substitute");
    images[*v] = image;
  }
  // powers[v][e] cached lazily
  std::vector<std::vector<Poly>> powers(universe_.size());
  auto power_of = [&](VarId v, std::uint32_t e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(universe_, Integer(1));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[v]);
    return cache[e];
  };

  Poly out(universe_);
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    Poly factor(universe_, c);
    for (const auto& [v, e] : m.factors()) {
      if (images[v]) {
        factor *= power_of(v, e);
      } else {
        kept = kept * Monomial::variable(v, e);
      }
    }
    for (const auto& [fm, fc] : factor.terms_) out.add_term(fm * kept, fc);
  }
  return out;
}

Poly Poly::derivative(std::string_view name) const {
  const VarId v = universe_.at(name);
  Poly out(universe_);
  for (const auto& [m, c] : terms_) {
    const auto e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.with_exponent(v, e - 1), c * e);
  }
  return out;
}

Poly Poly::shifted_derivative(std::string_view name, long n) const {
  const VarId v = universe_.at(name);
  Poly out(universe_);
  for (const auto& [m, c] : terms_) {
    out.add_term(m, c * (n + static_cast<long>(m.exponent(v))));
  }
  return out;
}

Integer Poly::evaluate(const std::map<std::string, Integer, std::less<>>& point) const {
  std::vector<const Integer*> values(universe_.size(), nullptr);
  for (const auto& [name, value] : point) {
    if (auto v = universe_.find(name)) values[*v] = &value;
  }
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer term = c;
    for (const auto& [v, e] : m.factors()) {
      if (!values[v]) {
        throw UnassignedVariable("no value given for variable '" + universe_.name(v) + "'");
      }
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), values[v]->get_mpz_t(), e);
      term *= p;
    }
    total += term;
  }
  return total;
}

Poly Poly::in(const Universe& target) const {
  if (universe_ == target) return *this;
  std::vector<VarId> map(universe_.size());
  std::vector<bool> mapped(universe_.size(), false);
  for (VarId v = 0; v < universe_.size(); ++v) {
    if (auto w = target.find(universe_.name(v))) {
      map[v] = *w;
      mapped[v] = true;
    }
  }
  Poly out(target);
  for (const auto& [m, c] : terms_) {
    Monomial moved;
    for (const auto& [v, e] : m.factors()) {
      if (!mapped[v]) {
        throw UniverseMismatch("variable '" + universe_.name(v) + "' is not declared in the target universe");
      }
      moved = moved * Monomial::variable(map[v], e);
    }
    out.add_term(moved, c);
  }
  return out;
}

bool Poly::operator==(const Poly& other) const {
  return universe_ == other.universe_ && terms_ == other.terms_;
}

std::string Poly::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (m.is_one() || magnitude != 1) {
      os << magnitude.get_str();
      wrote = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (wrote) os << '*';
      os << universe_.name(v);
      if (e >= 2) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.render(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Universe& u) : text_(text), u_(u) {}

  Poly parse_all() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial text", pos_);
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_primary() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const unsigned char c = text_[pos_];
    return std::isdigit(c) || std::isalpha(c) || c == '(';
  }

  Poly expr() {
    Poly acc(u_);
    bool negative = false;
    if (peek('+') || peek('-')) negative = text_[pos_++] == '-';
    for (;;) {
      Poly t = term();
      if (negative) acc -= t; else acc += t;
      if (!(peek('+') || peek('-'))) break;
      negative = text_[pos_++] == '-';
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_primary()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > 1'000'000) throw ParseError("exponent too large", start);
        ++pos_;
      }
      if (pos_ == start) throw ParseError("expected exponent after '^'", pos_);
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const unsigned char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Poly inner = expr();
      if (!peek(')')) throw ParseError("unbalanced parenthesis opened", open);
      ++pos_;
      return inner;
    }
    if (c == '-' || c == '+') {
      ++pos_;
      Poly inner = factor();
      return c == '-' ? -inner : inner;
    }
    if (std::isdigit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(u_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return identifier(text_.substr(start, pos_ - start), start);
    }
    throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
  }

  // A run of letters/digits: a declared name, or a juxtaposition of
  // declared names such as "xy" or "x1x2" (longest match, backtracking).
  Poly identifier(std::string_view word, std::size_t start) {
    if (u_.contains(word)) return Poly::variable(u_, word);
    std::vector<std::string_view> pieces;
    if (!split(word, pieces)) {
      throw ParseError("unknown variable '" + std::string(word) + "'", start);
    }
    // Consume only the first name so that a following '^' binds to the
    // last one ("xt^2" is x*t^2).
    pos_ = start + pieces.front().size();
    return Poly::variable(u_, pieces.front());
  }

  bool split(std::string_view word, std::vector<std::string_view>& out) {
    if (word.empty()) return true;
    for (std::size_t len = word.size(); len > 0; --len) {
      auto head = word.substr(0, len);
      if (!u_.contains(head)) continue;
      out.push_back(head);
      if (split(word.substr(len), out)) return true;
      out.pop_back();
    }
    return false;
  }

  std::string_view text_;
  const Universe& u_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, const Universe& universe) {
  return Parser(text, universe).parse_all();
}

}  // namespace ramanujan
