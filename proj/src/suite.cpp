#include "ramanujan/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "checks.hpp"
#include "ramanujan/combinatorics.hpp"
#include "ramanujan/enumerate.hpp"
#include "ramanujan/qpolys.hpp"

namespace ramanujan::harness {

namespace {

using nlohmann::json;

Instance compare(int n, std::optional<int> k, const Poly& lhs, const Poly& rhs) {
  if (lhs == rhs) return Instance::pass(n, k);
  return Instance::fail(n, k, poly_witness(lhs.render(), rhs.render()));
}

Instance compare_text(int n, std::optional<int> k, const std::string& computed, const std::string& golden,
                      const std::string& what) {
  if (computed == golden) return Instance::pass(n, k);
  json w = poly_witness(computed, golden);
  w["cell"] = what;
  return Instance::fail(n, k, w);
}

std::vector<Instance> golden_tables(int n, int) {
  std::vector<Instance> out;
  const auto& xt = qpolys::xt();
  if (golden_qn().count(n)) {
    const std::string golden = Poly::parse(golden_qn().at(n), qpolys::xyzt()).render();
    out.push_back(compare_text(n, std::nullopt, qpolys::q_n(n).render(), golden, "Q_n"));
  }
  for (int shifted = 0; shifted <= 1; ++shifted) {
    const auto& table = shifted ? golden_qnk_shifted() : golden_qnk();
    Poly column(xt);
    for (int k = 0; k < n; ++k) {
      const Poly q = qpolys::q_nk(n, k, shifted);
      column += q;
      auto it = table.find({n, k});
      if (it == table.end()) continue;
      Instance inst = compare_text(n, k, q.render(), Poly::parse(it->second, xt).render(),
                                   shifted ? "shifted table" : "table");
      inst.notes["shifted"] = static_cast<bool>(shifted);
      out.push_back(std::move(inst));
    }
    auto it = table.find({n, -1});
    if (it != table.end()) {
      Instance inst = compare_text(n, std::nullopt, column.render(), Poly::parse(it->second, xt).render(),
                                   shifted ? "shifted column sum" : "column sum");
      inst.notes["shifted"] = static_cast<bool>(shifted);
      inst.notes["column_sum"] = true;
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<Instance> specializations(int n, int) {
  const auto& u = qpolys::xyzt();
  const Poly q = qpolys::q_n(n);
  const Poly one(u, Integer(1));
  const Poly zero(u);
  const Poly p = qpolys::p_n(n);
  const Poly r = qpolys::r_n(n);
  std::vector<Instance> out;
  auto tag = [](Instance inst, const char* what) {
    inst.notes["specialization"] = what;
    return inst;
  };
  out.push_back(tag(compare(n, std::nullopt, q.substitute({{"z", one}, {"t", zero}}), p.in(u)), "z=1,t=0 gives P_n"));
  const Poly p0 = p.substitute({{"x", Poly(p.universe(), Integer(0))}});
  out.push_back(tag(compare(n, std::nullopt, p0.in(r.universe()), r), "P_n(0,y) gives R_n"));

  const Integer r0 = r.evaluate({{"y", Integer(0)}});
  const Integer r1 = r.evaluate({{"y", Integer(1)}});
  const Integer lead = r.coefficient(Monomial::variable(r.universe().at("y"), static_cast<std::uint32_t>(n - 1)));
  const Integer all_ones = q.evaluate({{"x", Integer(1)}, {"y", Integer(1)}, {"z", Integer(1)}, {"t", Integer(1)}});
  auto int_check = [&](const Integer& got, const Integer& want, const char* what) {
    if (got == want) return tag(Instance::pass(n), what);
    return tag(Instance::fail(n, std::nullopt, json{{"check", what}, {"lhs", got.get_str()}, {"rhs", want.get_str()}}), what);
  };
  out.push_back(int_check(r0, factorial(n - 1), "R_n(0) = (n-1)!"));
  out.push_back(int_check(lead, odd_double_factorial(n - 1), "leading coefficient of R_n"));
  out.push_back(int_check(r1, power(Integer(n), n - 1), "R_n(1) = n^(n-1)"));
  out.push_back(int_check(all_ones, factorial(n) * catalan(n), "Q_n(1,1,1,1) = n! C_n"));

  const auto& xt = qpolys::xt();
  Poly column(xt);
  for (int k = 0; k < n; ++k) column += qpolys::q_nk(n, k);
  const Poly q_y1 = q.substitute({{"y", one}, {"z", one}}).in(xt);
  out.push_back(tag(compare(n, std::nullopt, column, q_y1), "sum over k is Q_n(x,1,1,t)"));
  const Poly x = Poly::variable(xt, "x");
  const Poly t = Poly::variable(xt, "t");
  Poly prod(xt, Integer(1));
  for (int k = 1; k <= n - 1; ++k) prod *= x + Poly(xt, Integer(k)) + Integer(k) * t;
  out.push_back(tag(compare(n, std::nullopt, qpolys::q_nk(n, 0), prod), "k=0 coefficient"));
  const Integer top = qpolys::q_nk(n, n - 1).evaluate({{"x", Integer(0)}, {"t", Integer(0)}});
  out.push_back(int_check(top, odd_double_factorial(n - 1), "top coefficient (2n-3)!!"));
  return out;
}

std::vector<IdentitySpec> build_registry() {
  struct Defaults {
    const char* name;
    const char* summary;
    int max_n;
    bool symbolic;
  };
  static const Defaults kSymbolic[] = {
      {"duality", "Q_n(x,y,z,t) = Q_n(x+nz+nt,y,-t,-z)", 10, true},
      {"expansion", "Q_n(x,y,1,t) = sum_k Q_{n,k}(x,t) y^k and homogeneity", 10, true},
      {"t-equals-minus-y", "Q_n(x,y,z,-y) = prod (x+kz)", 10, true},
      {"factor", "Q_n(x,0,z,t) = prod (x+kz+kt)", 10, true},
      {"y-equals-z", "Q_n(x,z,z,t) = prod (x+nz+kt)", 10, true},
      {"second-recurrence", "second recurrence for Q_{n,k}", 8, true},
      {"shifted-recurrence", "recurrence for the shifted Q_{n,k}(x-t-1,t)", 8, true},
      {"diff", "differential recurrence for Q_{n,k}", 8, true},
      {"reflection", "reflection formula for Q_{n,k}", 8, true},
      {"operator-form", "operator form of the recurrences", 6, true},
      {"chu", "Chu-Vandermonde type identity", 10, true},
      {"gessel-seo", "x prod (x+(n-k)z+kt), also by enumeration", 5, false},
      {"dual-form", "equivalent form checked by dual enumeration", 6, false},
  };
  std::vector<IdentitySpec> out;
  out.push_back({"golden-tables", "Q_2, Q_3 and both coefficient tables byte-match", 1, 4, true, golden_tables});
  for (const auto& d : kSymbolic) {
    const auto id = qpolys::identity_from_string(d.name);
    if (!id) throw std::logic_error(std::string("unknown qpolys identity ") + d.name);
    const int min_n = (d.name == std::string("second-recurrence") || d.name == std::string("shifted-recurrence") || d.name == std::string("diff")) ? 2 : 1;
    out.push_back({d.name, d.summary, min_n, d.max_n, d.symbolic,
                   [name = *id](int n, int) { return qpolys::verify_identity(name, n).instances; }});
  }
  out.push_back({"specializations", "P_n, R_n and product specializations", 1, 10, true, specializations});
  for (auto& spec : detail::combinatorial_checks()) out.push_back(std::move(spec));
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_positive(const std::string& value, const std::string& key, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || v < 0) {
    throw UsageError("config line " + std::to_string(line) + ": " + key + " needs a nonnegative integer, got '" + value + "'");
  }
  return v;
}

// n values beyond the caps become bound-exceeded instances.
std::vector<Instance> run_one(const IdentitySpec& spec, int n, int jobs) {
  if (spec.symbolic && n > max_poly_n()) {
    return {Instance::bound_exceeded(n, std::nullopt,
                                     "n = " + std::to_string(n) + " exceeds the symbolic cap " + std::to_string(max_poly_n()))};
  }
  try {
    return spec.check(n, jobs);
  } catch (const trees::BoundExceeded& e) {
    return {Instance::bound_exceeded(n, std::nullopt, e.what())};
  } catch (const std::exception& e) {
    return {Instance::fail(n, std::nullopt, json{{"error", e.what()}})};
  }
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> r = build_registry();
  return r;
}

const IdentitySpec* find_identity(const std::string& name) {
  for (const auto& s : registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

SuiteConfig parse_config(const std::string& text, SuiteConfig base) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string l = trim(raw);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(line) + ": expected key=value");
    const std::string key = trim(l.substr(0, eq));
    const std::string value = trim(l.substr(eq + 1));
    if (key == "jobs") {
      base.jobs = std::max(1, parse_positive(value, key, line));
    } else if (key.rfind("max_n.", 0) == 0) {
      const std::string name = key.substr(6);
      if (!find_identity(name)) throw UsageError("config line " + std::to_string(line) + ": unknown identity '" + name + "'");
      base.max_n[name] = parse_positive(value, key, line);
    } else {
      throw UsageError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

SuiteConfig load_config(const std::string& path, SuiteConfig base) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open config " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

int max_poly_n() {
  if (const char* env = std::getenv("RAMANUJAN_MAX_POLY_N")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 14;
}

VerificationReport run_identity(const IdentitySpec& spec, int n_min, int n_max, int jobs) {
  VerificationReport report;
  report.identity = spec.name;
  report.n_min = n_min;
  report.n_max = n_max;
  const auto start = std::chrono::steady_clock::now();
  for (int n = n_min; n <= n_max; ++n) {
    for (auto& inst : run_one(spec, n, jobs)) report.instances.push_back(std::move(inst));
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  std::set<std::string> wanted;
  for (const auto& name : config.identities) {
    if (!find_identity(name)) throw UsageError("unknown identity '" + name + "'");
    wanted.insert(name);
  }
  for (const auto& [name, v] : config.max_n) {
    if (!find_identity(name)) throw UsageError("unknown identity '" + name + "'");
  }

  std::vector<const IdentitySpec*> selected;
  std::vector<VerificationReport> reports;
  int symbolic_max = 0;
  for (const auto& spec : registry()) {
    if (!wanted.empty() && !wanted.count(spec.name)) continue;
    VerificationReport r;
    r.identity = spec.name;
    r.n_min = spec.min_n;
    r.n_max = config.max_n_all ? *config.max_n_all
                               : (config.max_n.count(spec.name) ? config.max_n.at(spec.name) : spec.default_max_n);
    if (spec.symbolic) symbolic_max = std::max(symbolic_max, std::min(r.n_max, max_poly_n()));
    selected.push_back(&spec);
    reports.push_back(std::move(r));
  }

  // The shared table is filled before any worker starts.
  if (symbolic_max > 0) qpolys::shared_table().build(symbolic_max);

  struct Task {
    std::size_t report;
    int n;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (int n = reports[i].n_min; n <= reports[i].n_max; ++n) tasks.push_back({i, n});
  }
  std::vector<std::vector<Instance>> results(tasks.size());
  std::vector<double> elapsed(tasks.size(), 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      results[i] = run_one(*selected[tasks[i].report], tasks[i].n, config.jobs);
      elapsed[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int threads = std::max(1, std::min<int>(config.jobs, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& r = reports[tasks[i].report];
    for (auto& inst : results[i]) r.instances.push_back(std::move(inst));
    r.wall_ms += elapsed[i];
  }
  return reports;
}

int exit_code(const std::vector<VerificationReport>& reports, bool allow_skip) {
  bool skipped = false;
  for (const auto& r : reports) {
    if (r.count(Status::kFail) > 0) return 1;
    if (r.count(Status::kBoundExceeded) > 0) skipped = true;
  }
  return skipped && !allow_skip ? 1 : 0;
}

void write_json_lines(std::ostream& os, const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) os << json(r).dump() << '\n';
}

std::vector<VerificationReport> read_json_lines(std::istream& is) {
  std::vector<VerificationReport> out;
  std::string line;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    out.push_back(json::parse(line).get<VerificationReport>());
  }
  return out;
}

const std::map<int, std::string>& golden_qn() {
  static const std::map<int, std::string> g = {
      {1, "1"},
      {2, "x+y+z+t"},
      {3, "x^2+3xy+3xz+3xt+3y^2+4yz+5yt+2z^2+4zt+2t^2"},
  };
  return g;
}

const std::map<std::pair<int, int>, std::string>& golden_qnk() {
  static const std::map<std::pair<int, int>, std::string> g = {
      {{1, 0}, "1"},
      {{2, 0}, "x+1+t"},
      {{2, 1}, "1"},
      {{3, 0}, "x^2+3x+2+(3x+4)t+2t^2"},
      {{3, 1}, "3x+4+5t"},
      {{3, 2}, "3"},
      {{4, 0}, "x^3+6x^2+11x+6+(6x^2+22x+18)t+(11x+18)t^2+6t^3"},
      {{4, 1}, "6x^2+22x+18+(26x+43)t+26t^2"},
      {{4, 2}, "15x+25+35t"},
      {{4, 3}, "15"},
      {{1, -1}, "1"},
      {{2, -1}, "x+2+t"},
      {{3, -1}, "(x+3+t)(x+3+2t)"},
      {{4, -1}, "(x+4+t)(x+4+2t)(x+4+3t)"},
  };
  return g;
}

const std::map<std::pair<int, int>, std::string>& golden_qnk_shifted() {
  static const std::map<std::pair<int, int>, std::string> g = {
      {{1, 0}, "1"},
      {{2, 0}, "x"},
      {{2, 1}, "1"},
      {{3, 0}, "x^2+x+xt"},
      {{3, 1}, "3x+1+2t"},
      {{3, 2}, "3"},
      {{4, 0}, "x^3+3x^2+2x+(3x^2+4x)t+2xt^2"},
      {{4, 1}, "6x^2+10x+2+(14x+7)t+6t^2"},
      {{4, 2}, "15x+10+20t"},
      {{4, 3}, "15"},
      {{1, -1}, "1"},
      {{2, -1}, "x+1"},
      {{3, -1}, "(x+2)(x+2+t)"},
      {{4, -1}, "(x+3)(x+3+t)(x+3+2t)"},
  };
  return g;
}

}  // namespace ramanujan::harness
