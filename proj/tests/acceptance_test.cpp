// Runs the twelve acceptance criteria and prints one line per criterion.
// Exit status is 0 when every criterion has its expected outcome; the
// criterion whose statement does not hold is expected to fail with the
// recorded discrepancy reproduced.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ramanujan/suite.hpp"

using namespace ramanujan;
using namespace ramanujan::harness;

namespace {

using Clock = std::chrono::steady_clock;

struct Range {
  std::string identity;
  int lo;
  int hi;
};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<VerificationReport> reports;
};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome run_ranges(const std::vector<Range>& ranges) {
  Outcome out;
  std::ostringstream detail;
  for (const auto& r : ranges) {
    const IdentitySpec* spec = find_identity(r.identity);
    if (!spec) {
      out.pass = false;
      detail << r.identity << " missing; ";
      continue;
    }
    auto report = run_identity(*spec, r.lo, r.hi, jobs());
    const bool ok = report.overall() == Status::kPass;
    out.pass = out.pass && ok;
    detail << r.identity << " n=" << r.lo << ".." << r.hi << " " << (ok ? "ok" : std::string(to_string(report.overall())))
           << " (" << report.count(Status::kPass) << " instances); ";
    out.reports.push_back(std::move(report));
  }
  out.detail = detail.str();
  return out;
}

struct Criterion {
  int number;
  std::string title;
  double limit_s;  // 0 = no time limit
  bool expect_pass;
  std::function<Outcome()> run;
};

// Criterion 6: phi round trip, injectivity and the eld/young transport
// hold, and the sums over all k agree; the k-by-k refinement does not.
Outcome really_improper() {
  Outcome out = run_ranges({{"really-improper", 1, 6}});
  if (!out.pass) return out;
  bool refined = true;
  bool summed_variants_reported = true;
  long improper_41 = -1;
  long really_41 = -1;
  for (const auto& inst : out.reports[0].instances) {
    refined = refined && inst.notes.value("k_refined_holds", true);
    summed_variants_reported = summed_variants_reported && inst.notes.contains("all_k") &&
                               inst.notes["all_k"].value("young_bar_exponent_holds", false);
    if (inst.n == 4) {
      improper_41 = inst.notes["by_k"][1]["improper_trees"].get<long>();
      really_41 = inst.notes["by_k"][1]["really_improper_trees"].get<long>();
    }
  }
  std::ostringstream d;
  d << "bijection and transport verified for n<=6, both exponent variants reported, summed identity "
    << (summed_variants_reported ? "holds" : "FAILS") << "; refinement by k does not hold: at n=4, k=1 there are "
    << improper_41 << " trees with 1 improper edge but " << really_41 << " with 1 really improper edge";
  out.detail = d.str();
  out.pass = refined && summed_variants_reported;
  // expected reproduction of the discrepancy
  out.reports.clear();
  if (!refined && summed_variants_reported && improper_41 == 45 && really_41 == 46) out.detail += " (reproduced)";
  return out;
}

Outcome full_suite() {
  const std::string cmd = std::string(CLI_PATH) + " verify --identity all > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  Outcome out;
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  out.pass = code == 0;
  out.detail = "verify --identity all exit code " + std::to_string(code);
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden tables", 1, true, [] { return run_ranges({{"golden-tables", 1, 4}}); }},
      {2, "duality", 30, true, [] { return run_ranges({{"duality", 1, 10}}); }},
      {3, "recurrences and operator form", 0, true,
       [] { return run_ranges({{"second-recurrence", 2, 8}, {"diff", 2, 8}, {"operator-form", 1, 6}}); }},
      {4, "trees rooted at 1 give Q_{n,k}", 60, true, [] { return run_ranges({{"rooted-trees", 1, 6}}); }},
      {5, "all plane trees give shifted Q_{n,k}", 180, true, [] { return run_ranges({{"all-roots-trees", 1, 7}}); }},
      {6, "phi and the really improper refinement", 0, false, really_improper},
      {7, "increasing trees", 0, true, [] { return run_ranges({{"increasing-trees", 2, 8}}); }},
      {8, "psi, theta and half-mobile forests", 0, true,
       [] { return run_ranges({{"fundamental-transform", 1, 7}, {"theta", 1, 6}, {"half-mobile", 1, 6}}); }},
      {9, "general descents, convolution, multivariate sums, contraction, Catalan, Narayana", 0, true,
       [] {
         return run_ranges({{"general-descents", 1, 7},
                            {"chu", 1, 10},
                            {"multivariate", 1, 6},
                            {"rooted-multivariate", 2, 6},
                            {"contraction", 2, 6},
                            {"catalan", 1, 6},
                            {"narayana", 1, 6}});
       }},
      {10, "forest counts", 0, true,
       [] {
         return run_ranges(
             {{"planted-degree", 1, 7}, {"planted-type", 1, 6}, {"plane-forest-type", 1, 6}, {"fixed-root-forests", 2, 7}});
       }},
      {11, "dual enumeration and product formula", 0, true,
       [] { return run_ranges({{"dual-form", 1, 6}, {"gessel-seo", 1, 5}}); }},
      {12, "full suite under default bounds", 300, true, full_suite},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool pass = o.pass;
    std::string timing;
    if (c.limit_s > 0 && secs >= c.limit_s) {
      pass = false;
      timing = " over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    std::ostringstream line;
    line << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << " " << c.title << " [" << secs << " s"
         << timing << "] " << o.detail;
    std::cout << line.str() << std::endl;
    bool expected = pass == c.expect_pass;
    if (!c.expect_pass) expected = expected && o.detail.ends_with("(reproduced)");
    if (!expected) ++unexpected;
  }
  std::cout << (unexpected == 0 ? "all criteria have their expected outcome" : "unexpected outcomes: " + std::to_string(unexpected))
            << std::endl;
  return unexpected == 0 ? 0 : 1;
}
