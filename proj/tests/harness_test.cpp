#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ramanujan/qpolys.hpp"
#include "ramanujan/suite.hpp"

using namespace ramanujan;
using namespace ramanujan::harness;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST(Suite, RegistryNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& spec : registry()) {
    EXPECT_TRUE(names.insert(spec.name).second) << spec.name;
    EXPECT_LE(spec.min_n, spec.default_max_n);
  }
  EXPECT_EQ(names.size(), 33u);
  EXPECT_NE(find_identity("duality"), nullptr);
  EXPECT_EQ(find_identity("nonexistent"), nullptr);
}

TEST(Suite, RunsOneIdentity) {
  SuiteConfig c;
  c.identities = {"duality"};
  c.max_n_all = 3;
  const auto reports = run_suite(c);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].instances.size(), 3u);
  EXPECT_EQ(reports[0].overall(), Status::kPass);
  EXPECT_EQ(exit_code(reports, false), 0);
}

TEST(Suite, UnknownIdentityBeforeAnyWork) {
  SuiteConfig c;
  c.identities = {"duality", "nonexistent"};
  EXPECT_THROW(run_suite(c), UsageError);
}

TEST(Suite, ConfigParsing) {
  const auto c = parse_config("# comment\njobs = 3\nmax_n.duality = 4  # trailing\n\n");
  EXPECT_EQ(c.jobs, 3);
  EXPECT_EQ(c.max_n.at("duality"), 4);
  EXPECT_THROW(parse_config("colour = blue\n"), UsageError);
  EXPECT_THROW(parse_config("max_n.nonexistent = 3\n"), UsageError);
  EXPECT_THROW(parse_config("jobs = many\n"), UsageError);
  EXPECT_THROW(parse_config("jobs\n"), UsageError);
  EXPECT_NO_THROW(load_config(RAMANUJAN_SOURCE_DIR "/config/verify.conf"));
}

TEST(Suite, ExitCodes) {
  VerificationReport ok{"a", 1, 1, {Instance::pass(1)}, 0};
  VerificationReport skipped{"b", 1, 1, {Instance::bound_exceeded(1, std::nullopt, "cap")}, 0};
  VerificationReport bad{"c", 1, 1, {Instance::fail(1, std::nullopt, {{"x", 1}})}, 0};
  EXPECT_EQ(exit_code({ok}, false), 0);
  EXPECT_EQ(exit_code({ok, skipped}, false), 1);
  EXPECT_EQ(exit_code({ok, skipped}, true), 0);
  EXPECT_EQ(exit_code({bad, skipped}, true), 1);
  EXPECT_EQ(skipped.overall(), Status::kBoundExceeded);
  EXPECT_EQ(bad.overall(), Status::kFail);
}

TEST(Suite, SymbolicCapGivesBoundExceeded) {
  const auto* spec = find_identity("duality");
  ASSERT_NE(spec, nullptr);
  const auto r = run_identity(*spec, max_poly_n() + 1, max_poly_n() + 1);
  ASSERT_EQ(r.instances.size(), 1u);
  EXPECT_EQ(r.instances[0].status, Status::kBoundExceeded);
  EXPECT_TRUE(r.instances[0].notes.contains("reason"));
}

TEST(Suite, JsonLinesRoundTrip) {
  SuiteConfig c;
  c.identities = {"shifted-recurrence", "catalan"};
  c.max_n_all = 3;
  const auto reports = run_suite(c);
  std::stringstream ss;
  write_json_lines(ss, reports);
  const auto back = read_json_lines(ss);
  ASSERT_EQ(back.size(), reports.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].identity, reports[i].identity);
    ASSERT_EQ(back[i].instances.size(), reports[i].instances.size());
    for (std::size_t j = 0; j < back[i].instances.size(); ++j) {
      EXPECT_EQ(back[i].instances[j].status, reports[i].instances[j].status);
      EXPECT_EQ(back[i].instances[j].k, reports[i].instances[j].k);
      EXPECT_EQ(back[i].instances[j].notes, reports[i].instances[j].notes);
    }
  }
  std::stringstream broken("{\"identity\": 3}\n");
  EXPECT_ANY_THROW(read_json_lines(broken));
}

TEST(Cli, PolynomialsAndTables) {
  EXPECT_EQ(cli("qn --n 1").out, "1\n");
  const auto q2 = cli("qn --n 2");
  EXPECT_EQ(q2.code, 0);
  EXPECT_EQ(Poly::parse(q2.out.substr(0, q2.out.size() - 1), qpolys::xyzt()), qpolys::q_n(2));
  const auto table = cli("table --which q1 --max-n 4");
  ASSERT_EQ(table.code, 0);
  std::istringstream lines(table.out);
  std::string line;
  int cells = 0;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string n, k, poly;
    std::getline(fields, n, '\t');
    std::getline(fields, k, '\t');
    std::getline(fields, poly);
    const int kk = k == "sum" ? -1 : std::stoi(k);
    EXPECT_EQ(poly, Poly::parse(golden_qnk().at({std::stoi(n), kk}), qpolys::xt()).render()) << line;
    ++cells;
  }
  EXPECT_EQ(cells, 1 + 2 + 3 + 4 + 4);
}

TEST(Cli, StatsAndBijections) {
  const auto st = cli("stats --input " + fixture("fig1_tree.json"));
  ASSERT_EQ(st.code, 0);
  const auto j = nlohmann::json::parse(st.out);
  EXPECT_EQ(j.at("elder"), nlohmann::json({3, 8, 9, 11, 12, 13}));
  EXPECT_EQ(j.at("improper").get<int>(), 6);
  const auto ph = cli("bijection --map phi --input " + fixture("fig1_tree.json"));
  ASSERT_EQ(ph.code, 0);
  EXPECT_EQ(nlohmann::json::parse(ph.out), nlohmann::json::parse(std::ifstream(fixture("fig6_tree.json"))));
  const auto th = cli("bijection --map theta --input " + fixture("fig4_tree.json"));
  ASSERT_EQ(th.code, 0);
  EXPECT_EQ(nlohmann::json::parse(th.out), nlohmann::json::parse(std::ifstream(fixture("fig4_forest.json"))));
  EXPECT_EQ(cli("enumerate --n 4 --root 1 --improper 1 --count-only").out, "12\n");
}

TEST(Cli, ErrorsAndExitCodes) {
  const auto dir = std::filesystem::temp_directory_path() / "ramanujan_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.json";
  std::ofstream(bad) << "{\"label\": 1, \"children\": [";
  EXPECT_EQ(cli("stats --input " + bad.string()).code, 2);
  EXPECT_EQ(cli("verify --identity nonexistent").code, 2);
  EXPECT_EQ(cli("qn").code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("verify --identity duality --max-n 3").code, 0);
  EXPECT_EQ(cli("enumerate --n 12 --count-only").code, 1);
  EXPECT_EQ(cli("verify --identity duality --max-n 5", "RAMANUJAN_MAX_POLY_N=4").code, 1);
  EXPECT_EQ(cli("verify --identity duality --max-n 5 --allow-skip", "RAMANUJAN_MAX_POLY_N=4").code, 0);

  const auto report = dir / "report.jsonl";
  std::filesystem::remove(report);
  EXPECT_EQ(cli("verify --identity catalan,narayana --max-n 3 --report " + report.string()).code, 0);
  std::ifstream in(report);
  EXPECT_EQ(read_json_lines(in).size(), 2u);
  std::filesystem::remove_all(dir);
}
