// Command-line front end: polynomials, tables, enumeration, bijections,
// tree statistics and the verification suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramanujan/bijections.hpp"
#include "ramanujan/enumerate.hpp"
#include "ramanujan/half_mobile.hpp"
#include "ramanujan/json_io.hpp"
#include "ramanujan/permutation.hpp"
#include "ramanujan/qpolys.hpp"
#include "ramanujan/suite.hpp"
#include "ramanujan/tree_stats.hpp"

using namespace ramanujan;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

json read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return io::parse_text(ss.str());
  }
  return io::read_file(path);
}

json edges_json(const std::vector<trees::Edge>& edges) {
  json a = json::array();
  for (const auto& [p, c] : edges) a.push_back(json::array({p, c}));
  return a;
}

json stats_json(const trees::PlaneTree& t) {
  const auto s = trees::stats(t);
  json per_vertex = json::object();
  for (trees::Label v : t.labels()) {
    per_vertex[std::to_string(v)] = json{{"beta", s.beta[v]},
                                         {"deg", s.deg[v]},
                                         {"eld", s.eld[v]},
                                         {"young", s.young[v]},
                                         {"reld", s.reld[v]},
                                         {"young_bar", s.really_young[v]}};
  }
  return json{{"tree", t.to_string()},
              {"root", t.root()},
              {"size", t.size()},
              {"elder", s.elder_set()},
              {"eld", s.eld_total},
              {"reld", s.really_eld_total},
              {"improper_edges", edges_json(s.improper_edges)},
              {"improper", s.improper()},
              {"really_improper_edges", edges_json(s.really_improper_edges)},
              {"really_improper", s.really_improper()},
              {"leaves", s.leaves},
              {"increasing", s.increasing},
              {"vertices", per_vertex}};
}

json apply_map(const std::string& map, const json& in, std::optional<int> i, std::optional<int> j) {
  if (map == "theta") return io::hm_to_json(halfmobile::theta(io::tree_from_json(in)));
  if (map == "theta-inv") return io::tree_to_json(halfmobile::theta_inv(io::hm_from_json(in)));
  if (map == "psi") return json(bijections::psi(io::permutation_from_json(in)));
  if (map == "psi-inv") {
    if (!in.is_array()) throw io::InputError("/: expected an integer array");
    return io::permutation_to_json(bijections::psi_inv(in.get<std::vector<int>>()));
  }
  if (map == "phi") return io::tree_to_json(bijections::phi(io::tree_from_json(in)));
  if (map == "phi-inv") return io::tree_to_json(bijections::phi_inv(io::tree_from_json(in)));
  if (map == "contract") {
    if (!i || !j) throw harness::UsageError("contract needs --i and --j");
    return io::tree_to_json(bijections::contract(io::tree_from_json(in), *i, *j));
  }
  if (map == "root-swap") {
    return io::tree_to_json(bijections::root_swap(io::tree_from_json(in), i.value_or(1), j.value_or(2)));
  }
  throw harness::UsageError("unknown map " + map);
}

void print_report(const VerificationReport& r) {
  std::cout << r.identity << ": " << to_string(r.overall()) << " (n=" << r.n_min << ".." << r.n_max << ", "
            << r.count(Status::kPass) << " pass, " << r.count(Status::kFail) << " fail, "
            << r.count(Status::kBoundExceeded) << " skipped, " << static_cast<long>(r.wall_ms) << " ms)\n";
  for (const auto& inst : r.instances) {
    if (inst.status == Status::kPass) continue;
    std::cout << "  n=" << inst.n;
    if (inst.k) std::cout << " k=" << *inst.k;
    std::cout << " " << to_string(inst.status);
    if (inst.witness) std::cout << " " << inst.witness->dump();
    if (inst.status == Status::kBoundExceeded && inst.notes.contains("reason")) {
      std::cout << " " << inst.notes["reason"].get<std::string>();
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Ramanujan polynomials and plane-tree statistics"};
  app.require_subcommand(1);

  int n = 1;
  std::optional<int> k;
  bool shifted = false;
  auto* qn = app.add_subcommand("qn", "print Q_n(x,y,z,t)");
  qn->add_option("--n", n, "index")->required();
  auto* qnk = app.add_subcommand("qnk", "print Q_{n,k}(x,t), one line per k");
  qnk->add_option("--n", n, "index")->required();
  qnk->add_option("--k", k, "single coefficient");
  qnk->add_flag("--shifted", shifted, "Q_{n,k}(x-t-1,t)");

  std::optional<int> root;
  std::optional<int> improper;
  std::optional<int> really_improper;
  bool count_only = false;
  bool poly = false;
  std::string format = "text";
  std::string weight = "p";
  auto* en = app.add_subcommand("enumerate", "stream plane trees on [n]");
  en->add_option("--n", n, "number of labels")->required();
  en->add_option("--root", root, "fixed root");
  en->add_option("--improper", improper, "exact number of improper edges");
  en->add_option("--really-improper", really_improper, "exact number of really improper edges");
  en->add_flag("--count-only", count_only, "print the number of trees only");
  en->add_flag("--poly", poly, "print the generating polynomial only");
  en->add_option("--weight", weight, "o | p | multivar")->check(CLI::IsMember({"o", "p", "multivar"}));
  en->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::string map;
  std::string input = "-";
  std::optional<int> bi;
  std::optional<int> bj;
  auto* bij = app.add_subcommand("bijection", "apply a bijection to a JSON object");
  bij->add_option("--map", map, "theta | theta-inv | psi | psi-inv | phi | phi-inv | contract | root-swap")
      ->required()
      ->check(CLI::IsMember({"theta", "theta-inv", "psi", "psi-inv", "phi", "phi-inv", "contract", "root-swap"}));
  bij->add_option("--input", input, "JSON file, '-' for stdin");
  bij->add_option("--i", bi, "first label (contract, root-swap)");
  bij->add_option("--j", bj, "second label (contract, root-swap)");

  std::string stats_input = "-";
  auto* st = app.add_subcommand("stats", "statistics of a JSON plane tree");
  st->add_option("--input", stats_input, "JSON file, '-' for stdin");

  std::string which = "q1";
  int table_max = 4;
  auto* tb = app.add_subcommand("table", "coefficient table, q1 = Q_{n,k}(x,t), q2 = Q_{n,k}(x-t-1,t)");
  tb->add_option("--which", which, "q1 | q2")->check(CLI::IsMember({"q1", "q2"}));
  tb->add_option("--max-n", table_max, "largest n")->check(CLI::Range(1, 40));

  std::string identity = "all";
  std::optional<int> max_n;
  int jobs = 1;
  bool allow_skip = false;
  std::string config_path = RAMANUJAN_DEFAULT_CONFIG;
  std::string report_path;
  bool list = false;
  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("--identity", identity, "identity name, comma separated list, or all");
  ver->add_option("--max-n", max_n, "largest n for every selected identity");
  ver->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--allow-skip", allow_skip, "exit 0 even if some instances exceeded the caps");
  ver->add_option("--config", config_path, "key=value config with per-identity max_n");
  ver->add_option("--report", report_path, "append JSON lines to this file");
  ver->add_flag("--list", list, "list identity names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*qn) {
      std::cout << qpolys::q_n(n).render() << "\n";
    } else if (*qnk) {
      if (k) {
        std::cout << qpolys::q_nk(n, *k, shifted).render() << "\n";
      } else {
        for (int kk = 0; kk < n; ++kk) std::cout << kk << "\t" << qpolys::q_nk(n, kk, shifted).render() << "\n";
      }
    } else if (*en) {
      trees::EnumSpec spec = root ? trees::EnumSpec::rooted(n, *root) : trees::EnumSpec::on(n);
      spec.improper = improper;
      spec.really_improper = really_improper;
      spec.weight = weight == "o" ? trees::WeightMode::kO
                    : weight == "p" ? trees::WeightMode::kP
                                    : trees::WeightMode::kMultivar;
      spec.validate();
      if (count_only) {
        std::cout << trees::count(spec) << "\n";
      } else if (poly) {
        std::cout << trees::generating_poly(spec).render() << "\n";
      } else {
        trees::enumerate(spec, [&](const trees::PlaneTree& t, const trees::TreeStats&) {
          if (format == "json") {
            std::cout << io::tree_to_json(t).dump() << "\n";
          } else {
            std::cout << t.to_string() << "\n";
          }
        });
      }
    } else if (*bij) {
      std::cout << apply_map(map, read_input(input), bi, bj).dump() << "\n";
    } else if (*st) {
      std::cout << stats_json(io::tree_from_json(read_input(stats_input))).dump(2) << "\n";
    } else if (*tb) {
      const bool sh = which == "q2";
      for (int nn = 1; nn <= table_max; ++nn) {
        Poly sum(qpolys::xt());
        for (int kk = 0; kk < nn; ++kk) {
          const Poly q = qpolys::q_nk(nn, kk, sh);
          sum += q;
          std::cout << nn << "\t" << kk << "\t" << q.render() << "\n";
        }
        std::cout << nn << "\tsum\t" << sum.render() << "\n";
      }
    } else if (*ver) {
      if (list) {
        for (const auto& spec : harness::registry()) {
          std::cout << spec.name << "\t" << spec.min_n << ".." << spec.default_max_n << "\t" << spec.summary << "\n";
        }
        return 0;
      }
      harness::SuiteConfig config;
      if (!config_path.empty()) config = harness::load_config(config_path);
      if (ver->count("--jobs") || config_path.empty()) config.jobs = jobs;
      config.max_n_all = max_n;
      if (identity != "all") {
        std::stringstream ss(identity);
        std::string name;
        while (std::getline(ss, name, ',')) config.identities.push_back(name);
      }
      const auto reports = harness::run_suite(config);
      for (const auto& r : reports) print_report(r);
      if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::app);
        if (!out) throw harness::UsageError("cannot open report file " + report_path);
        harness::write_json_lines(out, reports);
      }
      return harness::exit_code(reports, allow_skip);
    }
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const harness::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const trees::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
