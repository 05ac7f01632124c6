// ucplab command line tool: generators, decision procedures and the
// separation experiment behind one binary with subcommands.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ucplab/covering.hpp"
#include "ucplab/dimacs.hpp"
#include "ucplab/dual_rail.hpp"
#include "ucplab/equivalence.hpp"
#include "ucplab/experiment.hpp"
#include "ucplab/hypergraph.hpp"
#include "ucplab/rand_builder.hpp"
#include "ucplab/subsets.hpp"
#include "ucplab/symmetric.hpp"
#include "ucplab/ucp.hpp"

namespace {

using namespace ucplab;

CnfFormula load_cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dimacs(in);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

PartialAssignment parse_assumptions(const std::string& csv) {
  std::vector<Lit> lits;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    lits.push_back(Lit(std::stoi(token)));
  }
  return PartialAssignment(std::move(lits));
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(std::stoi(token));
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"unit clause propagation laboratory"};
  app.require_subcommand(1);

  // ucp <file.cnf> [--assume l1,l2,...]
  std::string ucp_file, ucp_assume;
  auto* cmd_ucp = app.add_subcommand("ucp", "run unit propagation, print derived literals");
  cmd_ucp->add_option("file", ucp_file, "DIMACS CNF input")->required();
  cmd_ucp->add_option("--assume", ucp_assume, "comma-separated literals to assume");

  // absorbed <file.cnf> <lit...>
  std::string abs_file;
  std::vector<int> abs_lits;
  auto* cmd_absorbed =
      app.add_subcommand("absorbed", "is the clause absorbed by the formula? exit 0/1");
  cmd_absorbed->add_option("file", abs_file, "DIMACS CNF input")->required();
  cmd_absorbed->add_option("literals", abs_lits, "clause literals (DIMACS codes)")->required();

  // ucp-eq <a.cnf> <b.cnf>
  std::string eq_a, eq_b;
  auto* cmd_eq = app.add_subcommand("ucp-eq", "are the formulas ucp-equivalent? exit 0/1");
  cmd_eq->add_option("a", eq_a)->required();
  cmd_eq->add_option("b", eq_b)->required();

  // core <file.cnf> [--order ...] [-o out.cnf]
  std::string core_file, core_order = "longest", core_out;
  auto* cmd_core = app.add_subcommand("core", "greedy ucp-irredundant core");
  cmd_core->add_option("file", core_file)->required();
  cmd_core->add_option("--order", core_order, "removal order: longest|shortest|canonical")
      ->check(CLI::IsMember({"longest", "shortest", "canonical"}));
  cmd_core->add_option("-o,--output", core_out, "output file (default stdout)");

  // idr <file.cnf> -o <out.cnf>
  std::string idr_file, idr_out;
  auto* cmd_idr = app.add_subcommand("idr", "implicational dual rail encoding");
  cmd_idr->add_option("file", idr_file)->required();
  cmd_idr->add_option("-o,--output", idr_out)->required();

  // gen psi|phi-ell --n --k -o file.cnf
  std::string gen_kind, gen_out;
  int gen_n = 0, gen_k = 0;
  auto* cmd_gen = app.add_subcommand("gen", "generate psi or phi-ell");
  cmd_gen->add_option("kind", gen_kind)->check(CLI::IsMember({"psi", "phi-ell"}))->required();
  cmd_gen->add_option("--n", gen_n)->required();
  cmd_gen->add_option("--k", gen_k)->required();
  cmd_gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // check restrictions <hypergraph-file> [--n N] [--all]
  std::string check_kind, check_file;
  std::optional<int> check_n;
  bool check_all = false;
  auto* cmd_check = app.add_subcommand("check", "check connected restrictions, exit 0/1");
  cmd_check->add_option("what", check_kind)->check(CLI::IsMember({"restrictions"}))->required();
  cmd_check->add_option("file", check_file, "hypergraph file")->required();
  cmd_check->add_option("--n", check_n, "vertex count override");
  cmd_check->add_flag("--all", check_all, "list every failing set");

  // cover greedy --n --k -o blocks.txt | cover exact --n --r --k
  std::string cover_mode, cover_out;
  int cover_n = 0, cover_r = 0, cover_k = 0;
  auto* cmd_cover = app.add_subcommand("cover", "covering designs");
  cmd_cover->add_option("mode", cover_mode)->check(CLI::IsMember({"greedy", "exact"}))->required();
  cmd_cover->add_option("--n", cover_n)->required();
  cmd_cover->add_option("--r", cover_r, "block size (exact mode)");
  cmd_cover->add_option("--k", cover_k)->required();
  cmd_cover->add_option("-o,--output", cover_out, "block output file (greedy mode)");

  // build hstar --n --k --s --seed -o hg.txt --report report.json
  std::string build_kind, build_out, build_report;
  int build_n = 0, build_k = 0, build_s = 5;
  std::uint64_t build_seed = 42;
  auto* cmd_build = app.add_subcommand("build", "randomized hypergraph construction");
  cmd_build->add_option("what", build_kind)->check(CLI::IsMember({"hstar"}))->required();
  cmd_build->add_option("--n", build_n)->required();
  cmd_build->add_option("--k", build_k)->required();
  cmd_build->add_option("--s", build_s, "number of permuted copies (default 5)");
  cmd_build->add_option("--seed", build_seed);
  cmd_build->add_option("-o,--output", build_out, "hypergraph output file");
  cmd_build->add_option("--report", build_report, "JSON report path");

  // experiment separation --n 8,10,12,14 --k-offset 0 --s 5 --seed 42 -o results.csv
  std::string exp_kind, exp_n = "8,10,12,14", exp_out;
  int exp_offset = 0, exp_s = 5;
  std::uint64_t exp_seed = 42;
  auto* cmd_exp = app.add_subcommand("experiment", "reproduce the size separation");
  cmd_exp->add_option("what", exp_kind)->check(CLI::IsMember({"separation"}))->required();
  cmd_exp->add_option("--n", exp_n, "comma-separated n values");
  cmd_exp->add_option("--k-offset", exp_offset)->check(CLI::IsMember({-1, 0, 1}));
  cmd_exp->add_option("--s", exp_s);
  cmd_exp->add_option("--seed", exp_seed);
  cmd_exp->add_option("-o,--output", exp_out, "CSV output path")->required();

  CLI11_PARSE(app, argc, argv);

  if (cmd_ucp->parsed()) {
    const CnfFormula f = load_cnf(ucp_file);
    const UcpOutcome out = ucp_with_assumptions(f, parse_assumptions(ucp_assume));
    if (out.contradiction) {
      std::cout << "UNSAT-BY-UCP\n";
    } else {
      for (std::size_t i = 0; i < out.literals.size(); ++i) {
        if (i != 0) std::cout << ' ';
        std::cout << out.literals[i].code;
      }
      std::cout << '\n';
    }
    return 0;
  }

  if (cmd_absorbed->parsed()) {
    const CnfFormula f = load_cnf(abs_file);
    std::vector<Lit> lits;
    for (int code : abs_lits) lits.push_back(Lit(code));
    const bool yes = is_absorbed(Clause(std::move(lits)), f);
    std::cout << (yes ? "absorbed" : "not-absorbed") << '\n';
    return yes ? 0 : 1;
  }

  if (cmd_eq->parsed()) {
    const bool yes = ucp_equivalent(load_cnf(eq_a), load_cnf(eq_b));
    std::cout << (yes ? "ucp-equivalent" : "not-ucp-equivalent") << '\n';
    return yes ? 0 : 1;
  }

  if (cmd_core->parsed()) {
    RemovalOrder order = RemovalOrder::longest_first;
    if (core_order == "shortest") order = RemovalOrder::shortest_first;
    if (core_order == "canonical") order = RemovalOrder::canonical;
    const CnfFormula core = irredundant_core(load_cnf(core_file), order);
    if (core_out.empty()) {
      emit_dimacs(core, std::cout);
    } else {
      save_text(core_out, emit_dimacs(core));
    }
    return 0;
  }

  if (cmd_idr->parsed()) {
    save_text(idr_out, emit_dimacs(idr(load_cnf(idr_file)).formula()));
    return 0;
  }

  if (cmd_gen->parsed()) {
    const CnfFormula f = gen_kind == "psi" ? psi(gen_n, gen_k) : phi_ell(gen_n, gen_k);
    if (gen_out.empty()) {
      emit_dimacs(f, std::cout);
    } else {
      save_text(gen_out, emit_dimacs(f));
    }
    return 0;
  }

  if (cmd_check->parsed()) {
    std::ifstream in(check_file);
    if (!in) throw std::runtime_error("cannot open " + check_file);
    const Hypergraph h = read_hypergraph(in, check_n);
    const RestrictionReport report = check_connected_restrictions(h, check_all);
    if (report.ok) {
      std::cout << "connected-restrictions\n";
      return 0;
    }
    for (std::uint64_t bad : report.bad_sets) {
      std::cout << "bad-set";
      for (int v : mask_vertices(bad)) std::cout << ' ' << v;
      std::cout << '\n';
    }
    return 1;
  }

  if (cmd_cover->parsed()) {
    if (cover_mode == "greedy") {
      const CoverDesign d = greedy_cover(cover_n, cover_k);
      std::ostringstream blocks;
      write_blocks(d, blocks);
      if (cover_out.empty()) {
        std::cout << blocks.str();
      } else {
        save_text(cover_out, blocks.str());
      }
      std::cerr << "blocks: " << d.blocks.size() << "  es74-bound: " << es74_bound(cover_n, cover_k)
                << '\n';
    } else {
      if (cover_r == 0) throw std::runtime_error("cover exact requires --r");
      std::cout << exact_cover_number(cover_n, cover_r, cover_k) << '\n';
    }
    return 0;
  }

  if (cmd_build->parsed()) {
    const BuildResult result = build_connected_restrictions(build_n, build_k, build_s, build_seed);
    std::ostringstream hg;
    std::vector<std::string> comments = {
        "n=" + std::to_string(build_n) + " k=" + std::to_string(build_k) +
        " s=" + std::to_string(build_s) + " seed=" + std::to_string(build_seed)};
    write_hypergraph(result.hypergraph, hg, comments);
    if (build_out.empty()) {
      std::cout << hg.str();
    } else {
      save_text(build_out, hg.str());
    }
    if (!build_report.empty()) {
      nlohmann::json j = {
          {"n", build_n},
          {"k", build_k},
          {"s", build_s},
          {"seed", build_seed},
          {"coverSize", result.cover.blocks.size()},
          {"unionSize", result.report.union_size},
          {"badSets", nlohmann::json::array()},
          {"added", nlohmann::json::array()},
          {"finalSize", result.hypergraph.size()},
      };
      for (std::uint64_t b : result.report.bad_sets) j["badSets"].push_back(mask_vertices(b));
      for (std::uint64_t e : result.report.added) j["added"].push_back(mask_vertices(e));
      std::ofstream out(build_report);
      if (!out) throw std::runtime_error("cannot open " + build_report);
      out << j.dump(2) << '\n';
    }
    return 0;
  }

  if (cmd_exp->parsed()) {
    SeparationConfig config;
    config.n_values = parse_int_list(exp_n);
    config.k_offset = exp_offset;
    config.s = exp_s;
    config.seed = exp_seed;
    const SeparationResult result = run_separation(config);
    std::ostringstream csv;
    write_csv(result, csv);
    save_text(exp_out, csv.str());
    std::string sidecar = exp_out;
    const auto dot = sidecar.rfind('.');
    sidecar = (dot == std::string::npos ? sidecar : sidecar.substr(0, dot)) + ".json";
    std::ofstream side(sidecar);
    if (side) write_json_sidecar(result, side);
    std::cout << csv.str();
    if (!result.ratios_strictly_increasing && result.rows.size() > 1) {
      std::cerr << "warning: ratio column is not strictly increasing\n";
    }
    return result.all_ok() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
