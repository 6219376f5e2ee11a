// Command-line front end: parse/merge/check decision tables, run the rule
// searches, generate synthetic tables and compare algorithms.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _WIN32
#include <io.h>
#define rreduct_isatty _isatty
#define rreduct_fileno _fileno
#else
#include <unistd.h>
#define rreduct_isatty isatty
#define rreduct_fileno fileno
#endif

#include "rreduct/algorithms.hpp"
#include "rreduct/compare.hpp"
#include "rreduct/decision_table.hpp"
#include "rreduct/generator.hpp"
#include "rreduct/serialize.hpp"
#include "rreduct/subset_tree.hpp"

namespace {

using namespace rreduct;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool use_color() {
  return rreduct_isatty(rreduct_fileno(stdout)) != 0 &&
         std::getenv("NO_COLOR") == nullptr;
}

std::string paint(const std::string& s, const char* code) {
  if (!use_color()) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

struct CommonOpts {
  std::string input = "-";
  std::string decision;
  std::string format = "text";
  bool trace = false;
  bool auto_merge = false;
  bool drop_conflicts = false;
};

void add_input_opts(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--input", opts.input,
                  "input CSV file ('-' reads standard input)");
  cmd->add_option("--decision", opts.decision,
                  "decision column name (default: last column)");
}

DecisionTable load_table(const CommonOpts& opts) {
  return parse_table(read_input(opts.input), opts.decision);
}

// shared by run and compare: enforce the merged-table precondition
DecisionTable prepare_table(const CommonOpts& opts) {
  DecisionTable table = load_table(opts);
  if (opts.auto_merge || opts.drop_conflicts)
    return merge_indiscernible(table, opts.drop_conflicts);
  auto conflicts = find_conflicts(table);
  if (!conflicts.empty())
    throw ConflictError(
        "table is inconsistent (" + std::to_string(conflicts.groups.size()) +
            " conflicting group(s)); re-run with --drop-conflicts or fix the data",
        std::move(conflicts));
  if (!table.rows_distinct())
    throw ParseError(
        "table has duplicate rows; re-run with --auto-merge or merge first");
  return table;
}

int cmd_run(const CommonOpts& opts, const std::string& algo_name_arg,
            const std::string& prune_mode_arg) {
  const DecisionTable table = prepare_table(opts);
  const Algo algo = algo_from_name(algo_name_arg);
  const PruneMode mode = prune_mode_from_name(prune_mode_arg);
  const RunOptions run_opts{.collect_trace = opts.trace};

  RuleSet rules;
  RunStats stats;
  switch (algo) {
    case Algo::rg: {
      auto r = run_rg(table, run_opts);
      rules = std::move(r.rules);
      stats = std::move(r.stats);
      break;
    }
    case Algo::mrg: {
      auto r = run_mrg(table, run_opts);
      rules = std::move(r.rules);
      stats = std::move(r.stats);
      break;
    }
    case Algo::prg: {
      auto r = run_prg(table, mode, run_opts);
      rules = std::move(r.rules);
      stats = std::move(r.stats);
      break;
    }
    case Algo::oracle:
      rules = run_oracle(table);
      break;
  }

  if (opts.trace && algo != Algo::oracle)
    std::cerr << trace_to_text(table, stats);

  if (opts.format == "json")
    std::cout << ruleset_to_json(table, rules);
  else if (opts.format == "csv")
    std::cout << ruleset_to_csv(table, rules);
  else
    std::cout << ruleset_to_table(table, rules);
  return 0;
}

int cmd_merge(const CommonOpts& opts) {
  const DecisionTable merged =
      merge_indiscernible(load_table(opts), opts.drop_conflicts);
  std::cout << to_csv(merged);
  return 0;
}

int cmd_check(const CommonOpts& opts) {
  const DecisionTable table = load_table(opts);
  const ConflictReport conflicts = find_conflicts(table);
  if (conflicts.empty()) {
    std::cout << paint("consistent", "32") << ": no indiscernible group carries"
              << " conflicting decisions\n";
    return 0;
  }
  std::cout << paint("inconsistent", "31") << ": "
            << conflicts.groups.size() << " conflicting group(s)\n"
            << conflicts_to_text(table, conflicts);
  return 2;
}

int cmd_gen(const GenParams& params) {
  std::cout << to_csv(gen_table(params));
  return 0;
}

int cmd_compare(const CommonOpts& opts, const std::vector<std::string>& algo_names,
                const std::string& prune_mode_arg) {
  const DecisionTable table = prepare_table(opts);
  std::vector<Algo> algos;
  for (const auto& name : algo_names) algos.push_back(algo_from_name(name));
  const ComparisonReport report =
      compare(table, algos, prune_mode_from_name(prune_mode_arg),
              RunOptions{.collect_trace = opts.trace});

  if (opts.trace) {
    for (const AlgoRun& run : report.runs) {
      if (run.algo == Algo::oracle) continue;
      std::cerr << "--- " << algo_name(run.algo) << " ---\n"
                << trace_to_text(table, run.stats);
    }
  }

  if (opts.format == "json")
    std::cout << report_to_json(report);
  else if (opts.format == "csv")
    std::cout << report_to_csv(report);
  else
    std::cout << report_to_text(report);
  return 0;
}

int cmd_tree_dump(int m) {
  const SubsetTree tree(m);
  for (const FeatureSubset s : tree.preorder()) {
    bool first = true;
    for (int f : s) {
      if (!first) std::cout << ',';
      std::cout << 'F' << f + 1;
      first = false;
    }
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rule reduct induction over categorical decision tables"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string algo = "prg";
  std::string prune_mode = "superset";
  std::vector<std::string> compare_algos{"rg", "mrg", "prg", "oracle"};
  GenParams gen_params;
  bool gen_raw = false;
  int tree_m = 4;

  const auto algo_check = CLI::IsMember({"rg", "mrg", "prg", "oracle"});
  const auto mode_check = CLI::IsMember({"superset", "literal"});
  const auto format_check = CLI::IsMember({"text", "json", "csv"});

  CLI::App* run = app.add_subcommand("run", "induce rules with one algorithm");
  add_input_opts(run, opts);
  run->add_option("--algo", algo, "rg|mrg|prg|oracle (default prg)")
      ->check(algo_check);
  run->add_option("--prune-mode", prune_mode, "superset|literal (prg only)")
      ->check(mode_check);
  run->add_option("--format", opts.format, "text|json|csv")->check(format_check);
  run->add_flag("--trace", opts.trace, "print per-object search trace to stderr");
  run->add_flag("--auto-merge", opts.auto_merge,
                "merge indiscernible rows before searching");
  run->add_flag("--drop-conflicts", opts.drop_conflicts,
                "drop conflicting groups while merging (implies --auto-merge)");

  CLI::App* merge = app.add_subcommand("merge", "collapse indiscernible rows, emit CSV");
  add_input_opts(merge, opts);
  merge->add_flag("--drop-conflicts", opts.drop_conflicts,
                  "drop conflicting groups instead of failing");

  CLI::App* check = app.add_subcommand("check", "report conflicting groups");
  add_input_opts(check, opts);

  CLI::App* gen = app.add_subcommand("gen", "emit a seeded synthetic table as CSV");
  gen->add_option("--seed", gen_params.seed, "64-bit generator seed");
  gen->add_option("--rows", gen_params.rows, "objects to draw");
  gen->add_option("--features", gen_params.features, "feature columns (1..32)");
  gen->add_option("--values", gen_params.values_per_feature, "values per feature (>= 2)");
  gen->add_option("--classes", gen_params.decision_classes, "decision classes (>= 2)");
  gen->add_flag("--raw", gen_raw,
                "draw decisions per row and skip merging (may be inconsistent)");

  CLI::App* cmp = app.add_subcommand("compare", "run several algorithms and compare");
  add_input_opts(cmp, opts);
  cmp->add_option("--algo", compare_algos, "algorithms to run (repeatable)")
      ->check(algo_check);
  cmp->add_option("--prune-mode", prune_mode, "superset|literal (prg only)")
      ->check(mode_check);
  cmp->add_option("--format", opts.format, "text|json|csv")->check(format_check);
  cmp->add_flag("--trace", opts.trace, "print per-object traces to stderr");
  cmp->add_flag("--auto-merge", opts.auto_merge,
                "merge indiscernible rows before searching");
  cmp->add_flag("--drop-conflicts", opts.drop_conflicts,
                "drop conflicting groups while merging");

  CLI::App* tree = app.add_subcommand("tree-dump", "print the pre-order subset list");
  tree->add_option("-m,--features", tree_m, "feature count (1..32)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (run->parsed()) return cmd_run(opts, algo, prune_mode);
    if (merge->parsed()) return cmd_merge(opts);
    if (check->parsed()) return cmd_check(opts);
    if (gen->parsed()) {
      gen_params.mode = gen_raw ? GenMode::raw : GenMode::force_consistent;
      return cmd_gen(gen_params);
    }
    if (cmp->parsed()) return cmd_compare(opts, compare_algos, prune_mode);
    if (tree->parsed()) return cmd_tree_dump(tree_m);
  } catch (const ConflictError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 3;  // unreachable: a subcommand is required
}
