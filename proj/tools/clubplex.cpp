// Command-line front end: degeneracy, verify, solve, export-ilp, bench,
// analyze, scatter and generate subcommands.

#include "clubplex/bench.hpp"
#include "clubplex/errors.hpp"
#include "clubplex/generators.hpp"
#include "clubplex/ilp.hpp"
#include "clubplex/ordering.hpp"
#include "clubplex/solvers.hpp"
#include "clubplex/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

using namespace clubplex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInstanceErrors = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string &path, const std::string &format) {
  std::vector<std::string> warnings;
  Graph g = read_graph_file(path, parse_graph_format(format), &warnings);
  for (const auto &w : warnings)
    std::cerr << "warning: " << path << ": " << w << '\n';
  return g;
}

std::ofstream open_output(const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write '" + path + "'");
  return out;
}

std::ifstream open_input(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  return in;
}

std::vector<std::string> split_list(const std::string &text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty())
      out.push_back(item);
  return out;
}

CandidateKind make_kind(const std::string &problem, std::size_t s) {
  switch (parse_problem(problem)) {
  case Problem::Clique:
    return CandidateKind::clique();
  case Problem::Club:
    return CandidateKind::club(s);
  case Problem::Plex:
    return CandidateKind::plex(s);
  }
  return CandidateKind::clique();
}

VertexSet read_label_set(const Graph &g, const std::string &path) {
  std::unordered_map<std::string, Vertex> ids;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    ids.emplace(g.label(v), v);
  auto in = open_input(path);
  VertexSet set;
  for (std::string label; in >> label;) {
    auto it = ids.find(label);
    if (it == ids.end())
      throw UsageError("unknown vertex label '" + label + "'");
    set.push_back(it->second);
  }
  return normalized(std::move(set));
}

std::string join_labels(const Graph &g, const VertexSet &set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0)
      out += ' ';
    out += g.label(set[i]);
  }
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact maximum clique, s-club and s-plex solving with x-degeneracy Turing "
               "kernels, plus benchmarking and runtime correlation analysis"};
  app.require_subcommand(1);

  std::string input, format = "edgelist";
  auto add_input = [&](CLI::App *cmd) {
    cmd->add_option("--input", input, "Graph file")->required();
    cmd->add_option("--format", format, "edgelist or dimacs")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
  };

  // degeneracy
  auto *degeneracy = app.add_subcommand("degeneracy", "Compute the x-degeneracy");
  std::size_t deg_x = 1;
  bool print_ordering = false;
  degeneracy->add_option("--x", deg_x, "Neighborhood radius")->required()->check(CLI::PositiveNumber);
  add_input(degeneracy);
  degeneracy->add_flag("--ordering", print_ordering, "Also print the ordering, one label per line");

  // verify
  auto *verify = app.add_subcommand("verify", "Check a vertex set against a predicate");
  std::string problem;
  std::size_t s = 1;
  std::string set_file;
  verify->add_option("--problem", problem)->required()->check(CLI::IsMember({"clique", "club", "plex"}));
  verify->add_option("--s", s)->check(CLI::PositiveNumber);
  add_input(verify);
  verify->add_option("--set", set_file, "File with one vertex label per line")->required();

  // solve
  auto *solve = app.add_subcommand("solve", "Find a maximum clique, s-club or s-plex");
  std::string variant = "default";
  std::optional<std::size_t> solve_x, hint_value;
  std::optional<double> timeout;
  bool plex_d2 = false;
  solve->add_option("--problem", problem)->required()->check(CLI::IsMember({"clique", "club", "plex"}));
  solve->add_option("--s", s)->check(CLI::PositiveNumber);
  solve->add_option("--variant", variant)->check(CLI::IsMember({"notk", "full", "default", "hint"}));
  solve->add_option("--x", solve_x, "Kernel radius (default: s; 1 for clique)");
  solve->add_flag("--plex-d2", plex_d2, "Use the 2-degeneracy kernel for plexes");
  add_input(solve);
  solve->add_option("--timeout", timeout, "Seconds");
  solve->add_option("--hint-value", hint_value, "Known optimum for the hint variant");

  // export-ilp
  auto *export_ilp = app.add_subcommand("export-ilp", "Write an ILP formulation in LP format");
  std::string output;
  export_ilp->add_option("--problem", problem)->required()->check(CLI::IsMember({"plex", "2club", "3club"}));
  export_ilp->add_option("--s", s, "Plex parameter")->check(CLI::PositiveNumber);
  add_input(export_ilp);
  export_ilp->add_option("--output", output)->required();

  // bench
  auto *bench = app.add_subcommand("bench", "Run a problem x variant grid over a manifest");
  std::string manifest, problems = "2club", variants = "notk,full,default,hint", out, summary;
  double bench_timeout = 3600.0, floor = 0.05;
  bool quiet = false;
  bench->add_option("--manifest", manifest)->required();
  bench->add_option("--problems", problems, "Comma list, e.g. clique,2club,3club,2plex,3plex,3plex-2");
  bench->add_option("--variants", variants, "Comma list of notk,full,default,hint");
  bench->add_option("--timeout", bench_timeout, "Seconds per cell");
  bench->add_option("--floor", floor, "Instances with a faster cell are flagged");
  bench->add_option("--out", out)->required();
  bench->add_option("--summary", summary, "Also write mean runtimes per cell");
  bench->add_flag("--quiet", quiet);

  // analyze
  auto *analyze = app.add_subcommand("analyze", "Correlate parameters with log runtimes");
  std::string results, report;
  int gap_offset = 1;
  bool adjust = false;
  analyze->add_option("--results", results)->required();
  analyze->add_option("--report", report)->required();
  analyze->add_option("--gap-offset", gap_offset)->check(CLI::IsMember({0, 1}));
  analyze->add_flag("--adjust-polynomial", adjust);
  analyze->add_option("--summary", summary, "Also write mean runtimes per cell");

  // scatter
  auto *scatter = app.add_subcommand("scatter", "Emit plot-ready (x, y) pairs");
  std::string x_col = "d_x", y_col = "gap";
  scatter->add_option("--results", results)->required();
  scatter->add_option("--x", x_col);
  scatter->add_option("--y", y_col);
  scatter->add_option("--out", out)->required();
  scatter->add_option("--gap-offset", gap_offset)->check(CLI::IsMember({0, 1}));

  // generate
  auto *generate = app.add_subcommand("generate", "Write seeded instances");
  generate->require_subcommand(1);
  std::size_t gen_n = 50, core_size = 8, background_degree = 3;
  double gen_p = 0.1, core_density = 1.0;
  std::uint64_t seed = 1;
  auto *gen_random = generate->add_subcommand("random", "Erdős–Rényi G(n, p)");
  gen_random->add_option("--n", gen_n)->required();
  gen_random->add_option("--p", gen_p)->required()->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", seed);
  gen_random->add_option("--out", out)->required();
  auto *gen_planted = generate->add_subcommand("planted", "Sparse background with a dense core");
  gen_planted->add_option("--n", gen_n)->required();
  gen_planted->add_option("--core-size", core_size);
  gen_planted->add_option("--core-density", core_density)->check(CLI::Range(0.0, 1.0));
  gen_planted->add_option("--background-degree", background_degree);
  gen_planted->add_option("--seed", seed);
  gen_planted->add_option("--out", out)->required();
  auto *gen_suite = generate->add_subcommand("suite", "Mixed random + planted suite with manifest");
  std::string dir;
  SuiteParams suite;
  gen_suite->add_option("--dir", dir)->required();
  gen_suite->add_option("--random-count", suite.random_count);
  gen_suite->add_option("--planted-count", suite.planted_count);
  gen_suite->add_option("--seed", suite.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*degeneracy) {
      Graph g = load_graph(input, format);
      XOrdering ord = x_degeneracy_ordering(g, deg_x);
      std::cout << ord.degeneracy << '\n';
      if (print_ordering)
        for (Vertex v : ord.order)
          std::cout << g.label(v) << '\n';
      return kExitOk;
    }

    if (*verify) {
      Graph g = load_graph(input, format);
      VertexSet set = read_label_set(g, set_file);
      bool ok = satisfies(g, set, make_kind(problem, s));
      std::cout << (ok ? "yes" : "no") << '\n';
      return ok ? kExitOk : 1;
    }

    if (*solve) {
      Graph g = load_graph(input, format);
      CandidateKind kind = make_kind(problem, s);
      VariantConfig cfg;
      cfg.variant = parse_variant(variant);
      cfg.x = solve_x ? *solve_x : (plex_d2 && kind.problem == Problem::Plex ? 2 : default_radius(kind));
      cfg.hint_value = hint_value;
      cfg.timeout_seconds = timeout;
      Solution sol = turing_kernel_solve(g, kind, cfg);
      std::cout << "status " << to_string(sol.status) << '\n';
      std::cout << "size " << sol.size() << '\n';
      std::cout << "vertices " << join_labels(g, sol.members) << '\n';
      char stats[256];
      std::snprintf(stats, sizeof stats,
                    "oracle_calls=%zu max_core_size=%zu branch_nodes=%zu elapsed=%.6f timed_out=%d",
                    sol.stats.oracle_calls, sol.stats.max_core_size, sol.stats.branch_nodes,
                    sol.stats.elapsed_seconds, sol.stats.timed_out ? 1 : 0);
      std::cout << stats << '\n';
      return kExitOk;
    }

    if (*export_ilp) {
      Graph g = load_graph(input, format);
      IlpModel model = problem == "plex"    ? build_plex_model(g, s)
                       : problem == "2club" ? build_2club_model(g)
                                            : build_3club_model(g);
      auto file = open_output(output);
      write_lp(model, file);
      return kExitOk;
    }

    if (*bench) {
      BenchConfig config;
      for (const auto &label : split_list(problems))
        config.problems.push_back(ProblemSpec::parse(label));
      for (const auto &name : split_list(variants))
        config.variants.push_back(parse_variant(name));
      config.timeout_seconds = bench_timeout;
      config.floor_seconds = floor;
      auto entries = read_manifest(manifest);
      auto records = run_benchmark(entries, config, quiet ? nullptr : &std::cerr);
      auto file = open_output(out);
      write_results_csv(records, file);
      if (!summary.empty()) {
        auto sfile = open_output(summary);
        write_summary_csv(summary_table(records), sfile);
      }
      if (has_errors(records)) {
        for (const auto &r : records)
          if (!r.error.empty())
            std::cerr << "error: " << r.instance << ": " << r.error << '\n';
        return kExitInstanceErrors;
      }
      return kExitOk;
    }

    if (*analyze) {
      auto in = open_input(results);
      auto records = read_results_csv(in);
      AnalysisOptions options{gap_offset, adjust};
      auto table = correlation_table(records, options);
      if (table.empty())
        std::cerr << "warning: every record was filtered; report has no samples\n";
      auto file = open_output(report);
      write_correlation_csv(table, file);
      if (!summary.empty()) {
        auto sfile = open_output(summary);
        write_summary_csv(summary_table(records), sfile);
      }
      return kExitOk;
    }

    if (*scatter) {
      auto in = open_input(results);
      auto records = read_results_csv(in);
      auto points = scatter_data(records, x_col, y_col, gap_offset);
      auto file = open_output(out);
      write_scatter_csv(points, x_col, y_col, file);
      return kExitOk;
    }

    if (*gen_random) {
      auto file = open_output(out);
      write_edge_list(generate_random_graph(gen_n, gen_p, seed), file);
      return kExitOk;
    }
    if (*gen_planted) {
      PlantedCoreParams params{gen_n, background_degree, core_size, core_density, seed};
      auto file = open_output(out);
      write_edge_list(generate_planted_core(params), file);
      return kExitOk;
    }
    if (*gen_suite) {
      auto entries = generate_benchmark_suite(dir, suite);
      std::cout << "wrote " << entries.size() << " instances to " << dir << "/manifest.txt\n";
      return kExitOk;
    }
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
