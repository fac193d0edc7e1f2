#pragma once

#include "clubplex/graph.hpp"
#include "clubplex/solvers.hpp"
#include "clubplex/stats.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace clubplex {

// ---------------------------------------------------------------------------
// Instances and problem grid

struct ManifestEntry {
  std::string path;
  GraphFormat format = GraphFormat::EdgeList;
};

/// One "<path> <format>" per line, '#' comments. Relative paths are resolved
/// against `base_dir` when it is nonempty.
std::vector<ManifestEntry> parse_manifest(std::istream &in, const std::string &base_dir = "");
std::vector<ManifestEntry> read_manifest(const std::string &path);
void write_manifest(const std::vector<ManifestEntry> &entries, std::ostream &out);

/// A problem of the grid together with its kernel radius, e.g. "2club",
/// "3plex", "3plex-2" (3-plex with the 2-degeneracy kernel) or "clique".
struct ProblemSpec {
  CandidateKind kind;
  std::size_t x = 1;

  std::string label() const;
  static ProblemSpec parse(const std::string &label);

  friend bool operator==(const ProblemSpec &, const ProblemSpec &) = default;
};

std::string problem_label(Problem problem, std::size_t s, std::size_t x);

// ---------------------------------------------------------------------------
// Results

struct BenchRecord {
  std::string instance;
  std::optional<std::size_t> n, m;
  Problem problem = Problem::Clique;
  std::size_t s = 1;
  Variant variant = Variant::Default;
  std::size_t x = 1;
  std::optional<std::size_t> d_x;
  std::optional<std::size_t> solution;
  double runtime_seconds = 0.0;
  bool timed_out = false;
  bool filtered = false;
  /// Load failure message; not part of the CSV (such rows have no n/m).
  std::string error;

  /// d_x - solution + offset when both are known.
  std::optional<long long> gap(int offset = 1) const;
  std::string problem_label() const { return clubplex::problem_label(problem, s, x); }
};

/// Bit-exact results.csv header.
inline constexpr const char *kResultsHeader =
    "instance,n,m,problem,s,variant,x,d_x,solution,gap,runtime_seconds,timed_out,filtered";

void write_results_csv(const std::vector<BenchRecord> &records, std::ostream &out);
std::vector<BenchRecord> read_results_csv(std::istream &in);

struct BenchConfig {
  std::vector<ProblemSpec> problems;
  std::vector<Variant> variants;
  double timeout_seconds = 3600.0;
  /// Instances with any cell faster than this are flagged as filtered.
  double floor_seconds = 0.05;
};

/// Runs every (instance, problem, variant) cell. An instance is flagged
/// `filtered` on all its rows when any cell timed out or ran under the
/// floor; unreadable instances produce error rows and the run continues.
/// Hint cells take their hint from the full (else default) result of the
/// same instance and problem. Progress lines go to `log` when given.
std::vector<BenchRecord> run_benchmark(const std::vector<ManifestEntry> &manifest,
                                       const BenchConfig &config, std::ostream *log = nullptr);

bool has_errors(const std::vector<BenchRecord> &records);

// ---------------------------------------------------------------------------
// Analysis

enum class Parameter { N, Degeneracy, Gap };
std::string to_string(Parameter p);

struct AnalysisOptions {
  int gap_offset = 1;
  /// Divide runtimes by the polynomial factor of the matching running-time
  /// bound (d^3 n for clubs, d^2 n for cliques and x = s plexes, d^3 n for
  /// plexes on the 2-degeneracy kernel) before taking logarithms.
  bool adjust_polynomial = false;
};

struct CorrelationRow {
  std::string problem;
  Variant variant = Variant::Default;
  Parameter parameter = Parameter::N;
  std::optional<double> pearson_r;
  std::optional<ExponentialFit> fit;
  std::size_t sample_count = 0;
  std::size_t excluded_count = 0;
};

struct CorrelationReport {
  std::vector<CorrelationRow> rows;
  /// True when every row was filtered out (no group had a usable sample).
  bool empty() const;
};

/// Pearson correlation of n, d_x and gap with ln(runtime), plus exponential
/// fits, per (problem, variant) over unfiltered completed rows.
CorrelationReport correlation_table(const std::vector<BenchRecord> &records,
                                    const AnalysisOptions &options = {});
void write_correlation_csv(const CorrelationReport &report, std::ostream &out);

struct SummaryRow {
  std::string problem;
  Variant variant = Variant::Default;
  std::optional<double> mean_runtime;
  std::size_t sample_count = 0;
  std::size_t excluded_count = 0;
};

std::vector<SummaryRow> summary_table(const std::vector<BenchRecord> &records);
void write_summary_csv(const std::vector<SummaryRow> &rows, std::ostream &out);

/// Column names accepted: n, m, s, x, d_x, solution, gap, runtime_seconds.
std::vector<std::pair<double, double>> scatter_data(const std::vector<BenchRecord> &records,
                                                    const std::string &x_param,
                                                    const std::string &y_param,
                                                    int gap_offset = 1);
void write_scatter_csv(const std::vector<std::pair<double, double>> &points,
                       const std::string &x_param, const std::string &y_param,
                       std::ostream &out);

// ---------------------------------------------------------------------------
// Desk-scale instance suites

struct SuiteParams {
  std::size_t random_count = 15;
  std::size_t planted_count = 15;
  std::uint64_t seed = 1;
};

/// Writes a mixed suite of seeded random and planted-core graphs as edge
/// lists into `dir` together with `dir/manifest.txt`; returns the manifest.
/// Planted instances are named "planted-*.txt".
std::vector<ManifestEntry> generate_benchmark_suite(const std::string &dir,
                                                    const SuiteParams &params);

} // namespace clubplex
