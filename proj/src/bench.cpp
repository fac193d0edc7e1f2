#include "clubplex/bench.hpp"

#include "clubplex/errors.hpp"
#include "clubplex/generators.hpp"
#include "clubplex/ordering.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;

namespace clubplex {

// ---------------------------------------------------------------------------
// Manifest

std::vector<ManifestEntry> parse_manifest(std::istream &in, const std::string &base_dir) {
  std::vector<ManifestEntry> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ss(line);
    std::string path, format, extra;
    ss >> path >> format;
    if (format.empty() || (ss >> extra))
      throw ParseError(lineno, "expected '<path> <format>'");
    ManifestEntry entry;
    try {
      entry.format = parse_graph_format(format);
    } catch (const ContractError &e) {
      throw ParseError(lineno, e.what());
    }
    fs::path p(path);
    if (p.is_relative() && !base_dir.empty())
      p = fs::path(base_dir) / p;
    entry.path = p.string();
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<ManifestEntry> read_manifest(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open manifest '" + path + "'");
  return parse_manifest(in, fs::path(path).parent_path().string());
}

void write_manifest(const std::vector<ManifestEntry> &entries, std::ostream &out) {
  out << "# <path> <format>\n";
  for (const auto &e : entries)
    out << e.path << ' ' << to_string(e.format) << '\n';
}

// ---------------------------------------------------------------------------
// Problem labels

std::string problem_label(Problem problem, std::size_t s, std::size_t x) {
  if (problem == Problem::Clique)
    return "clique";
  std::string base = std::to_string(s) + (problem == Problem::Club ? "club" : "plex");
  return x == s ? base : base + "-" + std::to_string(x);
}

std::string ProblemSpec::label() const { return problem_label(kind.problem, kind.s, x); }

ProblemSpec ProblemSpec::parse(const std::string &label) {
  if (label == "clique")
    return {CandidateKind::clique(), 1};
  std::size_t digits = 0;
  while (digits < label.size() && std::isdigit(static_cast<unsigned char>(label[digits])))
    ++digits;
  if (digits == 0)
    throw ContractError("problem label '" + label + "' must start with s");
  std::size_t s = std::stoul(label.substr(0, digits));
  std::string rest = label.substr(digits);
  std::size_t x = s;
  if (auto dash = rest.find('-'); dash != std::string::npos) {
    x = std::stoul(rest.substr(dash + 1));
    rest = rest.substr(0, dash);
  }
  ProblemSpec spec;
  if (rest == "club")
    spec.kind = CandidateKind::club(s);
  else if (rest == "plex")
    spec.kind = CandidateKind::plex(s);
  else
    throw ContractError("unknown problem label '" + label + "'");
  spec.x = x;
  validate_config(spec.kind, {Variant::Full, x, std::nullopt, std::nullopt});
  return spec;
}

// ---------------------------------------------------------------------------
// Records and CSV

std::optional<long long> BenchRecord::gap(int offset) const {
  if (!d_x || !solution)
    return std::nullopt;
  return static_cast<long long>(*d_x) - static_cast<long long>(*solution) + offset;
}

namespace {

template <class T> std::string opt_text(const std::optional<T> &v) {
  return v ? std::to_string(*v) : std::string();
}

std::string format_double(double v, const char *fmt = "%.9g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

// Two decimals without a "-0.00" for tiny negative coefficients.
std::string rounded_r(double r) {
  std::string text = format_double(r, "%.2f");
  return text == "-0.00" ? "0.00" : text;
}

std::vector<std::string> split_csv(const std::string &line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ','))
    out.push_back(cell);
  if (!line.empty() && line.back() == ',')
    out.emplace_back();
  return out;
}

std::optional<std::size_t> opt_count(const std::string &cell, std::size_t line) {
  if (cell.empty())
    return std::nullopt;
  try {
    std::size_t pos = 0;
    auto v = std::stoull(cell, &pos);
    if (pos == cell.size())
      return static_cast<std::size_t>(v);
  } catch (const std::exception &) {
  }
  throw ParseError(line, "expected a count, got '" + cell + "'");
}

bool parse_flag(const std::string &cell, std::size_t line) {
  if (cell == "1" || cell == "true")
    return true;
  if (cell == "0" || cell == "false")
    return false;
  throw ParseError(line, "expected 0 or 1, got '" + cell + "'");
}

} // namespace

void write_results_csv(const std::vector<BenchRecord> &records, std::ostream &out) {
  out << kResultsHeader << '\n';
  for (const auto &r : records) {
    auto gap = r.gap(1);
    out << r.instance << ',' << opt_text(r.n) << ',' << opt_text(r.m) << ','
        << to_string(r.problem) << ',' << r.s << ',' << to_string(r.variant) << ',' << r.x << ','
        << opt_text(r.d_x) << ',' << opt_text(r.solution) << ','
        << (gap ? std::to_string(*gap) : std::string()) << ',' << format_double(r.runtime_seconds)
        << ',' << (r.timed_out ? 1 : 0) << ',' << (r.filtered ? 1 : 0) << '\n';
  }
}

std::vector<BenchRecord> read_results_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line))
    throw ParseError(1, "empty results file");
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  if (line != kResultsHeader)
    throw ParseError(1, "unexpected results header");

  std::vector<BenchRecord> out;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    auto cells = split_csv(line);
    if (cells.size() != 13)
      throw ParseError(lineno, "expected 13 columns, found " + std::to_string(cells.size()));
    BenchRecord r;
    try {
      r.instance = cells[0];
      r.n = opt_count(cells[1], lineno);
      r.m = opt_count(cells[2], lineno);
      r.problem = parse_problem(cells[3]);
      r.s = opt_count(cells[4], lineno).value_or(1);
      r.variant = parse_variant(cells[5]);
      r.x = opt_count(cells[6], lineno).value_or(1);
      r.d_x = opt_count(cells[7], lineno);
      r.solution = opt_count(cells[8], lineno);
      r.runtime_seconds = std::stod(cells[10]);
      r.timed_out = parse_flag(cells[11], lineno);
      r.filtered = parse_flag(cells[12], lineno);
    } catch (const ContractError &e) {
      throw ParseError(lineno, e.what());
    } catch (const std::invalid_argument &) {
      throw ParseError(lineno, "malformed runtime '" + cells[10] + "'");
    }
    if (!r.n)
      r.error = "instance failed to load";
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Harness

std::vector<BenchRecord> run_benchmark(const std::vector<ManifestEntry> &manifest,
                                       const BenchConfig &config, std::ostream *log) {
  std::vector<BenchRecord> records;
  for (const auto &entry : manifest) {
    const std::string name = fs::path(entry.path).filename().string();
    const std::size_t first_row = records.size();

    Graph g;
    std::string error;
    try {
      g = read_graph_file(entry.path, entry.format);
    } catch (const std::exception &e) {
      error = e.what();
    }

    for (const auto &problem : config.problems) {
      std::optional<std::size_t> d_x;
      if (error.empty())
        d_x = x_degeneracy_ordering(g, problem.x).degeneracy;

      std::optional<std::size_t> full_size, default_size;
      std::vector<Variant> order = config.variants;
      // Hints come from full/default, so those run first.
      std::stable_partition(order.begin(), order.end(),
                            [](Variant v) { return v != Variant::Hint; });

      for (Variant variant : order) {
        BenchRecord r;
        r.instance = name;
        r.problem = problem.kind.problem;
        r.s = problem.kind.s;
        r.variant = variant;
        r.x = problem.x;
        if (!error.empty()) {
          r.error = error;
          r.filtered = true;
          records.push_back(std::move(r));
          continue;
        }
        r.n = g.vertex_count();
        r.m = g.edge_count();
        r.d_x = d_x;

        VariantConfig cfg{variant, problem.x, std::nullopt, config.timeout_seconds};
        if (variant == Variant::Hint) {
          cfg.hint_value = full_size ? full_size : default_size;
          if (!cfg.hint_value) {
            auto probe = turing_kernel_solve(g, problem.kind,
                                             {Variant::Default, problem.x, std::nullopt,
                                              config.timeout_seconds});
            if (probe.status == SolveStatus::Optimal)
              cfg.hint_value = probe.size();
          }
        }
        if (variant == Variant::Hint && !cfg.hint_value) {
          // No optimum known within the limit, so the hint cell cannot run.
          r.timed_out = true;
          r.runtime_seconds = config.timeout_seconds;
        } else {
          Solution sol = turing_kernel_solve(g, problem.kind, cfg);
          r.runtime_seconds = sol.stats.elapsed_seconds;
          if (sol.status == SolveStatus::TimedOut) {
            r.timed_out = true;
            r.runtime_seconds = config.timeout_seconds;
          } else {
            r.solution = sol.size();
            if (variant == Variant::Full)
              full_size = sol.size();
            if (variant == Variant::Default)
              default_size = sol.size();
          }
        }
        if (log)
          *log << name << ' ' << problem.label() << ' ' << to_string(variant) << ' '
               << (r.timed_out ? std::string("timeout") : opt_text(r.solution)) << ' '
               << format_double(r.runtime_seconds, "%.4f") << "s\n";
        records.push_back(std::move(r));
      }
    }

    bool flag = false;
    for (std::size_t i = first_row; i < records.size(); ++i) {
      const auto &r = records[i];
      if (!r.error.empty() || r.timed_out || r.runtime_seconds < config.floor_seconds)
        flag = true;
    }
    if (flag)
      for (std::size_t i = first_row; i < records.size(); ++i)
        records[i].filtered = true;
  }
  return records;
}

bool has_errors(const std::vector<BenchRecord> &records) {
  return std::any_of(records.begin(), records.end(),
                     [](const BenchRecord &r) { return !r.error.empty(); });
}

// ---------------------------------------------------------------------------
// Analysis

std::string to_string(Parameter p) {
  switch (p) {
  case Parameter::N:
    return "n";
  case Parameter::Degeneracy:
    return "d_x";
  case Parameter::Gap:
    return "gap";
  }
  return "?";
}

bool CorrelationReport::empty() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CorrelationRow &r) { return r.sample_count == 0; });
}

namespace {

bool usable(const BenchRecord &r) {
  return !r.filtered && !r.timed_out && r.error.empty() && r.n && r.d_x && r.solution &&
         r.runtime_seconds > 0.0;
}

double polynomial_factor(const BenchRecord &r) {
  double d = static_cast<double>(std::max<std::size_t>(*r.d_x, 1));
  double n = static_cast<double>(std::max<std::size_t>(*r.n, 1));
  int power = 2;
  if (r.problem == Problem::Club || (r.problem == Problem::Plex && r.x != r.s))
    power = 3;
  return std::pow(d, power) * n;
}

using GroupKey = std::pair<std::string, Variant>;

// Groups in order of first appearance.
std::vector<std::pair<GroupKey, std::vector<const BenchRecord *>>>
group_records(const std::vector<BenchRecord> &records) {
  std::vector<std::pair<GroupKey, std::vector<const BenchRecord *>>> groups;
  std::map<GroupKey, std::size_t> index;
  for (const auto &r : records) {
    GroupKey key{r.problem_label(), r.variant};
    auto [it, inserted] = index.try_emplace(key, groups.size());
    if (inserted)
      groups.push_back({key, {}});
    groups[it->second].second.push_back(&r);
  }
  return groups;
}

} // namespace

CorrelationReport correlation_table(const std::vector<BenchRecord> &records,
                                    const AnalysisOptions &options) {
  CorrelationReport report;
  for (const auto &[key, rows] : group_records(records)) {
    std::vector<const BenchRecord *> kept;
    for (const auto *r : rows)
      if (usable(*r))
        kept.push_back(r);

    std::vector<double> log_runtime, runtime;
    for (const auto *r : kept) {
      double t = r->runtime_seconds;
      if (options.adjust_polynomial)
        t /= polynomial_factor(*r);
      runtime.push_back(t);
      log_runtime.push_back(std::log(t));
    }

    for (Parameter p : {Parameter::N, Parameter::Degeneracy, Parameter::Gap}) {
      CorrelationRow row;
      row.problem = key.first;
      row.variant = key.second;
      row.parameter = p;
      row.sample_count = kept.size();
      row.excluded_count = rows.size() - kept.size();

      std::vector<double> xs;
      for (const auto *r : kept) {
        switch (p) {
        case Parameter::N:
          xs.push_back(static_cast<double>(*r->n));
          break;
        case Parameter::Degeneracy:
          xs.push_back(static_cast<double>(*r->d_x));
          break;
        case Parameter::Gap:
          xs.push_back(static_cast<double>(*r->gap(options.gap_offset)));
          break;
        }
      }
      if (kept.size() >= 2) {
        row.pearson_r = pearson(xs, log_runtime);
        if (std::any_of(xs.begin(), xs.end(), [&](double v) { return v != xs[0]; }))
          row.fit = fit_exponential(xs, runtime);
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

void write_correlation_csv(const CorrelationReport &report, std::ostream &out) {
  out << "problem,variant,parameter,pearson_r,pearson_r_full,fit_alpha,fit_beta,sample_count,"
         "excluded_count\n";
  for (const auto &row : report.rows) {
    out << row.problem << ',' << to_string(row.variant) << ',' << to_string(row.parameter) << ',';
    if (row.pearson_r)
      out << rounded_r(*row.pearson_r) << ',' << format_double(*row.pearson_r, "%.17g");
    else
      out << "na,na";
    out << ',';
    if (row.fit)
      out << format_double(row.fit->alpha, "%.17g") << ',' << format_double(row.fit->beta, "%.17g");
    else
      out << "na,na";
    out << ',' << row.sample_count << ',' << row.excluded_count << '\n';
  }
}

std::vector<SummaryRow> summary_table(const std::vector<BenchRecord> &records) {
  std::vector<SummaryRow> out;
  for (const auto &[key, rows] : group_records(records)) {
    SummaryRow row;
    row.problem = key.first;
    row.variant = key.second;
    std::vector<double> times;
    for (const auto *r : rows)
      if (!r->filtered && !r->timed_out && r->error.empty())
        times.push_back(r->runtime_seconds);
    row.sample_count = times.size();
    row.excluded_count = rows.size() - times.size();
    if (!times.empty())
      row.mean_runtime = mean(times);
    out.push_back(std::move(row));
  }
  return out;
}

void write_summary_csv(const std::vector<SummaryRow> &rows, std::ostream &out) {
  out << "problem,variant,mean_runtime_seconds,sample_count,excluded_count\n";
  for (const auto &row : rows)
    out << row.problem << ',' << to_string(row.variant) << ','
        << (row.mean_runtime ? format_double(*row.mean_runtime) : std::string("na")) << ','
        << row.sample_count << ',' << row.excluded_count << '\n';
}

namespace {

std::optional<double> column_value(const BenchRecord &r, const std::string &name, int gap_offset) {
  auto as_double = [](const auto &opt) -> std::optional<double> {
    if (!opt)
      return std::nullopt;
    return static_cast<double>(*opt);
  };
  if (name == "n")
    return as_double(r.n);
  if (name == "m")
    return as_double(r.m);
  if (name == "s")
    return static_cast<double>(r.s);
  if (name == "x")
    return static_cast<double>(r.x);
  if (name == "d_x")
    return as_double(r.d_x);
  if (name == "solution")
    return as_double(r.solution);
  if (name == "gap")
    return as_double(r.gap(gap_offset));
  if (name == "runtime_seconds" || name == "runtime")
    return r.runtime_seconds;
  throw ContractError("unknown column '" + name + "'");
}

} // namespace

std::vector<std::pair<double, double>> scatter_data(const std::vector<BenchRecord> &records,
                                                    const std::string &x_param,
                                                    const std::string &y_param, int gap_offset) {
  std::vector<std::pair<double, double>> out;
  for (const auto &r : records) {
    if (r.filtered)
      continue;
    auto x = column_value(r, x_param, gap_offset);
    auto y = column_value(r, y_param, gap_offset);
    if (x && y)
      out.emplace_back(*x, *y);
  }
  return out;
}

void write_scatter_csv(const std::vector<std::pair<double, double>> &points,
                       const std::string &x_param, const std::string &y_param,
                       std::ostream &out) {
  out << x_param << ',' << y_param << '\n';
  for (auto [x, y] : points)
    out << format_double(x) << ',' << format_double(y) << '\n';
}

// ---------------------------------------------------------------------------
// Suites

std::vector<ManifestEntry> generate_benchmark_suite(const std::string &dir,
                                                    const SuiteParams &params) {
  fs::create_directories(dir);
  std::mt19937_64 rng(params.seed);
  std::vector<ManifestEntry> entries;

  auto save = [&](const Graph &g, const std::string &file) {
    fs::path path = fs::path(dir) / file;
    std::ofstream out(path);
    if (!out)
      throw std::runtime_error("cannot write '" + path.string() + "'");
    write_edge_list(g, out);
    entries.push_back({file, GraphFormat::EdgeList});
  };

  for (std::size_t i = 0; i < params.random_count; ++i) {
    std::uniform_int_distribution<std::size_t> size(12, 18);
    std::uniform_real_distribution<double> density(0.15, 0.35);
    std::size_t n = size(rng);
    double p = density(rng);
    save(generate_random_graph(n, p, rng()), "random-" + std::to_string(i) + ".txt");
  }
  for (std::size_t i = 0; i < params.planted_count; ++i) {
    PlantedCoreParams pp;
    pp.n = std::uniform_int_distribution<std::size_t>(16, 21)(rng);
    pp.background_degree = 3;
    pp.core_size = std::uniform_int_distribution<std::size_t>(7, 10)(rng);
    pp.core_density = std::uniform_real_distribution<double>(0.8, 1.0)(rng);
    pp.seed = rng();
    save(generate_planted_core(pp), "planted-" + std::to_string(i) + ".txt");
  }

  std::ofstream manifest(fs::path(dir) / "manifest.txt");
  write_manifest(entries, manifest);
  for (auto &e : entries)
    e.path = (fs::path(dir) / e.path).string();
  return entries;
}

} // namespace clubplex
