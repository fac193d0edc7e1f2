#include <doctest.h>

#include "clubplex/bench.hpp"
#include "clubplex/generators.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace clubplex;
namespace fs = std::filesystem;

namespace {

BenchRecord synthetic(std::size_t i, double runtime, std::size_t d_x, std::size_t k) {
  BenchRecord r;
  r.instance = "g" + std::to_string(i);
  r.n = 50 + 3 * i;
  r.m = 100;
  r.problem = Problem::Club;
  r.s = 2;
  r.variant = Variant::Hint;
  r.x = 2;
  r.d_x = d_x;
  r.solution = k;
  r.runtime_seconds = runtime;
  return r;
}

fs::path scratch_dir(const std::string &name) {
  auto dir = fs::temp_directory_path() / ("clubplex-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_graph(const fs::path &path, const Graph &g) {
  std::ofstream out(path);
  write_edge_list(g, out);
}

} // namespace

TEST_CASE("problem labels") {
  CHECK(ProblemSpec{CandidateKind::club(2), 2}.label() == "2club");
  CHECK(ProblemSpec{CandidateKind::plex(3), 3}.label() == "3plex");
  CHECK(ProblemSpec{CandidateKind::plex(3), 2}.label() == "3plex-2");
  CHECK(ProblemSpec{CandidateKind::clique(), 1}.label() == "clique");
  for (const char *label : {"clique", "2club", "3club", "2plex", "3plex", "3plex-2"})
    CHECK(ProblemSpec::parse(label).label() == label);
  CHECK_THROWS(ProblemSpec::parse("club"));
}

TEST_CASE("manifest parsing") {
  std::istringstream in("# suite\na.txt edgelist\n\n/abs/b.col dimacs\n");
  auto entries = parse_manifest(in, "/base");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].path == "/base/a.txt");
  CHECK(entries[0].format == GraphFormat::EdgeList);
  CHECK(entries[1].path == "/abs/b.col");
  CHECK(entries[1].format == GraphFormat::Dimacs);

  std::istringstream bad("a.txt csv\n");
  CHECK_THROWS(parse_manifest(bad));
}

TEST_CASE("gap column") {
  auto r = synthetic(0, 1.0, 7, 5);
  CHECK(r.gap() == 3);
  CHECK(r.gap(0) == 2);
  r.solution.reset();
  CHECK_FALSE(r.gap().has_value());
}

TEST_CASE("results csv round trip") {
  std::vector<BenchRecord> records{synthetic(0, 0.25, 6, 4), synthetic(1, 1.5, 8, 3)};
  records[1].timed_out = true;
  records[1].filtered = true;
  records[1].solution.reset();
  std::ostringstream out;
  write_results_csv(records, out);
  auto text = out.str();
  CHECK(text.substr(0, text.find('\n')) == kResultsHeader);
  CHECK(text.find("g0,50,100,club,2,hint,2,6,4,3,0.25,0,0\n") != std::string::npos);
  CHECK(text.find("g1,53,100,club,2,hint,2,8,,,1.5,1,1\n") != std::string::npos);

  std::istringstream in(text);
  auto back = read_results_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0].solution == std::optional<std::size_t>{4});
  CHECK(back[0].runtime_seconds == 0.25);
  CHECK(back[1].timed_out);
  CHECK_FALSE(back[1].solution.has_value());

  std::istringstream wrong("instance,n\n");
  CHECK_THROWS(read_results_csv(wrong));
}

TEST_CASE("correlation table on a planted law") {
  std::vector<BenchRecord> records;
  for (std::size_t i = 0; i < 12; ++i) {
    std::size_t k = 3 + i % 4;
    std::size_t d = k + i; // gap = i + 1
    records.push_back(synthetic(i, 0.5 * std::pow(1.2, static_cast<double>(d - k + 1)), d, k));
  }
  auto report = correlation_table(records);
  REQUIRE(report.rows.size() == 3);
  const auto &gap = report.rows[2];
  CHECK(gap.parameter == Parameter::Gap);
  REQUIRE(gap.pearson_r);
  CHECK(std::abs(*gap.pearson_r - 1.0) < 1e-12);
  REQUIRE(gap.fit);
  CHECK(std::abs(gap.fit->alpha - 1.2) < 1e-6);
  CHECK(std::abs(gap.fit->beta - 0.5) < 1e-6);
  CHECK(gap.sample_count == 12);

  std::ostringstream out;
  write_correlation_csv(report, out);
  CHECK(out.str().find("2club,hint,gap,1.00,") != std::string::npos);

  // Offset 0 shifts gap by one, so beta absorbs a factor alpha.
  auto shifted = correlation_table(records, {0, false});
  CHECK(std::abs(*shifted.rows[2].pearson_r - 1.0) < 1e-12);
  CHECK(std::abs(shifted.rows[2].fit->beta - 0.5 * 1.2) < 1e-6);
}

TEST_CASE("correlation table with constant runtimes reports na") {
  std::vector<BenchRecord> records;
  for (std::size_t i = 0; i < 5; ++i)
    records.push_back(synthetic(i, 2.0, 4 + i, 3));
  auto report = correlation_table(records);
  std::ostringstream out;
  write_correlation_csv(report, out);
  for (const auto &row : report.rows)
    CHECK_FALSE(row.pearson_r.has_value());
  CHECK(out.str().find(",na,na,") != std::string::npos);
}

TEST_CASE("filtered rows are excluded and counted") {
  std::vector<BenchRecord> records{synthetic(0, 1.0, 5, 3), synthetic(1, 3.0, 5, 3),
                                   synthetic(2, 100.0, 5, 3)};
  records[2].filtered = true;
  records[2].timed_out = true;
  auto summary = summary_table(records);
  REQUIRE(summary.size() == 1);
  CHECK(*summary[0].mean_runtime == 2.0);
  CHECK(summary[0].sample_count == 2);
  CHECK(summary[0].excluded_count == 1);

  auto report = correlation_table(records);
  CHECK(report.rows[0].excluded_count == 1);

  for (auto &r : records)
    r.filtered = true;
  CHECK(correlation_table(records).empty());

  auto single = summary_table({synthetic(0, 0.75, 5, 3)});
  CHECK(*single[0].mean_runtime == 0.75);
}

TEST_CASE("scatter data") {
  std::vector<BenchRecord> records{synthetic(0, 1.0, 6, 3), synthetic(1, 2.0, 9, 4),
                                   synthetic(2, 3.0, 5, 5)};
  records[2].filtered = true;
  auto pts = scatter_data(records, "d_x", "gap");
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == std::pair<double, double>{6, 4});
  CHECK(pts[1] == std::pair<double, double>{9, 6});
  CHECK(scatter_data({synthetic(7, 0.5, 4, 2)}, "n", "runtime_seconds") ==
        std::vector<std::pair<double, double>>{{71, 0.5}});
  CHECK_THROWS(scatter_data(records, "colour", "gap"));
}

TEST_CASE("benchmark harness") {
  auto dir = scratch_dir("bench");
  CHECK(run_benchmark({}, {}).empty());

  auto g = generate_random_graph(12, 0.35, 4);
  write_graph(dir / "a.txt", g);
  write_graph(dir / "b.txt", generate_random_graph(10, 0.4, 5));
  std::vector<ManifestEntry> manifest{{(dir / "a.txt").string(), GraphFormat::EdgeList},
                                      {(dir / "missing.txt").string(), GraphFormat::EdgeList},
                                      {(dir / "b.txt").string(), GraphFormat::EdgeList}};
  BenchConfig cfg;
  cfg.problems = {ProblemSpec{CandidateKind::club(2), 2}, ProblemSpec{CandidateKind::plex(3), 2}};
  cfg.variants = {Variant::Hint, Variant::Full, Variant::Default, Variant::NoTK};
  cfg.timeout_seconds = 60;
  cfg.floor_seconds = 0.0;

  auto records = run_benchmark(manifest, cfg);
  CHECK(records.size() == 3 * 2 * 4);
  CHECK(has_errors(records));
  for (const auto &r : records) {
    if (r.instance == "missing.txt") {
      CHECK_FALSE(r.error.empty());
      CHECK(r.filtered);
      continue;
    }
    REQUIRE(r.solution);
    CHECK(r.gap() == static_cast<long long>(*r.d_x) - static_cast<long long>(*r.solution) + 1);
    CHECK_FALSE(r.filtered);
  }
  // Variant agreement per (instance, problem).
  for (const auto &a : records)
    for (const auto &b : records)
      if (a.instance == b.instance && a.problem_label() == b.problem_label())
        CHECK(a.solution == b.solution);

  // Determinism apart from runtimes.
  auto again = run_benchmark(manifest, cfg);
  REQUIRE(again.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(again[i].instance == records[i].instance);
    CHECK(again[i].variant == records[i].variant);
    CHECK(again[i].solution == records[i].solution);
    CHECK(again[i].d_x == records[i].d_x);
  }

  // A floor above every runtime flags whole instances.
  cfg.floor_seconds = 1e9;
  for (const auto &r : run_benchmark(manifest, cfg))
    CHECK(r.filtered);
  fs::remove_all(dir);
}

TEST_CASE("suite generation") {
  auto dir = scratch_dir("suite");
  SuiteParams params;
  params.random_count = 3;
  params.planted_count = 2;
  auto manifest = generate_benchmark_suite(dir.string(), params);
  CHECK(manifest.size() == 5);
  for (const auto &e : manifest)
    CHECK(fs::exists(e.path));
  auto reread = read_manifest((dir / "manifest.txt").string());
  REQUIRE(reread.size() == manifest.size());
  for (std::size_t i = 0; i < manifest.size(); ++i)
    CHECK(fs::equivalent(reread[i].path, manifest[i].path));
  fs::remove_all(dir);
}
