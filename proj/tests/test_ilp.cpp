#include <doctest.h>

#include "clubplex/errors.hpp"
#include "clubplex/generators.hpp"
#include "clubplex/ilp.hpp"
#include "clubplex/verify.hpp"
#include "oracles.hpp"

#include <fstream>
#include <sstream>

using namespace clubplex;

namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_prefix(const IlpModel &m, const std::string &prefix) {
  std::size_t count = 0;
  for (const auto &c : m.constraints)
    if (c.name.rfind(prefix, 0) == 0)
      ++count;
  return count;
}

VertexSet all_vertices(const Graph &g) {
  VertexSet out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out[v] = v;
  return out;
}

struct ExpectedSize {
  std::size_t variables, constraints, nonzeros;
};

// Counting formulas derived from the formulations, with distances from the
// Floyd–Warshall oracle.
ExpectedSize expected_plex(const Graph &g) {
  std::size_t n = g.vertex_count(), m = g.edge_count();
  return {n + 1, n + 1, 3 * n + 2 * m + 1};
}

ExpectedSize expected_club(const Graph &g, std::size_t s) {
  const std::size_t n = g.vertex_count();
  auto d = oracle::induced_distances(g, all_vertices(g));
  auto adj = oracle::adjacency_matrix(g);
  auto edges = g.edges();
  ExpectedSize out{n + (s == 3 ? edges.size() : 0), 0, 0};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      long dist = d[u][v];
      if (dist < 0 || dist > static_cast<long>(s)) {
        out.constraints += 1;
        out.nonzeros += 2;
      } else if (dist >= 2) {
        std::size_t common = 0, bridges = 0;
        for (Vertex w = 0; w < n; ++w)
          if (adj[u][w] && adj[v][w])
            ++common;
        if (s == 3)
          for (auto [a, b] : edges) {
            auto only_u = [&](Vertex p) { return adj[u][p] && !adj[v][p]; };
            auto only_v = [&](Vertex q) { return adj[v][q] && !adj[u][q]; };
            if ((only_u(a) && only_v(b)) || (only_u(b) && only_v(a)))
              ++bridges;
          }
        out.constraints += 1;
        out.nonzeros += 2 + common + bridges;
      }
    }
  if (s == 3) {
    out.constraints += 2 * edges.size();
    out.nonzeros += 4 * edges.size();
  }
  return out;
}

void check_size(const IlpModel &m, const ExpectedSize &e) {
  CHECK(m.variables.size() == e.variables);
  CHECK(m.constraints.size() == e.constraints);
  CHECK(m.nonzeros() == e.nonzeros);
}

} // namespace

TEST_CASE("plex model examples") {
  auto k3 = build_plex_model(oracle::complete(3), 2);
  CHECK(k3.variables.size() == 4);
  CHECK(k3.constraints.size() == 4);

  auto p3 = build_plex_model(oracle::path(3), 2);
  auto ev = evaluate_assignment(p3, VertexSet{0, 1, 2});
  CHECK(ev.feasible);
  CHECK(ev.objective == 3);

  auto c5 = build_plex_model(oracle::cycle(5), 2);
  auto bad = evaluate_assignment(c5, VertexSet{0, 1, 2, 3, 4});
  CHECK_FALSE(bad.feasible);
  CHECK(bad.violated == "deg0");

  auto empty = evaluate_assignment(c5, VertexSet{});
  CHECK(empty.feasible);
  CHECK(empty.objective == 0);
}

TEST_CASE("2-club model examples") {
  auto p4 = build_2club_model(oracle::path(4));
  auto ev = evaluate_assignment(p4, VertexSet{0, 1, 2});
  CHECK(ev.feasible);
  CHECK(ev.objective == 3);
  auto all = evaluate_assignment(p4, VertexSet{0, 1, 2, 3});
  CHECK_FALSE(all.feasible);
  CHECK(all.violated == "far_0_3");

  auto none = evaluate_assignment(build_2club_model(generate_random_graph(9, 0.3, 2)), VertexSet{});
  CHECK(none.feasible);
  CHECK(none.objective == 0);

  auto p3 = build_2club_model(oracle::path(3));
  CHECK(count_prefix(p3, "near_") == 1);
  CHECK(count_prefix(p3, "far_") == 0);
}

TEST_CASE("3-club model examples") {
  auto p4 = build_3club_model(oracle::path(4));
  // z1 is the edge {1, 2}; it is the only bridge for the pair (0, 3).
  CHECK(p4.edges[1] == Edge{1, 2});
  const Constraint *near03 = nullptr;
  for (const auto &c : p4.constraints)
    if (c.name == "near_0_3")
      near03 = &c;
  REQUIRE(near03 != nullptr);
  auto z1 = p4.find_variable("z1");
  REQUIRE(z1);
  CHECK(near03->terms == std::vector<Term>{{0, 1}, {3, 1}, {*z1, -1}});

  auto ev = evaluate_assignment(p4, VertexSet{0, 1, 2, 3});
  CHECK(ev.feasible);
  CHECK(ev.objective == 4);

  auto p5 = evaluate_assignment(build_3club_model(oracle::path(5)), VertexSet{0, 1, 2, 3, 4});
  CHECK_FALSE(p5.feasible);
  CHECK(p5.violated == "far_0_4");
}

TEST_CASE("evaluate_assignment rejects foreign vertices") {
  auto m = build_2club_model(oracle::path(3));
  CHECK_THROWS_AS(evaluate_assignment(m, VertexSet{0, 5}), ContractError);
}

TEST_CASE("LP output") {
  SUBCASE("K2 plex structure") {
    auto text = write_lp(build_plex_model(oracle::complete(2), 2));
    CHECK(text.find(" card: y - x0 - x1 = 0\n") != std::string::npos);
    CHECK(text.find(" deg0:") != std::string::npos);
    CHECK(text.find(" deg1:") != std::string::npos);
    CHECK(text.find(" deg2:") == std::string::npos);
  }
  SUBCASE("deterministic") {
    auto g = generate_random_graph(12, 0.3, 8);
    auto m = build_3club_model(g);
    CHECK(write_lp(m) == write_lp(m));
    CHECK(write_lp(build_3club_model(g)) == write_lp(m));
  }
  SUBCASE("golden files") {
    auto p4 = oracle::path(4);
    CHECK(write_lp(build_plex_model(p4, 2)) == slurp(CLUBPLEX_GOLDEN_DIR "/p4-plex.lp"));
    CHECK(write_lp(build_2club_model(p4)) == slurp(CLUBPLEX_GOLDEN_DIR "/p4-2club.lp"));
    CHECK(write_lp(build_3club_model(p4)) == slurp(CLUBPLEX_GOLDEN_DIR "/p4-3club.lp"));
  }
  SUBCASE("long rows wrap") {
    auto text = write_lp(build_plex_model(oracle::complete(20), 2));
    for (std::size_t pos = 0, next; (next = text.find('\n', pos)) != std::string::npos; pos = next + 1)
      CHECK(next - pos < 255);
  }
}

TEST_CASE("LP round trip") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto g = generate_random_graph(6 + seed % 10, 0.3, seed);
    for (const auto &m : {build_plex_model(g, 1 + seed % 3), build_2club_model(g), build_3club_model(g)}) {
      auto back = read_lp(write_lp(m));
      CHECK(back == m);
    }
  }
}

TEST_CASE("model sizes follow the counting formulas") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = generate_random_graph(5 + seed % 12, 0.15 + 0.03 * static_cast<double>(seed % 7), seed);
    check_size(build_plex_model(g, 2), expected_plex(g));
    check_size(build_2club_model(g), expected_club(g, 2));
    check_size(build_3club_model(g), expected_club(g, 3));
  }
}

TEST_CASE("formulations are sound on every subset") {
  std::size_t connectivity_divergences = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto g = generate_random_graph(7, 0.25 + 0.03 * static_cast<double>(seed), seed);
    auto plex = build_plex_model(g, 2);
    auto club2 = build_2club_model(g);
    auto club3 = build_3club_model(g);
    oracle::for_each_subset(g.vertex_count(), [&](const VertexSet &set) {
      auto e2 = evaluate_assignment(club2, set);
      auto e3 = evaluate_assignment(club3, set);
      auto ep = evaluate_assignment(plex, set);
      CHECK(e2.feasible == oracle::club_oracle(g, set, 2));
      CHECK(e3.feasible == oracle::club_oracle(g, set, 3));
      CHECK(ep.feasible == oracle::plex_degree_oracle(g, set, 2));
      if (ep.feasible && !oracle::connected_oracle(g, set))
        ++connectivity_divergences;
      for (const auto *e : {&e2, &e3, &ep})
        if (e->feasible)
          CHECK(e->objective == static_cast<std::int64_t>(set.size()));
    });
  }
  MESSAGE("plex model accepts " << connectivity_divergences << " disconnected subsets");
  CHECK(connectivity_divergences > 0);
}
