#include <doctest.h>

#include "clubplex/errors.hpp"
#include "clubplex/generators.hpp"
#include "clubplex/solvers.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace clubplex;

namespace {

VariantConfig config(Variant v, std::size_t x, std::optional<std::size_t> hint = {}) {
  VariantConfig cfg;
  cfg.variant = v;
  cfg.x = x;
  cfg.hint_value = hint;
  return cfg;
}

VertexSet without(std::size_t n, const VertexSet &removed) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!std::binary_search(removed.begin(), removed.end(), v))
      out.push_back(v);
  return out;
}

} // namespace

TEST_CASE("brute force examples") {
  auto star = brute_force_maximum(oracle::star(4), CandidateKind::club(2));
  CHECK(star.size() == 5);
  CHECK(star.certified);

  auto p4 = brute_force_maximum(oracle::path(4), CandidateKind::club(2));
  CHECK(p4.size() == 3);
  CHECK(p4.members == VertexSet{0, 1, 2}); // lexicographically smallest

  CHECK(brute_force_maximum(oracle::cycle(5), CandidateKind::plex(2)).size() == 3);

  CHECK_THROWS_AS(brute_force_maximum(generate_random_graph(26, 0.1, 1), CandidateKind::clique()),
                  ContractError);
  CHECK(brute_force_maximum(Graph{}, CandidateKind::clique()).size() == 0);
}

TEST_CASE("brute force matches subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = generate_random_graph(9, 0.35, seed);
    CHECK(brute_force_maximum(g, CandidateKind::clique()).size() ==
          oracle::max_subset_size(g, [&](const VertexSet &s) { return oracle::clique_oracle(g, s); }));
    for (std::size_t s = 2; s <= 3; ++s) {
      CHECK(brute_force_maximum(g, CandidateKind::club(s)).size() ==
            oracle::max_subset_size(g, [&](const VertexSet &x) { return oracle::club_oracle(g, x, s); }));
      CHECK(brute_force_maximum(g, CandidateKind::plex(s)).size() ==
            oracle::max_subset_size(g, [&](const VertexSet &x) { return oracle::plex_oracle(g, x, s); }));
    }
  }
}

TEST_CASE("delete_to_target examples") {
  auto p5 = oracle::path(5);
  auto two = delete_to_target(p5, CandidateKind::club(2), 2);
  REQUIRE(two.status == DeletionResult::Status::Found);
  CHECK(two.deleted.size() <= 2);
  CHECK(is_s_club(p5, without(5, two.deleted), 2));

  CHECK(delete_to_target(p5, CandidateKind::club(2), 1).status == DeletionResult::Status::None);

  auto k4 = oracle::complete(4);
  auto zero = delete_to_target(k4, CandidateKind::clique(), 0);
  CHECK(zero.status == DeletionResult::Status::Found);
  CHECK(zero.deleted.empty());

  auto plex = delete_to_target(oracle::cycle(5), CandidateKind::plex(2), 2);
  REQUIRE(plex.status == DeletionResult::Status::Found);
  CHECK(is_s_plex(oracle::cycle(5), without(5, plex.deleted), 2));
  CHECK(delete_to_target(oracle::cycle(5), CandidateKind::plex(2), 1).status ==
        DeletionResult::Status::None);
}

TEST_CASE("disconnected plex branching") {
  // Two triangles: every vertex misses 4 vertices (itself included), fine for s = 4, but
  // the set is disconnected, so three deletions are needed.
  auto g = oracle::disjoint_union(oracle::complete(3), oracle::complete(3));
  CHECK(satisfies_plex_degree_condition(g, VertexSet{0, 1, 2, 3, 4, 5}, 4));
  CHECK(delete_to_target(g, CandidateKind::plex(4), 2).status == DeletionResult::Status::None);
  auto three = delete_to_target(g, CandidateKind::plex(4), 3);
  REQUIRE(three.status == DeletionResult::Status::Found);
  CHECK(is_s_plex(g, without(6, three.deleted), 4));
}

TEST_CASE("expired deadline is reported distinctly") {
  auto g = generate_random_graph(40, 0.5, 1);
  auto r = delete_to_target(g, CandidateKind::club(2), 30, Deadline::after(0.0));
  CHECK(r.status == DeletionResult::Status::TimedOut);
  auto sol = maximum_via_deletion(g, CandidateKind::clique(), 1, Deadline::after(0.0));
  CHECK(sol.status == SolveStatus::TimedOut);
  CHECK(sol.stats.timed_out);
}

TEST_CASE("maximum_via_deletion examples") {
  for (auto kind : {CandidateKind::clique(), CandidateKind::club(2), CandidateKind::plex(2)})
    CHECK(maximum_via_deletion(oracle::complete(4), kind, 1).size() == 4);

  auto p4 = maximum_via_deletion(oracle::path(4), CandidateKind::club(2), 1);
  CHECK(p4.status == SolveStatus::Optimal);
  CHECK(p4.size() == 3);
  CHECK(p4.certified);

  auto below = maximum_via_deletion(oracle::path(4), CandidateKind::club(2), 4);
  CHECK(below.status == SolveStatus::BelowBound);
  CHECK(below.members.empty());
}

TEST_CASE("deletion duality") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto g = generate_random_graph(9, 0.4, seed);
    const std::size_t n = g.vertex_count();
    for (auto kind : {CandidateKind::clique(), CandidateKind::club(2), CandidateKind::club(3),
                      CandidateKind::plex(2), CandidateKind::plex(3)}) {
      auto k = maximum_via_deletion(g, kind, 1).size();
      CHECK(delete_to_target(g, kind, n - k).status == DeletionResult::Status::Found);
      if (k < n)
        CHECK(delete_to_target(g, kind, n - k - 1).status == DeletionResult::Status::None);
    }
  }
}

TEST_CASE("variant configuration") {
  CHECK_THROWS_AS(validate_config(CandidateKind::club(2), config(Variant::Hint, 2)), ContractError);
  CHECK_THROWS_AS(validate_config(CandidateKind::club(3), config(Variant::Full, 2)), ContractError);
  CHECK_NOTHROW(validate_config(CandidateKind::plex(3), config(Variant::Full, 2)));
  CHECK_NOTHROW(validate_config(CandidateKind::plex(3), config(Variant::Full, 3)));
  CHECK(parse_variant("notk") == Variant::NoTK);
  CHECK(to_string(Variant::Hint) == "hint");
  CHECK_THROWS(parse_variant("fast"));
}

TEST_CASE("turing kernel examples") {
  auto p4 = oracle::path(4);
  auto sol = turing_kernel_solve(p4, CandidateKind::club(2), config(Variant::Full, 2));
  CHECK(sol.size() == 3);
  CHECK(sol.certified);
  CHECK(sol.stats.max_core_size <= 3);
  CHECK(sol.stats.degeneracy == std::optional<std::size_t>{2});

  auto k5k3 = oracle::disjoint_union(oracle::complete(5), oracle::complete(3));
  for (auto v : {Variant::NoTK, Variant::Full, Variant::Default}) {
    CHECK(turing_kernel_solve(k5k3, CandidateKind::plex(2), config(v, 2)).size() == 5);
    CHECK(turing_kernel_solve(k5k3, CandidateKind::plex(3), config(v, 2)).size() == 5);
  }
  CHECK(turing_kernel_solve(k5k3, CandidateKind::plex(2), config(Variant::Hint, 2, 5)).size() == 5);

  auto g = generate_random_graph(10, 0.4, 1);
  auto expected = brute_force_maximum(g, CandidateKind::club(2)).size();
  for (auto v : {Variant::NoTK, Variant::Full, Variant::Default})
    CHECK(turing_kernel_solve(g, CandidateKind::club(2), config(v, 2)).size() == expected);
  CHECK(turing_kernel_solve(g, CandidateKind::club(2), config(Variant::Hint, 2, expected)).size() ==
        expected);
}

TEST_CASE("hint above the optimum is reported, not answered wrongly") {
  auto sol = turing_kernel_solve(oracle::path(4), CandidateKind::club(2), config(Variant::Hint, 2, 4));
  CHECK(sol.status == SolveStatus::BelowBound);
  CHECK(sol.members.empty());
}

TEST_CASE("default variant skips small cores") {
  // K6 next to a P4: once a 6-clique is known, the remaining K6 cores are too small.
  auto g = oracle::disjoint_union(oracle::complete(6), oracle::path(4));
  auto full = turing_kernel_solve(g, CandidateKind::clique(), config(Variant::Full, 1));
  auto def = turing_kernel_solve(g, CandidateKind::clique(), config(Variant::Default, 1));
  CHECK(full.size() == 6);
  CHECK(def.size() == 6);
  CHECK(def.stats.oracle_calls < full.stats.oracle_calls);
}

TEST_CASE("small plex fallback") {
  CHECK(small_plex_fallback(oracle::path(2), 2).size() == 2);
  CHECK(small_plex_fallback(generate_random_graph(12, 0.3, 4), 2).size() == 2);
  CHECK(small_plex_fallback(oracle::path(4), 3).size() == 4);
  CHECK(small_plex_fallback(oracle::complete(4), 1).size() == 0);
  auto edgeless = Graph::from_edges(3, {});
  CHECK(small_plex_fallback(edgeless, 2).size() == 1);
}

TEST_CASE("variants agree with brute force on small graphs") {
  struct Case {
    CandidateKind kind;
    std::size_t x;
  };
  const Case cases[] = {{CandidateKind::clique(), 1}, {CandidateKind::club(2), 2},
                        {CandidateKind::club(3), 3},  {CandidateKind::plex(2), 2},
                        {CandidateKind::plex(3), 3},  {CandidateKind::plex(3), 2}};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    std::size_t n = 5 + seed % 8;
    double p = 0.2 + 0.2 * static_cast<double>(seed % 3);
    auto g = generate_random_graph(n, p, seed * 7919);
    for (const auto &c : cases) {
      auto expected = brute_force_maximum(g, c.kind).size();
      for (auto v : {Variant::NoTK, Variant::Full, Variant::Default, Variant::Hint}) {
        auto sol = turing_kernel_solve(g, c.kind, config(v, c.x, expected));
        CHECK(sol.size() == expected);
        CHECK(sol.certified);
        CHECK(satisfies(g, sol.members, c.kind));
        if (v != Variant::NoTK && sol.stats.degeneracy)
          CHECK(sol.stats.max_core_size <= *sol.stats.degeneracy + 1);
      }
    }
  }
}
