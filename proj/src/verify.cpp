#include "clubplex/verify.hpp"

#include "clubplex/errors.hpp"

#include <algorithm>
#include <deque>

namespace clubplex {

std::string to_string(Problem problem) {
  switch (problem) {
  case Problem::Clique:
    return "clique";
  case Problem::Club:
    return "club";
  case Problem::Plex:
    return "plex";
  }
  return "?";
}

Problem parse_problem(const std::string &name) {
  if (name == "clique")
    return Problem::Clique;
  if (name == "club")
    return Problem::Club;
  if (name == "plex")
    return Problem::Plex;
  throw ContractError("unknown problem '" + name + "'");
}

namespace {

void require_s(std::size_t s) {
  if (s < 1)
    throw ContractError("s must be at least 1");
}

// Eccentricity bound check inside G[set]: every member reaches all others
// within `limit` hops. Straightforward BFS per member.
bool induced_diameter_at_most(const Graph &g, std::span<const Vertex> set, std::size_t limit) {
  if (set.size() <= 1)
    return true;
  auto local = induced_subgraph(g, set).graph;
  for (Vertex src = 0; src < local.vertex_count(); ++src) {
    auto dist = distances_from(local, src);
    for (const auto &d : dist)
      if (!d || *d > limit)
        return false;
  }
  return true;
}

bool induced_connected(const Graph &g, std::span<const Vertex> set) {
  if (set.size() <= 1)
    return true;
  auto local = induced_subgraph(g, set).graph;
  auto dist = distances_from(local, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto &d) { return d.has_value(); });
}

} // namespace

bool is_clique(const Graph &g, std::span<const Vertex> set) {
  g.check_vertex_set(set);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!g.has_edge(set[i], set[j]))
        return false;
  return true;
}

bool is_s_club(const Graph &g, std::span<const Vertex> set, std::size_t s) {
  require_s(s);
  g.check_vertex_set(set);
  return induced_diameter_at_most(g, set, s);
}

bool satisfies_plex_degree_condition(const Graph &g, std::span<const Vertex> set,
                                     std::size_t s) {
  require_s(s);
  g.check_vertex_set(set);
  for (Vertex v : set) {
    std::size_t adjacent = 0;
    for (Vertex u : set)
      if (g.has_edge(v, u))
        ++adjacent;
    if (set.size() - adjacent > s)
      return false;
  }
  return true;
}

bool is_s_plex(const Graph &g, std::span<const Vertex> set, std::size_t s) {
  return satisfies_plex_degree_condition(g, set, s) && induced_connected(g, set);
}

bool satisfies(const Graph &g, std::span<const Vertex> set, CandidateKind kind) {
  switch (kind.problem) {
  case Problem::Clique:
    return is_clique(g, set);
  case Problem::Club:
    return is_s_club(g, set, kind.s);
  case Problem::Plex:
    return is_s_plex(g, set, kind.s);
  }
  return false;
}

bool plex_diameter_witness(const Graph &g, std::span<const Vertex> set, std::size_t s) {
  require_s(s);
  if (set.size() + 1 < 2 * s)
    throw ContractError("plex diameter witness needs at least 2s-1 vertices");
  if (!is_s_plex(g, set, s))
    throw ContractError("plex diameter witness called on a set that is not an s-plex");
  return induced_diameter_at_most(g, set, 2);
}

} // namespace clubplex
