#pragma once

#include "clubplex/graph.hpp"

#include <span>
#include <string>

namespace clubplex {

enum class Problem { Clique, Club, Plex };

/// Which cohesive-subgraph predicate a set is measured against. For s = 1
/// clubs and plexes coincide with cliques.
struct CandidateKind {
  Problem problem = Problem::Clique;
  std::size_t s = 1;

  static CandidateKind clique() { return {Problem::Clique, 1}; }
  static CandidateKind club(std::size_t s) { return {Problem::Club, s}; }
  static CandidateKind plex(std::size_t s) { return {Problem::Plex, s}; }

  friend bool operator==(const CandidateKind &, const CandidateKind &) = default;
};

std::string to_string(Problem problem);
Problem parse_problem(const std::string &name);

// All predicates expect `set` sorted, duplicate-free and in range for `g`
// (ContractError otherwise). The empty set and singletons satisfy each of them.

bool is_clique(const Graph &g, std::span<const Vertex> set);

/// Diameter of G[set] is at most s, measured inside the induced subgraph.
bool is_s_club(const Graph &g, std::span<const Vertex> set, std::size_t s);

/// G[set] is connected and |set \ N(v)| <= s for every v in set. The
/// difference counts v itself.
bool is_s_plex(const Graph &g, std::span<const Vertex> set, std::size_t s);

/// The degree half of the plex definition only, without connectivity.
bool satisfies_plex_degree_condition(const Graph &g, std::span<const Vertex> set, std::size_t s);

/// Dispatches on `kind`.
bool satisfies(const Graph &g, std::span<const Vertex> set, CandidateKind kind);

/// Checks that an s-plex with at least 2s-1 vertices has induced diameter at
/// most 2. Always true when the precondition holds; a ContractError reports a
/// precondition violation.
bool plex_diameter_witness(const Graph &g, std::span<const Vertex> set, std::size_t s);

} // namespace clubplex
