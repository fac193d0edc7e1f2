#pragma once

#include "clubplex/graph.hpp"

#include <cstdint>

namespace clubplex {

/// Erdős–Rényi G(n, p). Every pair {u, v} with u < v is kept independently
/// with probability p; the result is a pure function of (n, p, seed).
Graph generate_random_graph(std::size_t n, double p, std::uint64_t seed);

struct PlantedCoreParams {
  std::size_t n = 100;
  /// Degree cap for the sparse background; each vertex tries to attach to
  /// this many earlier vertices that still have spare degree.
  std::size_t background_degree = 3;
  std::size_t core_size = 8;
  /// Edge probability inside the planted core (1.0 plants a clique).
  double core_density = 1.0;
  std::uint64_t seed = 1;
};

/// Sparse bounded-degree background with a dense core planted on randomly
/// chosen vertices. Keeps the x-degeneracy small while the optimum sits in
/// the core, which is the regime where the Turing kernel pays off.
Graph generate_planted_core(const PlantedCoreParams &params);

} // namespace clubplex
