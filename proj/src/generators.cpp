#include "clubplex/generators.hpp"

#include "clubplex/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace clubplex {

Graph generate_random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ContractError("edge probability must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < p)
        edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph generate_planted_core(const PlantedCoreParams &params) {
  if (params.core_size > params.n)
    throw ContractError("core larger than graph");
  if (!(params.core_density >= 0.0 && params.core_density <= 1.0))
    throw ContractError("core density must lie in [0, 1]");

  std::mt19937_64 rng(params.seed);
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(params.n, 0);

  for (Vertex v = 1; v < params.n; ++v) {
    for (std::size_t attempt = 0; attempt < params.background_degree; ++attempt) {
      if (degree[v] >= params.background_degree)
        break;
      std::uniform_int_distribution<Vertex> pick(0, v - 1);
      Vertex u = pick(rng);
      if (degree[u] >= params.background_degree)
        continue;
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
  }

  std::vector<Vertex> perm(params.n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  perm.resize(params.core_size);
  std::sort(perm.begin(), perm.end());

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (coin(rng) < params.core_density)
        edges.emplace_back(perm[i], perm[j]);

  return Graph::from_edges(params.n, edges);
}

} // namespace clubplex
