#pragma once

#include "clubplex/graph.hpp"

#include <string>
#include <vector>

namespace clubplex {

/// A vertex elimination order witnessing the x-degeneracy of a graph.
///
/// `peel_sizes[i]` is the size of the x-th neighborhood of `order[i]` in the
/// subgraph induced by `order[i..n)`; `degeneracy` is their maximum.
struct XOrdering {
  std::size_t x = 1;
  std::vector<Vertex> order;
  std::size_t degeneracy = 0;
  std::vector<std::size_t> peel_sizes;

  /// positions()[v] is the index of v in `order`.
  std::vector<std::size_t> positions() const;
};

/// Min-x-neighborhood peeling. Ties go to the smallest vertex id. After each
/// deletion only vertices within distance x of the deleted vertex are
/// re-measured; the result is identical to the reference routine.
XOrdering x_degeneracy_ordering(const Graph &g, std::size_t x);

/// Same peeling, but every remaining vertex is re-measured each round.
/// O(n^2 m); kept as the equivalence baseline for the incremental routine.
XOrdering x_degeneracy_ordering_reference(const Graph &g, std::size_t x);

/// Q_x[v]: v together with the vertices within distance x of v in the
/// subgraph induced by v and everything after it in `ordering`. Sorted.
VertexSet core(const Graph &g, const XOrdering &ordering, Vertex v);

struct OrderingCheck {
  bool valid = true;
  std::string violation;
};

/// Recomputes peel sizes from scratch and checks every XOrdering invariant.
OrderingCheck verify_ordering(const Graph &g, const XOrdering &ordering);

} // namespace clubplex
