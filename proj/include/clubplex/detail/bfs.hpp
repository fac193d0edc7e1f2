#pragma once

#include "clubplex/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace clubplex::detail {

/// Reusable depth-bounded BFS over the subgraph induced by an `alive`
/// predicate. Visit stamps avoid clearing per call.
class BoundedBfs {
public:
  explicit BoundedBfs(std::size_t n) : stamp_(n, 0), depth_(n, 0) {}

  /// Calls `visit(u)` for every alive u != source with dist(source, u) <=
  /// radius in the alive subgraph. The source must be alive.
  template <class Alive, class Visit>
  void run(const Graph &g, const Alive &alive, Vertex source, std::size_t radius,
           Visit &&visit) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    queue_.clear();
    queue_.push_back(source);
    stamp_[source] = epoch_;
    depth_[source] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex u = queue_[head];
      if (depth_[u] == radius)
        continue;
      for (Vertex w : g.neighbors(u)) {
        if (stamp_[w] == epoch_ || !alive(w))
          continue;
        stamp_[w] = epoch_;
        depth_[w] = depth_[u] + 1;
        queue_.push_back(w);
        visit(w);
      }
    }
  }

  template <class Alive>
  std::size_t count(const Graph &g, const Alive &alive, Vertex source, std::size_t radius) {
    std::size_t total = 0;
    run(g, alive, source, radius, [&](Vertex) { ++total; });
    return total;
  }

private:
  std::vector<std::uint32_t> stamp_;
  std::vector<std::size_t> depth_;
  std::vector<Vertex> queue_;
  std::uint32_t epoch_ = 0;
};

} // namespace clubplex::detail
