#include "clubplex/ordering.hpp"

#include "clubplex/detail/bfs.hpp"
#include "clubplex/errors.hpp"

#include <algorithm>
#include <set>

namespace clubplex {

std::vector<std::size_t> XOrdering::positions() const {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    pos[order[i]] = i;
  return pos;
}

namespace {

void require_radius(std::size_t x) {
  if (x < 1)
    throw ContractError("x-degeneracy radius must be at least 1");
}

void finish(XOrdering &result) {
  result.degeneracy = result.peel_sizes.empty()
                          ? 0
                          : *std::max_element(result.peel_sizes.begin(), result.peel_sizes.end());
}

} // namespace

XOrdering x_degeneracy_ordering(const Graph &g, std::size_t x) {
  require_radius(x);
  const std::size_t n = g.vertex_count();
  XOrdering result;
  result.x = x;
  result.order.reserve(n);
  result.peel_sizes.reserve(n);

  std::vector<char> alive(n, 1);
  auto is_alive = [&](Vertex v) { return alive[v] != 0; };
  detail::BoundedBfs bfs(n);

  std::vector<std::size_t> size(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    size[v] = bfs.count(g, is_alive, v, x);
    queue.emplace(size[v], v);
  }

  std::vector<Vertex> affected;
  while (!queue.empty()) {
    auto [peel, u] = *queue.begin();
    queue.erase(queue.begin());
    result.order.push_back(u);
    result.peel_sizes.push_back(peel);

    affected.clear();
    bfs.run(g, is_alive, u, x, [&](Vertex w) { affected.push_back(w); });
    alive[u] = 0;
    for (Vertex w : affected) {
      std::size_t updated = bfs.count(g, is_alive, w, x);
      if (updated == size[w])
        continue;
      queue.erase({size[w], w});
      size[w] = updated;
      queue.emplace(updated, w);
    }
  }
  finish(result);
  return result;
}

XOrdering x_degeneracy_ordering_reference(const Graph &g, std::size_t x) {
  require_radius(x);
  const std::size_t n = g.vertex_count();
  XOrdering result;
  result.x = x;

  std::vector<char> alive(n, 1);
  auto is_alive = [&](Vertex v) { return alive[v] != 0; };
  detail::BoundedBfs bfs(n);

  for (std::size_t round = 0; round < n; ++round) {
    Vertex best = 0;
    std::size_t best_size = n;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v])
        continue;
      std::size_t s = bfs.count(g, is_alive, v, x);
      if (!found || s < best_size) {
        best = v;
        best_size = s;
        found = true;
      }
    }
    result.order.push_back(best);
    result.peel_sizes.push_back(best_size);
    alive[best] = 0;
  }
  finish(result);
  return result;
}

VertexSet core(const Graph &g, const XOrdering &ordering, Vertex v) {
  if (v >= g.vertex_count() || ordering.order.size() != g.vertex_count())
    throw ContractError("ordering does not match graph");
  auto pos = ordering.positions();
  detail::BoundedBfs bfs(g.vertex_count());
  VertexSet out{v};
  bfs.run(
      g, [&](Vertex w) { return pos[w] > pos[v]; }, v, ordering.x,
      [&](Vertex w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

OrderingCheck verify_ordering(const Graph &g, const XOrdering &ordering) {
  const std::size_t n = g.vertex_count();
  auto fail = [](std::string why) { return OrderingCheck{false, std::move(why)}; };

  if (ordering.x < 1)
    return fail("radius x must be at least 1");
  if (ordering.order.size() != n)
    return fail("order has " + std::to_string(ordering.order.size()) + " entries, graph has " +
                std::to_string(n) + " vertices");
  std::vector<char> seen(n, 0);
  for (Vertex v : ordering.order) {
    if (v >= n)
      return fail("vertex " + std::to_string(v) + " out of range");
    if (seen[v])
      return fail("vertex " + std::to_string(v) + " appears twice");
    seen[v] = 1;
  }
  if (ordering.peel_sizes.size() != n)
    return fail("peel_sizes length differs from vertex count");

  auto pos = ordering.positions();
  detail::BoundedBfs bfs(n);
  std::size_t max_peel = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = ordering.order[i];
    std::size_t actual = bfs.count(
        g, [&](Vertex w) { return pos[w] > i; }, v, ordering.x);
    if (actual != ordering.peel_sizes[i])
      return fail("position " + std::to_string(i) + ": recorded peel size " +
                  std::to_string(ordering.peel_sizes[i]) + ", actual " + std::to_string(actual));
    max_peel = std::max(max_peel, actual);
  }
  if (max_peel != ordering.degeneracy)
    return fail("claimed d_x = " + std::to_string(ordering.degeneracy) +
                ", maximum peel size is " + std::to_string(max_peel));
  return {};
}

} // namespace clubplex
