#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace clubplex {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids interpreted against some graph.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Sorts and deduplicates `set` in place and returns it.
VertexSet normalized(VertexSet set);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted. Optional labels keep the tokens a graph was
/// parsed from so that results can be reported in the caller's vocabulary.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Self-loops and duplicate edges are
  /// dropped; an endpoint outside [0, n) throws ContractError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges {u, v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Original token of `v`, or its decimal id when the graph is unlabeled.
  std::string label(Vertex v) const;
  const std::vector<std::string> &labels() const noexcept { return labels_; }

  /// Throws ContractError unless `set` is sorted, unique and in range.
  void check_vertex_set(std::span<const Vertex> set) const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

enum class GraphFormat { EdgeList, Dimacs };

GraphFormat parse_graph_format(const std::string &name);
std::string to_string(GraphFormat format);

/// Whitespace-separated token pairs; '%' and '#' start comment lines.
/// Tokens are remapped to 0..n-1 in first-appearance order.
Graph parse_edge_list(std::istream &in);
Graph parse_edge_list(const std::string &text);

/// DIMACS "p edge n m" / "e u v" format with 1-based ids. A mismatch
/// between the declared and actual edge count is appended to `warnings`
/// instead of failing.
Graph parse_dimacs(std::istream &in, std::vector<std::string> *warnings = nullptr);
Graph parse_dimacs(const std::string &text, std::vector<std::string> *warnings = nullptr);

Graph read_graph_file(const std::string &path, GraphFormat format,
                      std::vector<std::string> *warnings = nullptr);

/// Edge-list serialization with "# n" and "# m" header comments. Vertices are
/// written by label.
void write_edge_list(const Graph &g, std::ostream &out);

struct Subgraph {
  Graph graph;
  /// mapping[new_id] is the vertex id in the host graph.
  VertexSet mapping;
};

/// Subgraph induced by `set` (sorted, unique). Labels are carried over.
Subgraph induced_subgraph(const Graph &g, std::span<const Vertex> set);

/// Vertices u != v with dist(u, v) <= radius, sorted.
VertexSet bounded_neighborhood(const Graph &g, Vertex v, std::size_t radius);

/// Single-source BFS distances; std::nullopt marks unreachable vertices.
std::vector<std::optional<std::size_t>> distances_from(const Graph &g, Vertex source);

} // namespace clubplex
