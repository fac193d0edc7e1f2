#include "clubplex/graph.hpp"

#include "clubplex/errors.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace clubplex {

VertexSet normalized(VertexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n)
    throw ContractError("label count does not match vertex count");

  Graph g;
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw ContractError("edge endpoint out of range");
    if (u == v)
      continue;
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto &list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += list.size();
  }
  g.edge_count_ = degree_sum / 2;
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto &list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

void Graph::check_vertex_set(std::span<const Vertex> set) const {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= vertex_count())
      throw ContractError("vertex " + std::to_string(set[i]) + " out of range");
    if (i > 0 && set[i - 1] >= set[i])
      throw ContractError("vertex set must be sorted and duplicate-free");
  }
}

GraphFormat parse_graph_format(const std::string &name) {
  if (name == "edgelist")
    return GraphFormat::EdgeList;
  if (name == "dimacs")
    return GraphFormat::Dimacs;
  throw ContractError("unknown graph format '" + name + "'");
}

std::string to_string(GraphFormat format) {
  return format == GraphFormat::EdgeList ? "edgelist" : "dimacs";
}

namespace {

std::vector<std::string> split_tokens(const std::string &line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string tok; ss >> tok;)
    tokens.push_back(std::move(tok));
  return tokens;
}

std::size_t parse_count(const std::string &tok, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    if (!tok.empty() && tok[0] == '-')
      throw std::invalid_argument("negative");
    value = std::stoull(tok, &pos);
  } catch (const std::exception &) {
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  return static_cast<std::size_t>(value);
}

} // namespace

Graph parse_edge_list(std::istream &in) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  auto intern = [&](const std::string &tok) {
    auto [it, inserted] = ids.try_emplace(tok, static_cast<Vertex>(labels.size()));
    if (inserted)
      labels.push_back(tok);
    return it->second;
  };

  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%' || line[first] == '#')
      continue;
    auto tokens = split_tokens(line);
    if (tokens.size() != 2)
      throw ParseError(lineno, "expected 2 tokens, found " + std::to_string(tokens.size()));
    Vertex u = intern(tokens[0]);
    Vertex v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph parse_edge_list(const std::string &text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph parse_dimacs(std::istream &in, std::vector<std::string> *warnings) {
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::vector<Edge> edges;

  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c")
      continue;
    if (tokens[0] == "p") {
      if (n)
        throw ParseError(lineno, "duplicate 'p' line");
      if (tokens.size() != 4)
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      n = parse_count(tokens[2], lineno);
      declared_m = parse_count(tokens[3], lineno);
    } else if (tokens[0] == "e") {
      if (!n)
        throw ParseError(lineno, "edge line before 'p' line");
      if (tokens.size() != 3)
        throw ParseError(lineno, "expected 'e <u> <v>'");
      auto u = parse_count(tokens[1], lineno);
      auto v = parse_count(tokens[2], lineno);
      if (u < 1 || u > *n || v < 1 || v > *n)
        throw ParseError(lineno, "vertex id outside [1, " + std::to_string(*n) + "]");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError(lineno, "unknown line type '" + tokens[0] + "'");
    }
  }
  if (!n)
    throw ParseError(0, "missing 'p' line");
  if (warnings && edges.size() != declared_m)
    warnings->push_back("declared " + std::to_string(declared_m) + " edges, found " +
                        std::to_string(edges.size()));

  std::vector<std::string> labels(*n);
  for (std::size_t i = 0; i < *n; ++i)
    labels[i] = std::to_string(i + 1);
  return Graph::from_edges(*n, edges, std::move(labels));
}

Graph parse_dimacs(const std::string &text, std::vector<std::string> *warnings) {
  std::istringstream in(text);
  return parse_dimacs(in, warnings);
}

Graph read_graph_file(const std::string &path, GraphFormat format,
                      std::vector<std::string> *warnings) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  return format == GraphFormat::EdgeList ? parse_edge_list(in) : parse_dimacs(in, warnings);
}

void write_edge_list(const Graph &g, std::ostream &out) {
  out << "# n " << g.vertex_count() << '\n';
  out << "# m " << g.edge_count() << '\n';
  for (auto [u, v] : g.edges())
    out << g.label(u) << ' ' << g.label(v) << '\n';
}

Subgraph induced_subgraph(const Graph &g, std::span<const Vertex> set) {
  g.check_vertex_set(set);

  std::vector<Vertex> new_id(g.vertex_count(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < set.size(); ++i)
    new_id[set[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (Vertex u : set)
    for (Vertex w : g.neighbors(u))
      if (u < w && new_id[w] != static_cast<Vertex>(-1))
        edges.emplace_back(new_id[u], new_id[w]);

  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex u : set)
      labels.push_back(g.label(u));

  return {Graph::from_edges(set.size(), edges, std::move(labels)),
          VertexSet(set.begin(), set.end())};
}

VertexSet bounded_neighborhood(const Graph &g, Vertex v, std::size_t radius) {
  if (v >= g.vertex_count())
    throw ContractError("vertex out of range");
  if (radius < 1)
    throw ContractError("radius must be at least 1");

  std::vector<std::size_t> depth(g.vertex_count(), 0);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue{v};
  seen[v] = true;
  VertexSet out;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (depth[u] == radius)
      continue;
    for (Vertex w : g.neighbors(u)) {
      if (seen[w])
        continue;
      seen[w] = true;
      depth[w] = depth[u] + 1;
      out.push_back(w);
      queue.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph &g, Vertex source) {
  if (source >= g.vertex_count())
    throw ContractError("vertex out of range");
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w])
        continue;
      dist[w] = *dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

} // namespace clubplex
