#pragma once

#include "clubplex/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clubplex {

enum class Formulation { Plex, TwoClub, ThreeClub };

std::string to_string(Formulation f);
Formulation parse_formulation(const std::string &name);

enum class VarType { Binary, Integer, Continuous };

/// What a variable stands for: x_v per vertex, the size variable y, or z_e
/// per edge. `index` is the vertex or edge index.
enum class VarRole { Vertex, Size, Edge };

struct Variable {
  std::string name;
  VarType type = VarType::Binary;
  std::int64_t lower = 0;
  std::int64_t upper = 1;
  VarRole role = VarRole::Vertex;
  std::size_t index = 0;

  friend bool operator==(const Variable &, const Variable &) = default;
};

struct Term {
  std::size_t var;
  std::int64_t coef;

  friend bool operator==(const Term &, const Term &) = default;
};

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Relation relation = Relation::LessEqual;
  std::int64_t rhs = 0;

  friend bool operator==(const Constraint &, const Constraint &) = default;
};

/// Maximization model with integer coefficients.
struct IlpModel {
  Formulation formulation = Formulation::Plex;
  /// s for the plex formulation; 2 or 3 for the club formulations.
  std::size_t s = 2;
  std::size_t vertex_count = 0;
  /// edges[j] are the endpoints of z_j (3-club only), lexicographic.
  std::vector<Edge> edges;

  std::vector<Variable> variables;
  std::vector<Term> objective;
  std::vector<Constraint> constraints;

  std::size_t nonzeros() const;
  std::optional<std::size_t> find_variable(const std::string &name) const;

  friend bool operator==(const IlpModel &, const IlpModel &) = default;
};

/// x_v binary, y in [0, n], y = sum x_v, and per vertex
/// n(1 - x_v) + sum_{u in N(v)} x_u >= y - s. Connectivity is not encoded.
IlpModel build_plex_model(const Graph &g, std::size_t s);

/// x_u + x_v <= 1 for host distance > 2 (or unreachable) and
/// x_u + x_v <= 1 + sum of common neighbors for distance exactly 2.
IlpModel build_2club_model(const Graph &g);

/// Neighborhood formulation: forbidden pairs beyond distance 3, and for
/// distance 2 or 3 the pair needs a selected common neighbor or a selected
/// edge z_e bridging N(u) \ N(v) and N(v) \ N(u). z_e <= x_a, z_e <= x_b.
IlpModel build_3club_model(const Graph &g);

/// LP-format text. Deterministic: constraints in construction order, terms
/// in construction order, long expressions wrapped every eight terms.
void write_lp(const IlpModel &model, std::ostream &out);
std::string write_lp(const IlpModel &model);

/// Reads the dialect emitted by write_lp back into a model.
IlpModel read_lp(std::istream &in);
IlpModel read_lp(const std::string &text);

struct Evaluation {
  bool feasible = false;
  std::int64_t objective = 0;
  /// Name of the first violated constraint, if any.
  std::string violated;
};

/// Sets x_v = 1 exactly for v in `selected`, y = |selected| and
/// z_e = min(x_a, x_b), then checks every constraint.
Evaluation evaluate_assignment(const IlpModel &model, std::span<const Vertex> selected);

} // namespace clubplex
