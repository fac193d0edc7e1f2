#include "clubplex/ilp.hpp"

#include "clubplex/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace clubplex {

std::string to_string(Formulation f) {
  switch (f) {
  case Formulation::Plex:
    return "plex";
  case Formulation::TwoClub:
    return "2club";
  case Formulation::ThreeClub:
    return "3club";
  }
  return "?";
}

Formulation parse_formulation(const std::string &name) {
  if (name == "plex")
    return Formulation::Plex;
  if (name == "2club")
    return Formulation::TwoClub;
  if (name == "3club")
    return Formulation::ThreeClub;
  throw ContractError("unknown formulation '" + name + "'");
}

std::size_t IlpModel::nonzeros() const {
  std::size_t total = 0;
  for (const auto &c : constraints)
    total += c.terms.size();
  return total;
}

std::optional<std::size_t> IlpModel::find_variable(const std::string &name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i].name == name)
      return i;
  return std::nullopt;
}

namespace {

std::string vertex_var(Vertex v) { return "x" + std::to_string(v); }
std::string edge_var(std::size_t j) { return "z" + std::to_string(j); }

void add_vertex_variables(IlpModel &model) {
  for (Vertex v = 0; v < model.vertex_count; ++v)
    model.variables.push_back({vertex_var(v), VarType::Binary, 0, 1, VarRole::Vertex, v});
}

void add_cardinality_objective(IlpModel &model) {
  for (Vertex v = 0; v < model.vertex_count; ++v)
    model.objective.push_back({v, 1});
}

// Host-graph distances truncated at `limit`; entries beyond the limit (or
// unreachable) are reported as limit + 1.
std::vector<std::vector<std::size_t>> truncated_distances(const Graph &g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, limit + 1));
  for (Vertex src = 0; src < n; ++src) {
    auto d = distances_from(g, src);
    for (Vertex t = 0; t < n; ++t)
      if (d[t] && *d[t] <= limit)
        dist[src][t] = *d[t];
  }
  return dist;
}

std::vector<Vertex> common_neighbors(const Graph &g, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string pair_name(const char *prefix, Vertex u, Vertex v) {
  return std::string(prefix) + "_" + std::to_string(u) + "_" + std::to_string(v);
}

} // namespace

IlpModel build_plex_model(const Graph &g, std::size_t s) {
  if (s < 1)
    throw ContractError("s must be at least 1");
  IlpModel model;
  model.formulation = Formulation::Plex;
  model.s = s;
  model.vertex_count = g.vertex_count();
  const auto n = static_cast<std::int64_t>(g.vertex_count());

  add_vertex_variables(model);
  const std::size_t y = model.variables.size();
  model.variables.push_back({"y", VarType::Integer, 0, n, VarRole::Size, 0});
  model.objective.push_back({y, 1});

  Constraint card{"card", {{y, 1}}, Relation::Equal, 0};
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    card.terms.push_back({v, -1});
  model.constraints.push_back(std::move(card));

  // n(1 - x_v) + sum x_u >= y - s  <=>  -n x_v + sum x_u - y >= -s - n
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Constraint c{"deg" + std::to_string(v), {{v, -n}}, Relation::GreaterEqual,
                 -static_cast<std::int64_t>(s) - n};
    for (Vertex u : g.neighbors(v))
      c.terms.push_back({u, 1});
    c.terms.push_back({y, -1});
    model.constraints.push_back(std::move(c));
  }
  return model;
}

IlpModel build_2club_model(const Graph &g) {
  IlpModel model;
  model.formulation = Formulation::TwoClub;
  model.s = 2;
  model.vertex_count = g.vertex_count();
  add_vertex_variables(model);
  add_cardinality_objective(model);

  auto dist = truncated_distances(g, 2);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (dist[u][v] > 2) {
        model.constraints.push_back({pair_name("far", u, v), {{u, 1}, {v, 1}}, Relation::LessEqual, 1});
      } else if (dist[u][v] == 2) {
        Constraint c{pair_name("near", u, v), {{u, 1}, {v, 1}}, Relation::LessEqual, 1};
        for (Vertex w : common_neighbors(g, u, v))
          c.terms.push_back({w, -1});
        model.constraints.push_back(std::move(c));
      }
    }
  }
  return model;
}

IlpModel build_3club_model(const Graph &g) {
  IlpModel model;
  model.formulation = Formulation::ThreeClub;
  model.s = 3;
  model.vertex_count = g.vertex_count();
  model.edges = g.edges();
  add_vertex_variables(model);
  const std::size_t z0 = model.variables.size();
  for (std::size_t j = 0; j < model.edges.size(); ++j)
    model.variables.push_back({edge_var(j), VarType::Continuous, 0, 1, VarRole::Edge, j});
  add_cardinality_objective(model);

  const std::size_t n = g.vertex_count();
  auto dist = truncated_distances(g, 3);
  std::vector<char> in_only_u(n), in_only_v(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist[u][v] > 3) {
        model.constraints.push_back({pair_name("far", u, v), {{u, 1}, {v, 1}}, Relation::LessEqual, 1});
        continue;
      }
      if (dist[u][v] < 2)
        continue;
      Constraint c{pair_name("near", u, v), {{u, 1}, {v, 1}}, Relation::LessEqual, 1};
      for (Vertex w : common_neighbors(g, u, v))
        c.terms.push_back({w, -1});

      std::fill(in_only_u.begin(), in_only_u.end(), 0);
      std::fill(in_only_v.begin(), in_only_v.end(), 0);
      for (Vertex p : g.neighbors(u))
        in_only_u[p] = 1;
      for (Vertex q : g.neighbors(v)) {
        if (in_only_u[q])
          in_only_u[q] = 0;
        else
          in_only_v[q] = 1;
      }
      for (std::size_t j = 0; j < model.edges.size(); ++j) {
        auto [a, b] = model.edges[j];
        if ((in_only_u[a] && in_only_v[b]) || (in_only_u[b] && in_only_v[a]))
          c.terms.push_back({z0 + j, -1});
      }
      model.constraints.push_back(std::move(c));
    }
  }
  for (std::size_t j = 0; j < model.edges.size(); ++j) {
    auto [a, b] = model.edges[j];
    model.constraints.push_back(
        {"za_" + std::to_string(j), {{z0 + j, 1}, {a, -1}}, Relation::LessEqual, 0});
    model.constraints.push_back(
        {"zb_" + std::to_string(j), {{z0 + j, 1}, {b, -1}}, Relation::LessEqual, 0});
  }
  return model;
}

namespace {

constexpr std::size_t kTermsPerLine = 8;

void write_expression(const IlpModel &model, const std::vector<Term> &terms, std::ostream &out) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0 && i % kTermsPerLine == 0)
      out << "\n  ";
    const auto &[var, coef] = terms[i];
    std::int64_t magnitude = coef < 0 ? -coef : coef;
    if (i == 0) {
      if (coef < 0)
        out << '-';
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    if (magnitude != 1)
      out << magnitude << ' ';
    out << model.variables[var].name;
  }
}

const char *relation_text(Relation r) {
  switch (r) {
  case Relation::LessEqual:
    return "<=";
  case Relation::Equal:
    return "=";
  case Relation::GreaterEqual:
    return ">=";
  }
  return "?";
}

} // namespace

void write_lp(const IlpModel &model, std::ostream &out) {
  out << "\\ clubplex " << to_string(model.formulation);
  if (model.formulation == Formulation::Plex)
    out << " s=" << model.s;
  out << " n=" << model.vertex_count << '\n';

  out << "Maximize\n obj: ";
  write_expression(model, model.objective, out);
  out << "\nSubject To\n";
  for (const auto &c : model.constraints) {
    out << ' ' << c.name << ": ";
    write_expression(model, c.terms, out);
    out << ' ' << relation_text(c.relation) << ' ' << c.rhs << '\n';
  }

  bool any_bounds = std::any_of(model.variables.begin(), model.variables.end(),
                                [](const Variable &v) { return v.type != VarType::Binary; });
  if (any_bounds) {
    out << "Bounds\n";
    for (const auto &v : model.variables)
      if (v.type != VarType::Binary)
        out << ' ' << v.lower << " <= " << v.name << " <= " << v.upper << '\n';
  }

  auto write_list = [&](const char *section, VarType type) {
    std::vector<const Variable *> vars;
    for (const auto &v : model.variables)
      if (v.type == type)
        vars.push_back(&v);
    if (vars.empty())
      return;
    out << section << '\n';
    for (std::size_t i = 0; i < vars.size(); ++i)
      out << (i % kTermsPerLine == 0 ? (i == 0 ? " " : "\n ") : " ") << vars[i]->name;
    out << '\n';
  };
  write_list("Generals", VarType::Integer);
  write_list("Binaries", VarType::Binary);
  out << "End\n";
}

std::string write_lp(const IlpModel &model) {
  std::ostringstream out;
  write_lp(model, out);
  return out.str();
}

namespace {

std::int64_t parse_int(const std::string &tok, std::size_t line) {
  try {
    std::size_t pos = 0;
    auto value = std::stoll(tok, &pos);
    if (pos == tok.size())
      return value;
  } catch (const std::exception &) {
  }
  throw ParseError(line, "expected an integer, got '" + tok + "'");
}

bool is_number(const std::string &tok) {
  return !tok.empty() &&
         std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Splits "-3", "-x0" style tokens so signs always stand alone.
std::vector<std::string> expression_tokens(const std::string &text) {
  std::istringstream ss(text);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) {
    if (tok.size() > 1 && (tok[0] == '-' || tok[0] == '+') && tok != "->") {
      out.push_back(tok.substr(0, 1));
      out.push_back(tok.substr(1));
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

class LpReader {
public:
  IlpModel read(std::istream &in) {
    enum class Section { None, Objective, Constraints, Bounds, Generals, Binaries, Done };
    Section section = Section::None;
    std::string pending;
    std::size_t pending_line = 0;

    auto flush = [&](Section where) {
      if (pending.empty())
        return;
      if (where == Section::Objective)
        read_objective(pending, pending_line);
      else
        read_constraint(pending, pending_line);
      pending.clear();
    };

    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
      if (!line.empty() && line[0] == '\\') {
        read_header(line, lineno);
        continue;
      }
      std::string trimmed = line;
      trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
      trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
      if (trimmed.empty())
        continue;

      Section next = section;
      if (trimmed == "Maximize")
        next = Section::Objective;
      else if (trimmed == "Subject To")
        next = Section::Constraints;
      else if (trimmed == "Bounds")
        next = Section::Bounds;
      else if (trimmed == "Generals")
        next = Section::Generals;
      else if (trimmed == "Binaries")
        next = Section::Binaries;
      else if (trimmed == "End")
        next = Section::Done;
      if (next != section) {
        flush(section);
        section = next;
        continue;
      }

      switch (section) {
      case Section::Objective:
      case Section::Constraints:
        if (trimmed.find(':') != std::string::npos) {
          flush(section);
          pending_line = lineno;
        }
        pending += ' ' + trimmed;
        break;
      case Section::Bounds:
        read_bound(trimmed, lineno);
        break;
      case Section::Generals:
      case Section::Binaries: {
        std::istringstream ss(trimmed);
        for (std::string name; ss >> name;)
          declare(name, section == Section::Generals ? VarType::Integer : VarType::Binary);
        break;
      }
      default:
        throw ParseError(lineno, "content outside of any section");
      }
    }
    flush(section);
    finish();
    return std::move(model_);
  }

private:
  void read_header(const std::string &line, std::size_t lineno) {
    std::istringstream ss(line.substr(1));
    std::string tag, formulation;
    ss >> tag >> formulation;
    if (tag != "clubplex")
      return;
    model_.formulation = parse_formulation(formulation);
    model_.s = model_.formulation == Formulation::ThreeClub ? 3 : 2;
    for (std::string kv; ss >> kv;) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw ParseError(lineno, "malformed header field '" + kv + "'");
      auto value = static_cast<std::size_t>(parse_int(kv.substr(eq + 1), lineno));
      if (kv.substr(0, eq) == "s")
        model_.s = value;
      else if (kv.substr(0, eq) == "n")
        model_.vertex_count = value;
    }
  }

  std::size_t var_index(const std::string &name) {
    auto [it, inserted] = index_.try_emplace(name, order_.size());
    if (inserted)
      order_.push_back(name);
    return it->second;
  }

  std::vector<Term> read_terms(const std::vector<std::string> &tokens, std::size_t begin,
                               std::size_t end, std::size_t line) {
    std::vector<Term> terms;
    std::int64_t sign = 1;
    std::int64_t coef = 1;
    for (std::size_t i = begin; i < end; ++i) {
      const auto &tok = tokens[i];
      if (tok == "+" || tok == "-") {
        sign = tok == "-" ? -1 : 1;
      } else if (is_number(tok)) {
        coef = parse_int(tok, line);
      } else {
        terms.push_back({var_index(tok), sign * coef});
        sign = 1;
        coef = 1;
      }
    }
    return terms;
  }

  void read_objective(const std::string &text, std::size_t line) {
    auto colon = text.find(':');
    auto tokens = expression_tokens(text.substr(colon + 1));
    model_.objective = read_terms(tokens, 0, tokens.size(), line);
  }

  void read_constraint(const std::string &text, std::size_t line) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
      throw ParseError(line, "constraint without a name");
    Constraint c;
    std::istringstream name(text.substr(0, colon));
    name >> c.name;
    auto tokens = expression_tokens(text.substr(colon + 1));
    std::size_t rel = 0;
    while (rel < tokens.size() && tokens[rel] != "<=" && tokens[rel] != ">=" && tokens[rel] != "=")
      ++rel;
    if (rel + 1 >= tokens.size())
      throw ParseError(line, "constraint '" + c.name + "' lacks a relation and right-hand side");
    c.terms = read_terms(tokens, 0, rel, line);
    c.relation = tokens[rel] == "<=" ? Relation::LessEqual
                 : tokens[rel] == ">=" ? Relation::GreaterEqual
                                       : Relation::Equal;
    std::int64_t sign = 1;
    std::size_t k = rel + 1;
    if (tokens[k] == "-" || tokens[k] == "+") {
      sign = tokens[k] == "-" ? -1 : 1;
      ++k;
    }
    if (k >= tokens.size())
      throw ParseError(line, "missing right-hand side");
    c.rhs = sign * parse_int(tokens[k], line);
    model_.constraints.push_back(std::move(c));
  }

  void read_bound(const std::string &text, std::size_t line) {
    auto tokens = expression_tokens(text);
    // lo <= name <= hi, with lo possibly split into sign + digits.
    std::vector<std::string> merged;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if ((tokens[i] == "-" || tokens[i] == "+") && i + 1 < tokens.size() && is_number(tokens[i + 1])) {
        merged.push_back(tokens[i] + tokens[i + 1]);
        ++i;
      } else {
        merged.push_back(tokens[i]);
      }
    }
    if (merged.size() != 5 || merged[1] != "<=" || merged[3] != "<=")
      throw ParseError(line, "expected 'lo <= var <= hi'");
    bounds_[merged[2]] = {parse_int(merged[0], line), parse_int(merged[4], line)};
    var_index(merged[2]);
  }

  void declare(const std::string &name, VarType type) {
    var_index(name);
    types_[name] = type;
  }

  void finish() {
    // Canonical variable order: x by index, then y, then z by index.
    auto rank = [](const std::string &name) -> std::pair<int, std::size_t> {
      if (name == "y")
        return {1, 0};
      std::size_t idx = name.size() > 1 && is_number(name.substr(1)) ? std::stoull(name.substr(1)) : 0;
      if (name[0] == 'x')
        return {0, idx};
      if (name[0] == 'z')
        return {2, idx};
      return {3, 0};
    };
    std::vector<std::string> names = order_;
    std::stable_sort(names.begin(), names.end(),
                     [&](const auto &a, const auto &b) { return rank(a) < rank(b); });
    std::vector<std::size_t> remap(order_.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      remap[index_.at(names[i])] = i;
      Variable v;
      v.name = names[i];
      auto r = rank(names[i]);
      v.role = r.first == 1 ? VarRole::Size : r.first == 2 ? VarRole::Edge : VarRole::Vertex;
      v.index = r.second;
      auto t = types_.find(names[i]);
      v.type = t != types_.end() ? t->second : VarType::Continuous;
      if (auto b = bounds_.find(names[i]); b != bounds_.end()) {
        v.lower = b->second.first;
        v.upper = b->second.second;
      }
      model_.variables.push_back(std::move(v));
    }
    for (auto &t : model_.objective)
      t.var = remap[t.var];
    for (auto &c : model_.constraints)
      for (auto &t : c.terms)
        t.var = remap[t.var];

    // Edge endpoints come back from the z_e <= x_a / z_e <= x_b links.
    std::size_t edge_vars = 0;
    for (const auto &v : model_.variables)
      if (v.role == VarRole::Edge)
        ++edge_vars;
    model_.edges.assign(edge_vars, Edge{0, 0});
    for (const auto &c : model_.constraints) {
      bool first = c.name.rfind("za_", 0) == 0;
      if ((!first && c.name.rfind("zb_", 0) != 0) || c.terms.size() != 2)
        continue;
      const auto &z = model_.variables[c.terms[0].var];
      const auto &x = model_.variables[c.terms[1].var];
      if (z.role != VarRole::Edge || z.index >= edge_vars)
        continue;
      (first ? model_.edges[z.index].first : model_.edges[z.index].second) =
          static_cast<Vertex>(x.index);
    }
  }

  IlpModel model_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> order_;
  std::unordered_map<std::string, std::pair<std::int64_t, std::int64_t>> bounds_;
  std::unordered_map<std::string, VarType> types_;
};

} // namespace

IlpModel read_lp(std::istream &in) { return LpReader{}.read(in); }

IlpModel read_lp(const std::string &text) {
  std::istringstream in(text);
  return read_lp(in);
}

Evaluation evaluate_assignment(const IlpModel &model, std::span<const Vertex> selected) {
  std::vector<std::int64_t> x(model.vertex_count, 0);
  for (Vertex v : selected) {
    if (v >= model.vertex_count)
      throw ContractError("selected vertex " + std::to_string(v) + " not in the model's graph");
    x[v] = 1;
  }

  std::vector<std::int64_t> value(model.variables.size(), 0);
  for (std::size_t i = 0; i < model.variables.size(); ++i) {
    const auto &var = model.variables[i];
    switch (var.role) {
    case VarRole::Vertex:
      if (var.index >= model.vertex_count)
        throw ContractError("model references vertex beyond its vertex count");
      value[i] = x[var.index];
      break;
    case VarRole::Size:
      value[i] = static_cast<std::int64_t>(selected.size());
      break;
    case VarRole::Edge: {
      if (var.index >= model.edges.size())
        throw ContractError("edge variable without endpoints");
      auto [a, b] = model.edges[var.index];
      value[i] = std::min(x[a], x[b]);
      break;
    }
    }
  }

  Evaluation result;
  result.feasible = true;
  for (const auto &c : model.constraints) {
    std::int64_t lhs = 0;
    for (const auto &t : c.terms)
      lhs += t.coef * value[t.var];
    bool ok = c.relation == Relation::LessEqual   ? lhs <= c.rhs
              : c.relation == Relation::Equal     ? lhs == c.rhs
                                                  : lhs >= c.rhs;
    if (!ok) {
      result.feasible = false;
      result.violated = c.name;
      break;
    }
  }
  for (const auto &t : model.objective)
    result.objective += t.coef * value[t.var];
  return result;
}

} // namespace clubplex
