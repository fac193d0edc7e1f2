#include "clubplex/solvers.hpp"

#include "clubplex/detail/bfs.hpp"
#include "clubplex/detail/bitset.hpp"
#include "clubplex/errors.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace clubplex {

using detail::BitGraph;
using detail::Bits;

std::string to_string(SolveStatus status) {
  switch (status) {
  case SolveStatus::Optimal:
    return "optimal";
  case SolveStatus::BelowBound:
    return "below_bound";
  case SolveStatus::TimedOut:
    return "timed_out";
  }
  return "?";
}

std::string to_string(Variant variant) {
  switch (variant) {
  case Variant::NoTK:
    return "notk";
  case Variant::Full:
    return "full";
  case Variant::Default:
    return "default";
  case Variant::Hint:
    return "hint";
  }
  return "?";
}

Variant parse_variant(const std::string &name) {
  if (name == "notk" || name == "noTK")
    return Variant::NoTK;
  if (name == "full")
    return Variant::Full;
  if (name == "default")
    return Variant::Default;
  if (name == "hint")
    return Variant::Hint;
  throw ContractError("unknown variant '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_kind(CandidateKind kind) {
  if (kind.s < 1)
    throw ContractError("s must be at least 1");
}

// Marks `members` certified, and rejects a claimed optimum that fails its
// predicate: that is a solver bug, never a user error.
void certify(const Graph &g, CandidateKind kind, Solution &sol) {
  sol.certified = satisfies(g, sol.members, kind);
  if (!sol.certified && sol.status == SolveStatus::Optimal)
    throw std::logic_error("solver returned a set that fails the " + to_string(kind.problem) +
                           " predicate");
}

/// Branching state for the deletion problems on one (small) graph.
class DeletionSearch {
public:
  DeletionSearch(const Graph &g, CandidateKind kind, const Deadline &deadline)
      : graph_(g), kind_(kind), deadline_(deadline) {}

  DeletionResult run(std::size_t budget) {
    Bits alive = Bits::full(graph_.size());
    DeletionResult result;
    timed_out_ = false;
    nodes_ = 0;
    bool found = search(alive, budget);
    result.branch_nodes = nodes_;
    if (found) {
      result.status = DeletionResult::Status::Found;
      for (std::size_t v = 0; v < graph_.size(); ++v)
        if (!solution_.test(v))
          result.deleted.push_back(static_cast<Vertex>(v));
    } else {
      result.status = timed_out_ ? DeletionResult::Status::TimedOut : DeletionResult::Status::None;
    }
    return result;
  }

private:
  bool search(Bits &alive, std::size_t budget) {
    ++nodes_;
    if (deadline_.expired()) {
      timed_out_ = true;
      return false;
    }
    branch_.clear();
    if (!find_violation(alive, branch_)) {
      solution_ = alive;
      return true;
    }
    if (budget == 0)
      return false;
    // find_violation reuses branch_, so keep a private copy per level.
    std::vector<std::size_t> candidates = branch_;
    for (std::size_t w : candidates) {
      alive.reset(w);
      bool ok = search(alive, budget - 1);
      alive.set(w);
      if (ok)
        return true;
      if (timed_out_)
        return false;
    }
    return false;
  }

  bool find_violation(const Bits &alive, std::vector<std::size_t> &out) {
    switch (kind_.problem) {
    case Problem::Clique:
      return clique_violation(alive, out);
    case Problem::Club:
      return kind_.s == 1 ? clique_violation(alive, out) : club_violation(alive, out);
    case Problem::Plex:
      return plex_violation(alive, out);
    }
    return false;
  }

  // Smallest nonadjacent pair (u, v), u < v.
  bool clique_violation(const Bits &alive, std::vector<std::size_t> &out) {
    for (std::size_t u = alive.first(); u < alive.size(); u = alive.next(u + 1)) {
      scratch_ = alive;
      scratch_.subtract(graph_.rows[u]);
      scratch_.reset(u);
      std::size_t v = scratch_.next(u + 1);
      if (v < scratch_.size()) {
        out = {u, v};
        return true;
      }
    }
    return false;
  }

  // Pair of maximum induced distance (unreachable counts as infinite), ties
  // by smallest (u, v); a violation only when that distance exceeds s.
  bool club_violation(const Bits &alive, std::vector<std::size_t> &out) {
    std::size_t best_distance = 0;
    std::size_t best_u = 0, best_v = 0;
    for (std::size_t u = alive.first(); u < alive.size(); u = alive.next(u + 1)) {
      visited_ = Bits(alive.size());
      visited_.set(u);
      frontier_ = visited_;
      std::size_t depth = 0;
      std::size_t reached = 1;
      const std::size_t total = alive.count();
      Bits last = frontier_;
      while (reached < total) {
        Bits next(alive.size());
        frontier_.for_each([&](std::size_t f) { next |= graph_.rows[f]; });
        next &= alive;
        next.subtract(visited_);
        if (!next.any())
          break;
        ++depth;
        reached += next.count();
        visited_ |= next;
        last = next;
        frontier_ = std::move(next);
      }
      if (reached < total) {
        scratch_ = alive;
        scratch_.subtract(visited_);
        out = {u, scratch_.first()};
        return true;
      }
      if (depth > best_distance) {
        best_distance = depth;
        best_u = u;
        best_v = last.first();
      }
    }
    if (best_distance <= kind_.s)
      return false;
    out = {best_u, best_v};
    return true;
  }

  bool plex_violation(const Bits &alive, std::vector<std::size_t> &out) {
    const std::size_t total = alive.count();
    std::size_t worst = alive.size();
    std::size_t worst_missing = 0;
    for (std::size_t v = alive.first(); v < alive.size(); v = alive.next(v + 1)) {
      std::size_t missing = total - graph_.rows[v].and_count(alive);
      if (missing > worst_missing) {
        worst_missing = missing;
        worst = v;
      }
    }
    if (worst_missing >= kind_.s + 1) {
      out.push_back(worst);
      scratch_ = alive;
      scratch_.subtract(graph_.rows[worst]);
      scratch_.reset(worst);
      for (std::size_t u = scratch_.first(); u < scratch_.size() && out.size() < kind_.s + 1;
           u = scratch_.next(u + 1))
        out.push_back(u);
      return true;
    }
    // Degree condition holds; a plex must also be connected.
    std::size_t root = alive.first();
    if (root >= alive.size())
      return false;
    visited_ = Bits(alive.size());
    visited_.set(root);
    frontier_ = visited_;
    while (frontier_.any()) {
      Bits next(alive.size());
      frontier_.for_each([&](std::size_t f) { next |= graph_.rows[f]; });
      next &= alive;
      next.subtract(visited_);
      visited_ |= next;
      frontier_ = std::move(next);
    }
    scratch_ = alive;
    scratch_.subtract(visited_);
    if (!scratch_.any())
      return false;
    out = {root, scratch_.first()};
    return true;
  }

  BitGraph graph_;
  CandidateKind kind_;
  const Deadline &deadline_;
  Bits solution_, scratch_, visited_, frontier_;
  std::vector<std::size_t> branch_;
  std::size_t nodes_ = 0;
  bool timed_out_ = false;
};

VertexSet complement(std::size_t n, const VertexSet &removed) {
  VertexSet out;
  std::size_t j = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (j < removed.size() && removed[j] == v) {
      ++j;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

// Deepening loop shared by the public entry point and the kernel driver.
// Statistics accumulate into `stats`; certification is left to the caller.
Solution deepen(const Graph &g, CandidateKind kind, std::size_t lower_bound,
                const Deadline &deadline, SolveStats &stats) {
  const std::size_t n = g.vertex_count();
  Solution sol;
  if (lower_bound > n) {
    sol.status = SolveStatus::BelowBound;
    return sol;
  }
  DeletionSearch search(g, kind, deadline);
  for (std::size_t budget = 0; budget <= n - lower_bound; ++budget) {
    auto r = search.run(budget);
    stats.branch_nodes += r.branch_nodes;
    if (r.status == DeletionResult::Status::Found) {
      sol.members = complement(n, r.deleted);
      sol.status = SolveStatus::Optimal;
      return sol;
    }
    if (r.status == DeletionResult::Status::TimedOut) {
      sol.status = SolveStatus::TimedOut;
      stats.timed_out = true;
      return sol;
    }
  }
  sol.status = SolveStatus::BelowBound;
  return sol;
}

} // namespace

Solution brute_force_maximum(const Graph &g, CandidateKind kind, bool force) {
  require_kind(kind);
  const std::size_t n = g.vertex_count();
  if (n > 25 && !force)
    throw ContractError("brute force refuses graphs with more than 25 vertices");

  auto start = Clock::now();
  Solution sol;
  std::vector<Vertex> pick;
  for (std::size_t k = n + 1; k-- > 0;) {
    pick.resize(k);
    std::iota(pick.begin(), pick.end(), Vertex{0});
    while (true) {
      ++sol.stats.branch_nodes;
      if (satisfies(g, pick, kind)) {
        sol.members = pick;
        sol.status = SolveStatus::Optimal;
        sol.stats.elapsed_seconds = seconds_since(start);
        certify(g, kind, sol);
        return sol;
      }
      // Next k-combination of [0, n) in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1)
        --i;
      if (i == 0)
        break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j)
        pick[j] = pick[j - 1] + 1;
    }
  }
  // Unreachable: the empty set always qualifies.
  throw std::logic_error("brute force found no solution");
}

DeletionResult delete_to_target(const Graph &g, CandidateKind kind, std::size_t budget,
                                const Deadline &deadline) {
  require_kind(kind);
  DeletionSearch search(g, kind, deadline);
  return search.run(budget);
}

Solution maximum_via_deletion(const Graph &g, CandidateKind kind, std::size_t lower_bound,
                              const Deadline &deadline) {
  require_kind(kind);
  auto start = Clock::now();
  SolveStats stats;
  stats.oracle_calls = 1;
  stats.max_core_size = g.vertex_count();
  Solution sol = deepen(g, kind, lower_bound, deadline, stats);
  stats.elapsed_seconds = seconds_since(start);
  sol.stats = stats;
  certify(g, kind, sol);
  return sol;
}

std::size_t default_radius(CandidateKind kind) {
  return kind.problem == Problem::Clique ? 1 : kind.s;
}

void validate_config(CandidateKind kind, const VariantConfig &cfg) {
  require_kind(kind);
  if (cfg.x < 1)
    throw ContractError("kernel radius x must be at least 1");
  if (cfg.variant == Variant::Hint && !cfg.hint_value)
    throw ContractError("the hint variant needs a hint value");
  if (cfg.variant == Variant::NoTK)
    return;
  if (kind.problem == Problem::Club && cfg.x < kind.s)
    throw ContractError("club kernel radius must be at least s");
  if (kind.problem == Problem::Plex && cfg.x < kind.s && cfg.x < 2)
    throw ContractError("plex kernel radius must be at least min(s, 2)");
}

namespace {

bool needs_small_plex_fallback(CandidateKind kind, const VariantConfig &cfg) {
  return kind.problem == Problem::Plex && cfg.variant != Variant::NoTK &&
         (cfg.x == 2 || cfg.x < kind.s);
}

} // namespace

Solution turing_kernel_solve(const Graph &g, CandidateKind kind, const VariantConfig &cfg) {
  validate_config(kind, cfg);
  auto start = Clock::now();
  Deadline deadline = cfg.timeout_seconds ? Deadline::after(*cfg.timeout_seconds) : Deadline{};
  const std::size_t n = g.vertex_count();

  if (cfg.variant == Variant::NoTK) {
    SolveStats stats;
    stats.oracle_calls = 1;
    stats.max_core_size = n;
    Solution sol = deepen(g, kind, std::min<std::size_t>(1, n), deadline, stats);
    stats.elapsed_seconds = seconds_since(start);
    sol.stats = stats;
    certify(g, kind, sol);
    return sol;
  }

  XOrdering ordering = x_degeneracy_ordering(g, cfg.x);
  auto pos = ordering.positions();
  detail::BoundedBfs bfs(n);

  SolveStats stats;
  stats.degeneracy = ordering.degeneracy;
  Solution best;
  best.status = SolveStatus::Optimal;
  bool have_best = false;

  for (Vertex v : ordering.order) {
    VertexSet q{v};
    bfs.run(
        g, [&](Vertex w) { return pos[w] > pos[v]; }, v, cfg.x,
        [&](Vertex w) { q.push_back(w); });
    std::sort(q.begin(), q.end());

    std::size_t bound = 1;
    if (cfg.variant == Variant::Default)
      bound = best.size() + 1;
    else if (cfg.variant == Variant::Hint)
      bound = *cfg.hint_value;
    if (q.size() < bound)
      continue;

    ++stats.oracle_calls;
    stats.max_core_size = std::max(stats.max_core_size, q.size());
    if (stats.max_core_size > ordering.degeneracy + 1)
      throw std::logic_error("core exceeds the x-degeneracy bound");

    auto sub = induced_subgraph(g, q);
    Solution local = deepen(sub.graph, kind, bound, deadline, stats);
    if (local.status == SolveStatus::TimedOut) {
      stats.timed_out = true;
      break;
    }
    if (local.status == SolveStatus::Optimal && (!have_best || local.size() > best.size())) {
      best.members.clear();
      for (Vertex u : local.members)
        best.members.push_back(sub.mapping[u]);
      have_best = true;
    }
  }

  if (!stats.timed_out && needs_small_plex_fallback(kind, cfg) &&
      best.size() + 1 < 2 * kind.s) {
    Solution small = small_plex_fallback(g, kind.s);
    if (small.size() > best.size()) {
      best.members = small.members;
      have_best = true;
    }
  }

  if (stats.timed_out)
    best.status = SolveStatus::TimedOut;
  else if (cfg.variant == Variant::Hint && (!have_best || best.size() < *cfg.hint_value))
    best.status = SolveStatus::BelowBound;
  else
    best.status = SolveStatus::Optimal;
  if (best.status == SolveStatus::BelowBound)
    best.members.clear();

  stats.elapsed_seconds = seconds_since(start);
  best.stats = stats;
  certify(g, kind, best);
  return best;
}

namespace {

// ESU enumeration of connected vertex sets with at most `limit` vertices,
// each reported exactly once with its minimum vertex as root.
class ConnectedSubsets {
public:
  ConnectedSubsets(const Graph &g, std::size_t limit) : g_(g), limit_(limit), in_sub_(g.vertex_count(), 0) {}

  template <class F> void for_each(F &&visit) {
    if (limit_ == 0)
      return;
    for (Vertex root = 0; root < g_.vertex_count(); ++root) {
      std::vector<Vertex> ext;
      for (Vertex u : g_.neighbors(root))
        if (u > root)
          ext.push_back(u);
      sub_ = {root};
      in_sub_[root] = 1;
      extend(root, ext, visit);
      in_sub_[root] = 0;
    }
  }

private:
  template <class F> void extend(Vertex root, std::vector<Vertex> ext, F &visit) {
    visit(std::as_const(sub_));
    if (sub_.size() == limit_)
      return;
    while (!ext.empty()) {
      Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : g_.neighbors(w)) {
        if (u <= root || in_sub_[u])
          continue;
        bool touches_sub = std::any_of(sub_.begin(), sub_.end(),
                                       [&](Vertex s) { return g_.has_edge(s, u); });
        if (!touches_sub)
          next.push_back(u);
      }
      sub_.push_back(w);
      in_sub_[w] = 1;
      extend(root, std::move(next), visit);
      in_sub_[w] = 0;
      sub_.pop_back();
    }
  }

  const Graph &g_;
  std::size_t limit_;
  std::vector<char> in_sub_;
  std::vector<Vertex> sub_;
};

} // namespace

Solution small_plex_fallback(const Graph &g, std::size_t s) {
  if (s < 1)
    throw ContractError("s must be at least 1");
  auto start = Clock::now();
  Solution best;
  best.status = SolveStatus::Optimal;

  ConnectedSubsets subsets(g, 2 * s - 2);
  subsets.for_each([&](const std::vector<Vertex> &sub) {
    ++best.stats.branch_nodes;
    if (sub.size() < best.size())
      return;
    VertexSet sorted = normalized(sub);
    if (!satisfies_plex_degree_condition(g, sorted, s))
      return;
    if (sorted.size() > best.size() || sorted < best.members)
      best.members = std::move(sorted);
  });
  best.stats.elapsed_seconds = seconds_since(start);
  certify(g, CandidateKind::plex(s), best);
  return best;
}

} // namespace clubplex
