#pragma once

#include "clubplex/deadline.hpp"
#include "clubplex/graph.hpp"
#include "clubplex/ordering.hpp"
#include "clubplex/verify.hpp"

#include <optional>
#include <string>

namespace clubplex {

struct SolveStats {
  /// Kernel subproblems handed to the deletion oracle.
  std::size_t oracle_calls = 0;
  /// Largest |Q_x[v]| handed to the oracle (whole graph for noTK).
  std::size_t max_core_size = 0;
  std::size_t branch_nodes = 0;
  double elapsed_seconds = 0.0;
  bool timed_out = false;
  /// x-degeneracy of the input when a kernel variant ran.
  std::optional<std::size_t> degeneracy;
};

enum class SolveStatus {
  /// `members` is a maximum solution.
  Optimal,
  /// No solution reaches the requested lower bound; `members` is empty.
  BelowBound,
  /// Deadline hit; `members` is the best found so far, not known maximum.
  TimedOut,
};

std::string to_string(SolveStatus status);

struct Solution {
  VertexSet members;
  SolveStatus status = SolveStatus::Optimal;
  /// `members` passed the matching verify predicate.
  bool certified = false;
  SolveStats stats;

  std::size_t size() const noexcept { return members.size(); }
};

/// Subset enumeration, largest cardinality first, combinations in
/// lexicographic order; the first hit is returned. Refuses graphs with more
/// than 25 vertices unless `force` is set.
Solution brute_force_maximum(const Graph &g, CandidateKind kind, bool force = false);

struct DeletionResult {
  enum class Status { Found, None, TimedOut };
  Status status = Status::None;
  /// Deleted vertices when status == Found.
  VertexSet deleted;
  std::size_t branch_nodes = 0;
};

/// Searches for at most `budget` vertices whose removal leaves a set that
/// satisfies `kind`. Clubs and cliques branch two ways on a violating pair;
/// plexes branch s+1 ways on a vertex missing too many others (and two ways
/// on a pair from different components when only connectivity fails).
DeletionResult delete_to_target(const Graph &g, CandidateKind kind, std::size_t budget,
                                const Deadline &deadline = {});

/// Maximum solution of size >= lower_bound via iterative deepening on the
/// deletion budget. Status BelowBound when no such solution exists.
Solution maximum_via_deletion(const Graph &g, CandidateKind kind, std::size_t lower_bound,
                              const Deadline &deadline = {});

enum class Variant { NoTK, Full, Default, Hint };

std::string to_string(Variant variant);
Variant parse_variant(const std::string &name);

struct VariantConfig {
  Variant variant = Variant::Default;
  /// Kernel radius: s for clubs, s or 2 for plexes, anything for cliques.
  std::size_t x = 1;
  /// Required for Variant::Hint.
  std::optional<std::size_t> hint_value;
  std::optional<double> timeout_seconds;
};

/// Default kernel radius for a problem (s, or 1 for cliques).
std::size_t default_radius(CandidateKind kind);

/// Throws ContractError when `cfg` is not usable for `kind` (hint without a
/// value, or a radius whose cores could miss solutions).
void validate_config(CandidateKind kind, const VariantConfig &cfg);

/// Turing-kernel driver. Cores Q_x[v] are visited in x-degeneracy order:
///  - noTK solves the whole graph in one oracle call,
///  - full solves every core independently,
///  - default raises the lower bound to best-so-far + 1 between cores,
///  - hint uses cfg.hint_value as the lower bound for every core.
/// Plex runs with a radius below s (the "-2" configurations) are completed
/// with small_plex_fallback when the kernel optimum is below 2s-1.
Solution turing_kernel_solve(const Graph &g, CandidateKind kind, const VariantConfig &cfg);

/// Largest s-plex with at most 2s-2 vertices, by enumerating connected
/// vertex subsets of that size.
Solution small_plex_fallback(const Graph &g, std::size_t s);

} // namespace clubplex
