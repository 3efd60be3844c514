#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "pebble/config.hpp"
#include "pebble/graph.hpp"

namespace pebble {

inline constexpr std::uint64_t kNoLimit =
    std::numeric_limits<std::uint64_t>::max();

struct SolveOptions {
    /// Disables the admissible prune, leaving the plain exhaustive search.
    /// The two modes must agree everywhere; the equivalence suite holds the
    /// pruned search to the pruning-free reference on every small instance.
    bool use_pruning = true;
    /// Cap on states expanded by one solvability query. Exceeding it throws
    /// ResourceLimit; a query is never answered wrongly.
    std::uint64_t max_states = kNoLimit;
};

struct SolveResult {
    bool solvable = false;
    /// For a single reachability query that succeeds: a move sequence whose
    /// replay from the input ends in a covering configuration. Empty when
    /// the input already covers. Not populated by t-solvability queries,
    /// which quantify over many target sets.
    std::vector<PebblingMove> witness;
    /// For a failed t-solvability query: the lexicographically first target
    /// set that cannot be reached.
    std::optional<TargetSet> failing_target;
    std::uint64_t states_expanded = 0;
};

/// Decides whether some configuration derivable from c (including c itself,
/// by the empty move sequence) covers the target set / meets the weights.
SolveResult can_reach_spec(const Configuration& c, const PricedGraph& g,
                           const TargetSet& targets, const SolveOptions& opts = {});
SolveResult can_reach_spec(const Configuration& c, const PricedGraph& g,
                           const WeightFunction& w, const SolveOptions& opts = {});

/// Decides whether EVERY t-element target set is reachable from c. On
/// failure, failing_target is the lexicographically first bad set. Note
/// that some of the literature uses "t-solvable" for a different notion
/// (t pebbles on one target); here it is always the every-t-subset form.
SolveResult is_t_solvable(const Configuration& c, const PricedGraph& g, int t,
                          const SolveOptions& opts = {});

/// Replays a move sequence via apply_move; used to validate witnesses.
Configuration replay(const Configuration& c, const PricedGraph& g,
                     const std::vector<PebblingMove>& moves);

} // namespace pebble
