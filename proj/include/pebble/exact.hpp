#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pebble/config.hpp"
#include "pebble/graph.hpp"
#include "pebble/solver.hpp"

// Exact values of the t-target pebbling number and the weighted cover
// number, computed by scanning configuration sizes. Each size is scanned in
// descending lexicographic order for the first counterexample; the kernels
// come in a serial reference flavour and an OpenMP flavour that partitions
// the index range and cancels siblings once a counterexample is known. Both
// produce identical results by construction: the outcome of a scan is the
// lexicographically first event, independent of the partitioning.

namespace pebble {

enum class ExecutionPolicy {
    serial,   // reference implementation, kept for testing and benchmarks
    parallel, // OpenMP over index blocks
};

struct ExactOptions {
    ExecutionPolicy policy = ExecutionPolicy::parallel;
    int threads = 0; // 0 = runtime default
    /// Cap on configurations examined per computation. The scan only ever
    /// looks at the first `budget_configs` positions a serial run would,
    /// so hitting the cap is deterministic; the result is then a
    /// ResourceLimit error, never a wrong number.
    std::uint64_t budget_configs = kNoLimit;
    /// Cap on solver states per solvability query (see SolveOptions).
    std::uint64_t budget_states = kNoLimit;
    bool use_pruning = true;
};

using SpecTarget = std::variant<TargetSet, WeightFunction>;

struct NumberResult {
    std::int64_t value = 0;
    /// A non-solvable configuration of size value-1 together with what it
    /// fails; absent only for the all-zero weight query (value 0).
    std::optional<Configuration> witness_config;
    std::optional<SpecTarget> witness_spec;
    std::uint64_t configs_examined = 0;
};

struct CriticalSet {
    std::int64_t pi = 0;          // the t-target pebbling number
    std::int64_t member_size = 0; // pi - 1
    std::vector<std::pair<Configuration, TargetSet>> members; // complete, lex order
};

/// Minimum k such that every configuration of k pebbles can reach every
/// t-element target set.
NumberResult pebbling_number(const PricedGraph& g, int t,
                             const ExactOptions& opts = {});

/// Minimum k such that every configuration of k pebbles can be pebbled to
/// counts >= w everywhere. All-zero w yields 0.
NumberResult weighted_cover_number(const PricedGraph& g, const WeightFunction& w,
                                   const ExactOptions& opts = {});

/// The complete list of non-t-solvable configurations of size pi - 1, each
/// with its lexicographically first failing target set.
CriticalSet critical_configurations(const PricedGraph& g, int t,
                                    const ExactOptions& opts = {});

} // namespace pebble
