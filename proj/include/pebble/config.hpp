#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

/// One pebbling move: remove price(from) pebbles from `from`, add one pebble
/// on the adjacent vertex `to`.
struct PebblingMove {
    int from = 0;
    int to = 0;

    friend bool operator==(const PebblingMove&, const PebblingMove&) = default;
};

/// Per-vertex pebble counts. A plain value type; the owning graph is passed
/// to the operations that need it.
struct Configuration {
    std::vector<std::int64_t> counts;

    static Configuration zeros(int n) { return {std::vector<std::int64_t>(n, 0)}; }
    static Configuration stack(int n, int vertex, std::int64_t amount);

    std::int64_t size() const;
    std::string str() const; // "(4,0,0)"

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Per-vertex minimum final counts.
struct WeightFunction {
    std::vector<std::int64_t> weights;

    static WeightFunction ones(int n) { return {std::vector<std::int64_t>(n, 1)}; }
    static WeightFunction indicator(const std::vector<int>& targets, int n);

    std::int64_t size() const;
    bool positive() const; // every entry >= 1
    std::string str() const;

    friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

/// A set of distinct target vertices, kept sorted.
struct TargetSet {
    std::vector<int> vertices;

    static TargetSet of(std::vector<int> vs);

    std::string str() const; // "{0,2}"

    friend bool operator==(const TargetSet&, const TargetSet&) = default;
};

void validate_on_graph(const Configuration& c, const PricedGraph& g);
void validate_on_graph(const WeightFunction& w, const PricedGraph& g);
void validate_on_graph(const TargetSet& targets, const PricedGraph& g);

/// Applies a pebbling move, returning the new configuration. Throws
/// InsufficientPebbles if the source cannot pay its price and BadEdge if
/// (from, to) is not an edge.
Configuration apply_move(const Configuration& c, PebblingMove m,
                         const PricedGraph& g);

/// Every legal move on c, ascending by (from, to).
std::vector<PebblingMove> legal_moves(const Configuration& c,
                                      const PricedGraph& g);

bool covers(const Configuration& c, const TargetSet& targets);
bool covers(const Configuration& c, const WeightFunction& w);

/// Number of configurations of size k on n vertices: C(k+n-1, n-1).
/// Throws Overflow when the count does not fit in 64 bits.
std::uint64_t configuration_count(int n, std::int64_t k);
std::optional<std::uint64_t> try_configuration_count(int n, std::int64_t k);

/// The stream of all configurations of size k on n vertices in descending
/// lexicographic order, i.e. (k,0,...,0) first and (0,...,0,k) last.
/// Restartable at any index, so index ranges can be handed to workers.
class ConfigurationStream {
public:
    ConfigurationStream(int n, std::int64_t k, std::uint64_t start_index = 0);

    bool done() const { return done_; }
    const Configuration& current() const { return current_; }
    std::uint64_t index() const { return index_; }
    void advance();

    /// The configuration at a given rank in the descending-lex order.
    static Configuration at_index(int n, std::int64_t k, std::uint64_t index);
    /// Rank of a configuration in the descending-lex order of its size class.
    static std::uint64_t index_of(const Configuration& c);
    /// In-place successor; returns false when exhausted.
    static bool next_in_place(std::vector<std::int64_t>& counts);

private:
    std::uint64_t index_ = 0;
    std::uint64_t total_ = 0;
    bool done_ = false;
    Configuration current_;
};

} // namespace pebble
