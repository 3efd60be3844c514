#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pebble/errors.hpp"

namespace pebble {

/// Connected undirected graph with a per-vertex price: the number of pebbles
/// removed from a vertex when one pebble is moved off it. Prices are at
/// least 2. Vertices are the integers 0..n-1; any other labelling (sorted
/// prices, path orientation) is a computed view, never stored.
///
/// Instances are immutable after construction and precompute the hop-distance
/// table, the diameter, and the delivery-cost table, so all later queries are
/// read-only and safe to share across threads.
class PricedGraph {
public:
    using Edge = std::pair<int, int>;

    /// Validates and builds a graph. Throws BadEdge for self-loops,
    /// out-of-range endpoints or duplicates, PriceBelowTwo for an invalid
    /// price, and NotConnected if the graph is not connected.
    static PricedGraph make(int n, std::vector<Edge> edges,
                            std::vector<std::int64_t> prices);

    /// Same, with the standard price (2 everywhere).
    static PricedGraph make(int n, std::vector<Edge> edges);

    /// Parses {"n": int, "edges": [[u,v],...], "prices": [int,...]}.
    /// A missing "prices" field means the standard price.
    static PricedGraph from_json_text(const std::string& text);
    static PricedGraph load(const std::string& path);
    std::string to_json_text() const;

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    bool has_edge(int u, int v) const;

    std::int64_t price(int v) const { return prices_[v]; }
    const std::vector<std::int64_t>& prices() const { return prices_; }
    std::vector<std::int64_t> sorted_prices() const; // ascending view
    bool standard_price() const;

    /// Hop distance (every edge counts 1).
    int distance(int u, int v) const { return distance_[u][v]; }
    int diameter() const { return diameter_; }

    /// Minimum, over all routes from `from` to `to`, of the product of
    /// prices of the route's source and interior vertices: the exact number
    /// of pebbles a stack on `from` spends to land one pebble on `to`.
    /// delivery_cost(v, v) == 1. Saturates at int64 max.
    std::int64_t delivery_cost(int from, int to) const
    {
        return delivery_cost_[from][to];
    }

    /// All shortest paths whose length equals the diameter, as vertex
    /// sequences; both orientations of each path are listed. Ordered
    /// lexicographically by vertex sequence.
    std::vector<std::vector<int>> diameter_paths() const;

    bool is_complete() const;
    bool is_path() const;
    /// A star here has one center adjacent to every other vertex and at
    /// least two leaves; returns the center or -1.
    int star_center() const;
    bool is_star() const { return star_center() >= 0; }

    std::string describe() const; // short human-readable summary

private:
    PricedGraph() = default;
    void build_tables();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> prices_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> distance_;
    std::vector<std::vector<std::int64_t>> delivery_cost_;
    int diameter_ = 0;
};

} // namespace pebble
