#include "pebble/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pebble/checked.hpp"

namespace pebble {

PricedGraph PricedGraph::make(int n, std::vector<Edge> edges,
                              std::vector<std::int64_t> prices)
{
    if (n < 1)
        fail(ErrorKind::BadInput, "vertex count must be at least 1");
    if (static_cast<int>(prices.size()) != n)
        fail(ErrorKind::BadInput, "expected " + std::to_string(n) + " prices, got " +
                                      std::to_string(prices.size()));
    for (int v = 0; v < n; ++v)
        if (prices[v] < 2)
            fail(ErrorKind::PriceBelowTwo,
                 "price of vertex " + std::to_string(v) + " is " +
                     std::to_string(prices[v]));

    std::set<Edge> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorKind::BadEdge, "edge endpoint out of range: (" +
                                         std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            fail(ErrorKind::BadEdge, "self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (!seen.insert({u, v}).second)
            fail(ErrorKind::BadEdge, "duplicate edge (" + std::to_string(u) + "," +
                                         std::to_string(v) + ")");
    }
    std::sort(edges.begin(), edges.end());

    PricedGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.prices_ = std::move(prices);
    g.adjacency_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nb : g.adjacency_)
        std::sort(nb.begin(), nb.end());

    // Connectivity check before the distance tables so the error is specific.
    std::vector<char> visited(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int w : g.adjacency_[u])
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                bfs.push(w);
            }
    }
    if (reached != n)
        fail(ErrorKind::NotConnected, "graph is not connected");

    g.build_tables();
    return g;
}

PricedGraph PricedGraph::make(int n, std::vector<Edge> edges)
{
    return make(n, std::move(edges), std::vector<std::int64_t>(n, 2));
}

void PricedGraph::build_tables()
{
    distance_.assign(n_, std::vector<int>(n_, -1));
    for (int s = 0; s < n_; ++s) {
        auto& dist = distance_[s];
        dist[s] = 0;
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int w : adjacency_[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    bfs.push(w);
                }
        }
    }
    diameter_ = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            diameter_ = std::max(diameter_, distance_[u][v]);

    // Multiplicative shortest paths: relaxing over edges converges in at
    // most n rounds since every price is >= 2.
    constexpr auto inf = std::numeric_limits<std::int64_t>::max();
    delivery_cost_.assign(n_, std::vector<std::int64_t>(n_, inf));
    for (int s = 0; s < n_; ++s) {
        auto& cost = delivery_cost_[s];
        cost[s] = 1;
        for (int round = 0; round < n_; ++round) {
            bool changed = false;
            for (auto [u, v] : edges_) {
                if (cost[u] < inf) {
                    std::int64_t via = saturating_mul(cost[u], prices_[u]);
                    if (via < cost[v]) {
                        cost[v] = via;
                        changed = true;
                    }
                }
                if (cost[v] < inf) {
                    std::int64_t via = saturating_mul(cost[v], prices_[v]);
                    if (via < cost[u]) {
                        cost[u] = via;
                        changed = true;
                    }
                }
            }
            if (!changed)
                break;
        }
    }
}

bool PricedGraph::has_edge(int u, int v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        return false;
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::int64_t> PricedGraph::sorted_prices() const
{
    auto out = prices_;
    std::sort(out.begin(), out.end());
    return out;
}

bool PricedGraph::standard_price() const
{
    return std::all_of(prices_.begin(), prices_.end(),
                       [](std::int64_t p) { return p == 2; });
}

namespace {

void extend_geodesics(const PricedGraph& g, std::vector<int>& path, int goal,
                      std::vector<std::vector<int>>& out)
{
    int cur = path.back();
    if (cur == goal) {
        out.push_back(path);
        return;
    }
    for (int w : g.neighbors(cur))
        if (g.distance(w, goal) == g.distance(cur, goal) - 1) {
            path.push_back(w);
            extend_geodesics(g, path, goal, out);
            path.pop_back();
        }
}

} // namespace

std::vector<std::vector<int>> PricedGraph::diameter_paths() const
{
    std::vector<std::vector<int>> out;
    if (diameter_ == 0)
        return out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v && distance_[u][v] == diameter_) {
                std::vector<int> path{u};
                extend_geodesics(*this, path, v, out);
            }
    std::sort(out.begin(), out.end());
    return out;
}

bool PricedGraph::is_complete() const
{
    return edge_count() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

bool PricedGraph::is_path() const
{
    if (n_ == 1)
        return true;
    if (edge_count() != static_cast<std::size_t>(n_) - 1)
        return false;
    for (int v = 0; v < n_; ++v)
        if (adjacency_[v].size() > 2)
            return false;
    return true;
}

int PricedGraph::star_center() const
{
    if (n_ < 3 || edge_count() != static_cast<std::size_t>(n_) - 1)
        return -1;
    for (int v = 0; v < n_; ++v)
        if (static_cast<int>(adjacency_[v].size()) == n_ - 1)
            return v;
    return -1;
}

PricedGraph PricedGraph::from_json_text(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::BadInput, std::string("graph JSON parse error: ") + e.what());
    }
    if (!doc.is_object())
        fail(ErrorKind::BadInput, "graph JSON must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        fail(ErrorKind::BadInput, "field \"n\" missing or not an integer");
    int n = doc["n"].get<int>();
    if (!doc.contains("edges") || !doc["edges"].is_array())
        fail(ErrorKind::BadInput, "field \"edges\" missing or not an array");
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail(ErrorKind::BadInput, "field \"edges\" entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::int64_t> prices;
    if (doc.contains("prices")) {
        if (!doc["prices"].is_array())
            fail(ErrorKind::BadInput, "field \"prices\" must be an array");
        for (const auto& p : doc["prices"]) {
            if (!p.is_number_integer())
                fail(ErrorKind::BadInput, "field \"prices\" entries must be integers");
            prices.push_back(p.get<std::int64_t>());
        }
    } else if (n >= 1) {
        prices.assign(n, 2);
    }
    return make(n, std::move(edges), std::move(prices));
}

PricedGraph PricedGraph::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::BadInput, "cannot open graph file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

std::string PricedGraph::to_json_text() const
{
    nlohmann::ordered_json doc;
    doc["n"] = n_;
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : edges_)
        doc["edges"].push_back({u, v});
    doc["prices"] = prices_;
    return doc.dump();
}

std::string PricedGraph::describe() const
{
    std::string out;
    if (is_complete() && n_ > 2)
        out = "complete n=" + std::to_string(n_);
    else if (is_path())
        out = "path n=" + std::to_string(n_);
    else if (is_star())
        // the star family indexes by leaf count
        out = "star leaves=" + std::to_string(n_ - 1);
    else
        out = "graph n=" + std::to_string(n_);
    out += standard_price() ? " (standard price)" : " (custom prices)";
    return out;
}

} // namespace pebble
