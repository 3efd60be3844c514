#include "pebble/families.hpp"

namespace pebble {

namespace {

std::vector<std::int64_t> default_prices(int n, std::vector<std::int64_t> prices)
{
    if (prices.empty())
        return std::vector<std::int64_t>(n, 2);
    return prices;
}

} // namespace

Family family_from_name(const std::string& name)
{
    if (name == "path")
        return Family::path;
    if (name == "complete")
        return Family::complete;
    if (name == "star")
        return Family::star;
    fail(ErrorKind::BadInput, "unknown family: " + name);
}

const char* family_name(Family family)
{
    switch (family) {
        case Family::path: return "path";
        case Family::complete: return "complete";
        case Family::star: return "star";
    }
    return "unknown";
}

PricedGraph make_path(int n, std::vector<std::int64_t> prices)
{
    std::vector<PricedGraph::Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return PricedGraph::make(n, std::move(edges), default_prices(n, std::move(prices)));
}

PricedGraph make_complete(int n, std::vector<std::int64_t> prices)
{
    std::vector<PricedGraph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return PricedGraph::make(n, std::move(edges), default_prices(n, std::move(prices)));
}

PricedGraph make_star(int leaves, std::vector<std::int64_t> prices)
{
    if (leaves < 1)
        fail(ErrorKind::BadInput, "a star needs at least one leaf");
    int n = leaves + 1;
    std::vector<PricedGraph::Edge> edges;
    for (int leaf = 1; leaf <= leaves; ++leaf)
        edges.push_back({0, leaf});
    return PricedGraph::make(n, std::move(edges), default_prices(n, std::move(prices)));
}

PricedGraph make_cycle(int n, std::vector<std::int64_t> prices)
{
    if (n < 3)
        fail(ErrorKind::BadInput, "a cycle needs at least three vertices");
    std::vector<PricedGraph::Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return PricedGraph::make(n, std::move(edges), default_prices(n, std::move(prices)));
}

PricedGraph make_family_member(Family family, int n, std::vector<std::int64_t> prices)
{
    switch (family) {
        case Family::path: return make_path(n, std::move(prices));
        case Family::complete: return make_complete(n, std::move(prices));
        case Family::star: return make_star(n, std::move(prices));
    }
    fail(ErrorKind::BadInput, "unknown family");
}

int family_member_vertices(Family family, int n)
{
    return family == Family::star ? n + 1 : n;
}

} // namespace pebble
