#include "pebble/formulas.hpp"

#include <algorithm>

#include "pebble/checked.hpp"

namespace pebble {

namespace {

void require_t_range(int t, int hi, const char* what)
{
    if (t < 1 || t > hi)
        fail(ErrorKind::DomainError,
             std::string(what) + ": t=" + std::to_string(t) + " outside [1, " +
                 std::to_string(hi) + "]");
}

std::vector<std::int64_t> prices_along(const PricedGraph& g,
                                       const std::vector<int>& path)
{
    std::vector<std::int64_t> out;
    out.reserve(path.size());
    for (int v : path)
        out.push_back(g.price(v));
    return out;
}

} // namespace

std::int64_t lower_bound_spread(const PricedGraph& g, int t)
{
    int n = g.vertex_count();
    if (t == n)
        fail(ErrorKind::DomainError, "spread lower bound requires t < n");
    require_t_range(t, n - 1, "spread lower bound");
    auto sorted = g.sorted_prices(); // ascending, 0-based
    std::int64_t total = 0;
    for (int i = t; i < n; ++i)
        total = checked_add(total, sorted[i] - 1);
    total = checked_add(total, checked_mul(sorted[n - 1], t - 1));
    return checked_add(total, 1);
}

StackBound lower_bound_stack_detail(const PricedGraph& g, int t)
{
    int n = g.vertex_count();
    int d = g.diameter();
    if (d < 1)
        fail(ErrorKind::DomainError, "stack lower bound requires diameter >= 1");
    if (t < 1)
        fail(ErrorKind::DomainError, "stack lower bound requires t >= 1");
    if (t > d && t > n - 1)
        fail(ErrorKind::DomainError, "stack lower bound with t > d requires t < n");

    // Geodesic choice: maximize the source price (the stated product over
    // the first path position), then prefer the lexicographically greater
    // price sequence, then the lexicographically smaller vertex sequence.
    auto paths = g.diameter_paths();
    const std::vector<int>* best = nullptr;
    std::vector<std::int64_t> best_prices;
    for (const auto& path : paths) {
        auto prices = prices_along(g, path);
        if (!best || prices[0] > best_prices[0] ||
            (prices[0] == best_prices[0] && prices > best_prices)) {
            best = &path;
            best_prices = prices;
        }
    }

    StackBound out;
    out.path = *best;
    const auto& q = best_prices;
    std::int64_t base = 0;
    int terms = std::min(t, d);
    for (int j = 1; j <= terms; ++j) {
        std::int64_t product = 1;
        for (int i = 0; i < d + 1 - j; ++i)
            product = checked_mul(product, q[i]);
        base = checked_add(base, product);
    }
    if (t <= d) {
        out.value = base;
        out.literal_value = base;
        return out;
    }
    std::int64_t correction = checked_mul(q[0], q[1]);
    out.value = checked_add(base, checked_mul(correction, std::int64_t(t - d)));
    out.literal_value = checked_add(base, checked_mul(correction, std::int64_t(d - t)));
    return out;
}

std::int64_t lower_bound_stack(const PricedGraph& g, int t)
{
    return lower_bound_stack_detail(g, t).value;
}

std::int64_t upper_bound(const PricedGraph& g, int t)
{
    if (t < 1)
        fail(ErrorKind::DomainError, "upper bound requires t >= 1");
    int n = g.vertex_count();
    int d = g.diameter();
    auto sorted = g.sorted_prices();
    std::int64_t product = 1;
    for (int i = n - d; i < n; ++i)
        product = checked_mul(product, sorted[i]);
    std::int64_t single =
        checked_add(checked_mul(checked_sub(product, 1), n - 1), 1);
    return checked_mul(static_cast<std::int64_t>(t), single);
}

std::pair<std::int64_t, std::int64_t> classic_bounds(int n, int d)
{
    if (n < 1)
        fail(ErrorKind::DomainError, "vertex count must be at least 1");
    if (n == 1) {
        if (d != 0)
            fail(ErrorKind::DomainError, "a one-vertex graph has diameter 0");
        return {1, 1};
    }
    if (d < 1 || d > n - 1)
        fail(ErrorKind::DomainError, "diameter must be between 1 and n-1");
    std::int64_t pow = checked_pow2(d);
    std::int64_t lower = std::max<std::int64_t>(n, pow);
    std::int64_t upper =
        checked_add(checked_mul(checked_sub(pow, 1), n - 1), 1);
    return {lower, upper};
}

FormulaValue pi_complete(const PricedGraph& g, int t)
{
    if (!g.is_complete())
        fail(ErrorKind::NotComplete, "complete-graph closed form needs a complete graph");
    int n = g.vertex_count();
    require_t_range(t, n, "complete-graph closed form");
    if (n == 1)
        return {1, false};
    if (t == n)
        return {cover_from_penultimate(pi_complete(g, n - 1).value), true};
    return {lower_bound_spread(g, t), false}; // the spread bound is exact here
}

FormulaValue pi_path(const PricedGraph& g, int t)
{
    if (!g.is_path())
        fail(ErrorKind::NotPath, "path closed form needs a path graph");
    int n = g.vertex_count();
    require_t_range(t, n, "path closed form");
    if (n == 1)
        return {1, false};
    if (t == n)
        return {cover_from_penultimate(pi_path(g, n - 1).value), true};

    // Walk the path from one endpoint, producing the two orientations.
    int endpoint = -1;
    for (int v = 0; v < n && endpoint < 0; ++v)
        if (g.neighbors(v).size() == 1)
            endpoint = v;
    std::vector<std::int64_t> forward;
    int prev = -1, cur = endpoint;
    while (static_cast<int>(forward.size()) < n) {
        forward.push_back(g.price(cur));
        for (int w : g.neighbors(cur))
            if (w != prev) {
                prev = cur;
                cur = w;
                break;
            }
    }
    std::vector<std::int64_t> backward(forward.rbegin(), forward.rend());

    auto leading_product = [&](const std::vector<std::int64_t>& p) {
        std::int64_t product = 1;
        for (int i = 0; i < t; ++i)
            product = checked_mul(product, p[i]);
        return product;
    };
    std::int64_t fp = leading_product(forward);
    std::int64_t bp = leading_product(backward);
    const auto& chosen = (fp > bp || (fp == bp && forward <= backward)) ? forward
                                                                        : backward;
    std::int64_t total = 0;
    for (int j = 1; j <= t; ++j) {
        std::int64_t product = 1;
        for (int i = 0; i < n - j; ++i)
            product = checked_mul(product, chosen[i]);
        total = checked_add(total, product);
    }
    return {total, false};
}

FormulaValue pi_star(const PricedGraph& g, int t)
{
    int center = g.star_center();
    if (center < 0)
        fail(ErrorKind::NotStar, "star closed form needs a star graph");
    int leaves = g.vertex_count() - 1;
    require_t_range(t, leaves, "star closed form (t counts leaves)");

    std::int64_t center_price = g.price(center);
    std::vector<std::int64_t> leaf_prices;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != center)
            leaf_prices.push_back(g.price(v));
    std::sort(leaf_prices.begin(), leaf_prices.end());
    std::int64_t largest = leaf_prices.back();

    if (t == leaves) {
        std::int64_t total = checked_mul(checked_mul(std::int64_t(leaves), center_price),
                                         largest);
        return {checked_add(total, largest), false};
    }
    std::int64_t total = 0;
    for (int i = t; i < leaves - 1; ++i) // ascending ranks t+1 .. L-1
        total = checked_add(total, leaf_prices[i] - 1);
    total = checked_add(total, checked_mul(checked_mul(std::int64_t(t), center_price),
                                           largest));
    return {total, false};
}

std::int64_t cover_from_penultimate(std::int64_t pi_penultimate)
{
    return checked_add(pi_penultimate, 1);
}

std::int64_t simple_config_cost(const PricedGraph& g, const WeightFunction& w,
                                int v, const SolveOptions& opts)
{
    validate_on_graph(w, g);
    if (v < 0 || v >= g.vertex_count())
        fail(ErrorKind::DomainError, "vertex out of range");
    if (w.size() == 0)
        return 0;

    // Routing every demanded pebble independently is always enough, so it
    // bounds the search from above.
    std::int64_t hi = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        hi = checked_add(hi, checked_mul(w.weights[u], g.delivery_cost(v, u)));
    std::int64_t lo = 1;
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        auto result = can_reach_spec(Configuration::stack(g.vertex_count(), v, mid),
                                     g, w, opts);
        if (result.solvable)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::int64_t simple_config_bound(const PricedGraph& g, const WeightFunction& w,
                                 const SolveOptions& opts)
{
    std::int64_t best = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, simple_config_cost(g, w, v, opts));
    return best;
}

} // namespace pebble
