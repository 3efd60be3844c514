#include "pebble/solver.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "pebble/checked.hpp"

namespace pebble {

namespace {

struct ConfigHash {
    std::size_t operator()(const std::vector<std::int64_t>& counts) const
    {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : counts) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Potential prune. For a target u, every pebble that ends on u consumes at
// least delivery_cost(v, u) pebbles from wherever it started, and the sum
// sum_v counts[v] / delivery_cost(v, u) never increases under pebbling
// moves. If it is already below the demand at u, no move sequence can meet
// the demand and the state can be cut.
//
// The per-target test is done in integers: with L[u] a common multiple of
// all delivery costs into u, the state is prунable iff
//   sum_v counts[v] * (L[u] / cost(v, u))  <  w[u] * L[u].
// When L[u] would overflow, pruning for that target is simply skipped.
struct PruneTable {
    // coef[u][v] = L[u] / delivery_cost(v, u); empty coef row = disabled.
    std::vector<std::vector<std::int64_t>> coef;
    std::vector<std::int64_t> scale; // L[u]

    explicit PruneTable(const PricedGraph& g)
    {
        int n = g.vertex_count();
        coef.assign(n, {});
        scale.assign(n, 0);
        for (int u = 0; u < n; ++u) {
            std::int64_t l = 1;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                std::int64_t c = g.delivery_cost(v, u);
                std::int64_t gcd = std::gcd(l, c);
                std::int64_t r = saturating_mul(l / gcd, c);
                if (r == std::numeric_limits<std::int64_t>::max())
                    ok = false;
                else
                    l = r;
            }
            if (!ok)
                continue;
            scale[u] = l;
            coef[u].resize(n);
            for (int v = 0; v < n; ++v)
                coef[u][v] = l / g.delivery_cost(v, u);
        }
    }
};

class Search {
public:
    Search(const PricedGraph& g, const WeightFunction& w, const SolveOptions& opts) :
        g_(g), w_(w), opts_(opts), prune_(g)
    {
        demand_size_ = w.size();
    }

    bool run(const Configuration& start)
    {
        witness_.clear();
        return dfs(start.counts);
    }

    const std::vector<PebblingMove>& witness() const { return witness_; }
    std::uint64_t states() const { return states_; }

private:
    bool meets_demand(const std::vector<std::int64_t>& counts) const
    {
        for (std::size_t v = 0; v < counts.size(); ++v)
            if (counts[v] < w_.weights[v])
                return false;
        return true;
    }

    bool prunable(const std::vector<std::int64_t>& counts,
                  std::int64_t size) const
    {
        // Moves only ever shrink the total, and meeting the demand needs at
        // least demand_size_ pebbles on the board.
        if (size < demand_size_)
            return true;
        for (std::size_t u = 0; u < counts.size(); ++u) {
            if (w_.weights[u] <= counts[u])
                continue;
            const auto& coef = prune_.coef[u];
            if (coef.empty())
                continue;
            unsigned __int128 potential = 0;
            for (std::size_t v = 0; v < counts.size(); ++v)
                potential += static_cast<unsigned __int128>(counts[v]) *
                             static_cast<unsigned __int128>(coef[v]);
            unsigned __int128 need =
                static_cast<unsigned __int128>(w_.weights[u]) *
                static_cast<unsigned __int128>(prune_.scale[u]);
            if (potential < need)
                return true;
        }
        return false;
    }

    // Moves that park a pebble near an unmet vertex first; the order only
    // affects speed and which witness is found, both deterministic.
    std::vector<PebblingMove> ordered_moves(const std::vector<std::int64_t>& counts) const
    {
        std::vector<PebblingMove> moves;
        for (int from = 0; from < g_.vertex_count(); ++from)
            if (counts[from] >= g_.price(from))
                for (int to : g_.neighbors(from))
                    moves.push_back({from, to});
        std::vector<std::int64_t> score(moves.size());
        for (std::size_t i = 0; i < moves.size(); ++i) {
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            for (int u = 0; u < g_.vertex_count(); ++u)
                if (counts[u] < w_.weights[u])
                    best = std::min(best, g_.delivery_cost(moves[i].to, u));
            score[i] = best;
        }
        std::vector<std::size_t> order(moves.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
        std::vector<PebblingMove> out;
        out.reserve(moves.size());
        for (auto i : order)
            out.push_back(moves[i]);
        return out;
    }

    bool dfs(const std::vector<std::int64_t>& counts)
    {
        if (meets_demand(counts))
            return true;
        if (++states_ > opts_.max_states)
            fail(ErrorKind::ResourceLimit, "solver state budget exceeded");
        std::int64_t size = 0;
        for (auto v : counts)
            size += v;
        if (opts_.use_pruning && prunable(counts, size))
            return false;
        if (failed_.contains(counts))
            return false;
        for (const auto& m : ordered_moves(counts)) {
            auto next = counts;
            next[m.from] -= g_.price(m.from);
            next[m.to] += 1;
            witness_.push_back(m);
            if (dfs(next))
                return true;
            witness_.pop_back();
        }
        failed_.insert(counts);
        return false;
    }

    const PricedGraph& g_;
    const WeightFunction& w_;
    SolveOptions opts_;
    PruneTable prune_;
    std::int64_t demand_size_ = 0;
    std::uint64_t states_ = 0;
    std::vector<PebblingMove> witness_;
    std::unordered_set<std::vector<std::int64_t>, ConfigHash> failed_;
};

} // namespace

SolveResult can_reach_spec(const Configuration& c, const PricedGraph& g,
                           const WeightFunction& w, const SolveOptions& opts)
{
    validate_on_graph(c, g);
    validate_on_graph(w, g);
    Search search(g, w, opts);
    SolveResult result;
    result.solvable = search.run(c);
    if (result.solvable)
        result.witness = search.witness();
    result.states_expanded = search.states();
    return result;
}

SolveResult can_reach_spec(const Configuration& c, const PricedGraph& g,
                           const TargetSet& targets, const SolveOptions& opts)
{
    validate_on_graph(targets, g);
    return can_reach_spec(
        c, g, WeightFunction::indicator(targets.vertices, g.vertex_count()), opts);
}

SolveResult is_t_solvable(const Configuration& c, const PricedGraph& g, int t,
                          const SolveOptions& opts)
{
    validate_on_graph(c, g);
    int n = g.vertex_count();
    if (t < 1 || t > n)
        fail(ErrorKind::DomainError, "t must be between 1 and the vertex count");

    // Target sets in lexicographic order over sorted vertex subsets, so the
    // reported failing set is deterministic.
    std::vector<int> subset(t);
    std::iota(subset.begin(), subset.end(), 0);
    SolveResult aggregate;
    aggregate.solvable = true;
    while (true) {
        TargetSet targets{subset};
        auto result = can_reach_spec(c, g, targets, opts);
        aggregate.states_expanded += result.states_expanded;
        if (!result.solvable) {
            aggregate.solvable = false;
            aggregate.failing_target = targets;
            return aggregate;
        }
        int i = t - 1;
        while (i >= 0 && subset[i] == n - t + i)
            --i;
        if (i < 0)
            break;
        ++subset[i];
        for (int j = i + 1; j < t; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    return aggregate;
}

Configuration replay(const Configuration& c, const PricedGraph& g,
                     const std::vector<PebblingMove>& moves)
{
    Configuration cur = c;
    for (const auto& m : moves)
        cur = apply_move(cur, m, g);
    return cur;
}

} // namespace pebble
