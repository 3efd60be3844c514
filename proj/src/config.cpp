#include "pebble/config.hpp"

#include <algorithm>
#include <limits>

#include "pebble/checked.hpp"

namespace pebble {

Configuration Configuration::stack(int n, int vertex, std::int64_t amount)
{
    auto c = zeros(n);
    c.counts[vertex] = amount;
    return c;
}

std::int64_t Configuration::size() const
{
    std::int64_t total = 0;
    for (auto v : counts)
        total = checked_add(total, v);
    return total;
}

std::string Configuration::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(counts[i]);
    }
    return out + ")";
}

WeightFunction WeightFunction::indicator(const std::vector<int>& targets, int n)
{
    WeightFunction w{std::vector<std::int64_t>(n, 0)};
    for (int v : targets)
        w.weights[v] = 1;
    return w;
}

std::int64_t WeightFunction::size() const
{
    std::int64_t total = 0;
    for (auto v : weights)
        total = checked_add(total, v);
    return total;
}

bool WeightFunction::positive() const
{
    return std::all_of(weights.begin(), weights.end(),
                       [](std::int64_t w) { return w >= 1; });
}

std::string WeightFunction::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(weights[i]);
    }
    return out + ")";
}

TargetSet TargetSet::of(std::vector<int> vs)
{
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (vs[i] == vs[i - 1])
            fail(ErrorKind::BadInput, "duplicate target vertex " + std::to_string(vs[i]));
    return {std::move(vs)};
}

std::string TargetSet::str() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(vertices[i]);
    }
    return out + "}";
}

void validate_on_graph(const Configuration& c, const PricedGraph& g)
{
    if (static_cast<int>(c.counts.size()) != g.vertex_count())
        fail(ErrorKind::BadInput, "configuration length does not match vertex count");
    for (auto v : c.counts)
        if (v < 0)
            fail(ErrorKind::BadInput, "negative pebble count");
}

void validate_on_graph(const WeightFunction& w, const PricedGraph& g)
{
    if (static_cast<int>(w.weights.size()) != g.vertex_count())
        fail(ErrorKind::BadInput, "weight function length does not match vertex count");
    for (auto v : w.weights)
        if (v < 0)
            fail(ErrorKind::BadInput, "negative weight");
}

void validate_on_graph(const TargetSet& targets, const PricedGraph& g)
{
    if (targets.vertices.empty())
        fail(ErrorKind::BadInput, "empty target set");
    if (static_cast<int>(targets.vertices.size()) > g.vertex_count())
        fail(ErrorKind::BadInput, "more targets than vertices");
    for (int v : targets.vertices)
        if (v < 0 || v >= g.vertex_count())
            fail(ErrorKind::BadInput, "target vertex out of range: " + std::to_string(v));
}

Configuration apply_move(const Configuration& c, PebblingMove m,
                         const PricedGraph& g)
{
    if (!g.has_edge(m.from, m.to))
        fail(ErrorKind::BadEdge, "move endpoints are not an edge: " +
                                     std::to_string(m.from) + "->" + std::to_string(m.to));
    std::int64_t price = g.price(m.from);
    if (c.counts[m.from] < price)
        fail(ErrorKind::InsufficientPebbles,
             "vertex " + std::to_string(m.from) + " holds " +
                 std::to_string(c.counts[m.from]) + " pebbles, price is " +
                 std::to_string(price));
    Configuration out = c;
    out.counts[m.from] -= price;
    out.counts[m.to] = checked_add(out.counts[m.to], 1);
    return out;
}

std::vector<PebblingMove> legal_moves(const Configuration& c,
                                      const PricedGraph& g)
{
    std::vector<PebblingMove> moves;
    for (int from = 0; from < g.vertex_count(); ++from)
        if (c.counts[from] >= g.price(from))
            for (int to : g.neighbors(from))
                moves.push_back({from, to});
    return moves; // neighbors are sorted, so this is ascending (from, to)
}

bool covers(const Configuration& c, const TargetSet& targets)
{
    for (int v : targets.vertices)
        if (c.counts[v] < 1)
            return false;
    return true;
}

bool covers(const Configuration& c, const WeightFunction& w)
{
    for (std::size_t v = 0; v < w.weights.size(); ++v)
        if (c.counts[v] < w.weights[v])
            return false;
    return true;
}

namespace {

// C(a, b) with overflow detection.
std::optional<std::uint64_t> try_binomial(std::int64_t a, std::int64_t b)
{
    if (b < 0 || a < b)
        return 0;
    b = std::min(b, a - b);
    unsigned __int128 result = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        result = result * static_cast<unsigned __int128>(a - b + i);
        result /= static_cast<unsigned __int128>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            return std::nullopt;
    }
    return static_cast<std::uint64_t>(result);
}

} // namespace

std::optional<std::uint64_t> try_configuration_count(int n, std::int64_t k)
{
    return try_binomial(k + n - 1, n - 1);
}

std::uint64_t configuration_count(int n, std::int64_t k)
{
    auto c = try_configuration_count(n, k);
    if (!c)
        fail(ErrorKind::Overflow, "configuration count exceeds 64 bits");
    return *c;
}

Configuration ConfigurationStream::at_index(int n, std::int64_t k,
                                            std::uint64_t index)
{
    Configuration c = Configuration::zeros(n);
    std::int64_t remaining = k;
    for (int pos = 0; pos < n - 1; ++pos) {
        // Descending lex: try the largest count first.
        for (std::int64_t v = remaining; v >= 0; --v) {
            std::uint64_t block = configuration_count(n - pos - 1, remaining - v);
            if (index < block) {
                c.counts[pos] = v;
                remaining -= v;
                break;
            }
            index -= block;
        }
    }
    c.counts[n - 1] = remaining;
    return c;
}

std::uint64_t ConfigurationStream::index_of(const Configuration& c)
{
    int n = static_cast<int>(c.counts.size());
    std::int64_t remaining = c.size();
    std::uint64_t rank = 0;
    for (int pos = 0; pos < n - 1; ++pos) {
        for (std::int64_t v = remaining; v > c.counts[pos]; --v)
            rank += configuration_count(n - pos - 1, remaining - v);
        remaining -= c.counts[pos];
    }
    return rank;
}

bool ConfigurationStream::next_in_place(std::vector<std::int64_t>& counts)
{
    int n = static_cast<int>(counts.size());
    int j = -1;
    for (int i = n - 2; i >= 0; --i)
        if (counts[i] > 0) {
            j = i;
            break;
        }
    if (j < 0)
        return false;
    std::int64_t tail = counts[n - 1];
    counts[n - 1] = 0;
    counts[j] -= 1;
    counts[j + 1] += tail + 1;
    return true;
}

ConfigurationStream::ConfigurationStream(int n, std::int64_t k,
                                         std::uint64_t start_index)
{
    if (k < 0)
        fail(ErrorKind::BadInput, "configuration size must be non-negative");
    total_ = configuration_count(n, k);
    index_ = start_index;
    if (index_ >= total_) {
        done_ = true;
        current_ = Configuration::zeros(n);
        return;
    }
    current_ = at_index(n, k, index_);
}

void ConfigurationStream::advance()
{
    if (done_)
        return;
    ++index_;
    if (index_ >= total_ || !next_in_place(current_.counts))
        done_ = true;
}

} // namespace pebble
