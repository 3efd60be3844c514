#include "pebble/audit.hpp"

#include <algorithm>

#include "pebble/checked.hpp"
#include "pebble/solver.hpp"

namespace pebble {

const char* to_string(Verdict verdict)
{
    switch (verdict) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::confirmed_at_scale: return "confirmed-at-scale";
        case Verdict::refuted_at_scale: return "refuted-at-scale";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

const char* to_string(SeriesKind kind)
{
    switch (kind) {
        case SeriesKind::rho: return "rho";
        case SeriesKind::alpha: return "alpha";
        case SeriesKind::beta_estimate: return "beta-estimate";
    }
    return "unknown";
}

const char* to_string(ValueSource source)
{
    switch (source) {
        case ValueSource::oracle: return "oracle";
        case ValueSource::formula: return "formula";
        case ValueSource::estimate: return "estimate";
    }
    return "unknown";
}

nlohmann::ordered_json rat_json(const Rat& value)
{
    return {{"num", value.num()}, {"den", value.den()}};
}

nlohmann::ordered_json to_json(const ClaimVerdict& verdict)
{
    nlohmann::ordered_json out;
    out["claim"] = verdict.claim;
    out["paper_value"] = verdict.paper_value;
    out["computed_value"] = verdict.computed_value;
    out["verdict"] = to_string(verdict.verdict);
    out["witness"] = verdict.witness;
    return out;
}

nlohmann::ordered_json to_json(const std::vector<ClaimVerdict>& verdicts)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& v : verdicts)
        out.push_back(to_json(v));
    return out;
}

nlohmann::ordered_json to_json(const RatioSeries& series)
{
    nlohmann::ordered_json out;
    out["kind"] = to_string(series.kind);
    out["subject"] = series.subject;
    if (series.kind == SeriesKind::alpha)
        out["t"] = series.t;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : series.entries) {
        nlohmann::ordered_json row;
        row["index"] = e.index;
        row["pi_t"] = e.pi_lo;
        row["pi_t_plus_1"] = e.pi_hi;
        row["ratio"] = rat_json(e.ratio);
        row["source"] = to_string(e.source);
        entries.push_back(row);
    }
    out["entries"] = entries;
    return out;
}

namespace {

nlohmann::ordered_json config_json(const Configuration& c)
{
    return nlohmann::ordered_json(c.counts);
}

nlohmann::ordered_json spec_json(const SpecTarget& spec)
{
    if (std::holds_alternative<TargetSet>(spec))
        return {{"targets", std::get<TargetSet>(spec).vertices}};
    return {{"weights", std::get<WeightFunction>(spec).weights}};
}

nlohmann::ordered_json number_witness_json(const NumberResult& r)
{
    nlohmann::ordered_json out;
    out["value"] = r.value;
    if (r.witness_config) {
        out["unsolvable_config"] = config_json(*r.witness_config);
        out["fails"] = r.witness_spec ? spec_json(*r.witness_spec)
                                      : nlohmann::ordered_json();
    }
    return out;
}

std::string graph_key(const PricedGraph& g) { return g.to_json_text(); }

} // namespace

NumberResult OracleCache::pi(const PricedGraph& g, int t, const ExactOptions& opts)
{
    std::pair<std::string, std::string> key{graph_key(g), "pi:" + std::to_string(t)};
    {
        std::scoped_lock lock(mutex_);
        auto it = values_.find(key);
        if (it != values_.end())
            return it->second;
    }
    auto result = pebbling_number(g, t, opts);
    std::scoped_lock lock(mutex_);
    return values_.emplace(std::move(key), std::move(result)).first->second;
}

NumberResult OracleCache::gamma(const PricedGraph& g, const WeightFunction& w,
                                const ExactOptions& opts)
{
    std::pair<std::string, std::string> key{graph_key(g), "gamma:" + w.str()};
    {
        std::scoped_lock lock(mutex_);
        auto it = values_.find(key);
        if (it != values_.end())
            return it->second;
    }
    auto result = weighted_cover_number(g, w, opts);
    std::scoped_lock lock(mutex_);
    return values_.emplace(std::move(key), std::move(result)).first->second;
}

RatioSeries rho_series(const PricedGraph& g, const AuditOptions& opts,
                       OracleCache& cache)
{
    RatioSeries out;
    out.kind = SeriesKind::rho;
    out.subject = g.describe();
    int n = g.vertex_count();
    for (int t = 1; t + 1 <= n; ++t) {
        auto lo = cache.pi(g, t, opts.exact);
        auto hi = cache.pi(g, t + 1, opts.exact);
        out.entries.push_back(
            {t, lo.value, hi.value, Rat(hi.value, lo.value), ValueSource::oracle});
    }
    return out;
}

namespace {

// pi^t of a family member by closed form, for entries beyond the oracle
// range. Star members only support t up to the leaf count.
std::optional<std::int64_t> family_formula_pi(Family family, int n, int t)
{
    switch (family) {
        case Family::path: {
            auto g = make_path(n);
            if (t < 1 || t > n)
                return std::nullopt;
            return pi_path(g, t).value;
        }
        case Family::complete: {
            auto g = make_complete(n);
            if (t < 1 || t > n)
                return std::nullopt;
            return pi_complete(g, t).value;
        }
        case Family::star: {
            if (t < 1 || t > n)
                return std::nullopt;
            auto g = make_star(n);
            return pi_star(g, t).value;
        }
    }
    return std::nullopt;
}

} // namespace

RatioSeries alpha_sequence(Family family, int t, int n_max,
                           const AuditOptions& opts, OracleCache& cache)
{
    if (t < 1)
        fail(ErrorKind::DomainError, "alpha sequence requires t >= 1");
    RatioSeries out;
    out.kind = SeriesKind::alpha;
    out.subject = family_name(family);
    out.t = t;

    // Smallest member for which both pi^t and pi^{t+1} are defined: the
    // member needs at least t+1 vertices.
    int n_start = std::max(2, family == Family::star ? t : t + 1);
    for (int n = n_start; n <= n_max; ++n) {
        if (n <= opts.oracle_n_max) {
            auto member = make_family_member(family, n);
            auto lo = cache.pi(member, t, opts.exact);
            auto hi = cache.pi(member, t + 1, opts.exact);
            out.entries.push_back(
                {n, lo.value, hi.value, Rat(hi.value, lo.value), ValueSource::oracle});
        } else {
            auto lo = family_formula_pi(family, n, t);
            auto hi = family_formula_pi(family, n, t + 1);
            if (!lo || !hi)
                break; // no closed form for this member; stop the series
            out.entries.push_back({n, *lo, *hi, Rat(*hi, *lo), ValueSource::formula});
        }
    }
    return out;
}

RatioSeries beta_estimate(Family family, int t_max, int n_max,
                          const AuditOptions& opts, OracleCache& cache)
{
    RatioSeries out;
    out.kind = SeriesKind::beta_estimate;
    out.subject = family_name(family);
    for (int t = 1; t <= t_max; ++t) {
        auto alpha = alpha_sequence(family, t, n_max, opts, cache);
        if (alpha.entries.empty())
            continue;
        const auto& last = alpha.entries.back();
        out.entries.push_back({t, last.pi_lo, last.pi_hi, last.ratio,
                               ValueSource::estimate});
    }
    return out;
}

ClaimVerdict limit_verdict(const RatioSeries& series, const Rat& claimed_limit,
                           const Rat& tolerance)
{
    ClaimVerdict out;
    out.claim = std::string("ratio-limit(") + series.subject + ")";
    out.paper_value = rat_json(claimed_limit);
    out.witness = to_json(series);

    if (series.entries.empty()) {
        out.verdict = Verdict::inconclusive;
        return out;
    }
    std::vector<Rat> values;
    for (const auto& e : series.entries)
        values.push_back(e.ratio);
    out.computed_value = rat_json(values.back());

    bool constant = std::all_of(values.begin(), values.end(),
                                [&](const Rat& v) { return v == values.front(); });
    if (constant) {
        out.verdict = values.front() == claimed_limit ? Verdict::confirmed_at_scale
                                                      : Verdict::refuted_at_scale;
        return out;
    }

    std::vector<Rat> distance;
    for (const auto& v : values)
        distance.push_back((v - claimed_limit).abs());
    bool shrinking = true, growing = true;
    for (std::size_t i = 0; i + 1 < distance.size(); ++i) {
        if (distance[i] < distance[i + 1])
            shrinking = false;
        if (distance[i] > distance[i + 1])
            growing = false;
    }
    if (shrinking && distance.back() <= tolerance)
        out.verdict = Verdict::confirmed_at_scale;
    else if (growing && distance.back() > tolerance)
        out.verdict = Verdict::refuted_at_scale;
    else
        out.verdict = Verdict::inconclusive;
    return out;
}

ClaimVerdict check_cover_increment_identity(const PricedGraph& g,
                                            const AuditOptions& opts,
                                            OracleCache& cache)
{
    int n = g.vertex_count();
    ClaimVerdict out;
    out.claim = "cover-increment-identity";
    if (n < 2) {
        out.verdict = Verdict::inconclusive;
        out.witness = "needs at least two vertices";
        return out;
    }
    auto penultimate = cache.pi(g, n - 1, opts.exact);
    auto cover = cache.pi(g, n, opts.exact);
    out.paper_value = penultimate.value + 1;
    out.computed_value = cover.value;
    out.verdict = penultimate.value + 1 == cover.value ? Verdict::confirmed
                                                       : Verdict::refuted_at_scale;
    out.witness = {{"pi_penultimate", number_witness_json(penultimate)},
                   {"pi_cover", number_witness_json(cover)}};
    return out;
}

ClaimVerdict check_cover_theorem(const PricedGraph& g, const WeightFunction& w,
                                 const AuditOptions& opts, OracleCache& cache)
{
    ClaimVerdict out;
    out.claim = "simple-cover-witness(w=" + w.str() + ")";
    if (w.size() == 0) {
        out.verdict = Verdict::inconclusive;
        out.witness = "all-zero weights have cover number 0";
        return out;
    }
    auto gamma = cache.gamma(g, w, opts.exact);
    out.computed_value = gamma.value;

    SolveOptions solve_opts{opts.exact.use_pruning, opts.exact.budget_states};
    auto costs = nlohmann::ordered_json::array();
    std::optional<int> witness_vertex;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::int64_t cost = simple_config_cost(g, w, v, solve_opts);
        costs.push_back({{"vertex", v}, {"min_solvable_stack", cost}});
        if (!witness_vertex && cost == gamma.value)
            witness_vertex = v; // the stack of gamma-1 pebbles on v fails w
    }
    out.paper_value = "a single-vertex stack of size gamma-1 fails the weights";
    out.verdict = witness_vertex ? Verdict::confirmed : Verdict::refuted_at_scale;
    nlohmann::ordered_json witness;
    witness["weights_positive"] = w.positive();
    witness["gamma"] = gamma.value;
    witness["stack_costs"] = costs;
    if (witness_vertex) {
        witness["witness_vertex"] = *witness_vertex;
        witness["witness_stack_size"] = gamma.value - 1;
    }
    out.witness = witness;
    return out;
}

ShapeMatch critical_shape(const Configuration& c, const PricedGraph& g)
{
    ShapeMatch out;
    std::optional<int> free_vertex;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::int64_t count = c.counts[v];
        if (count == 0 || count == g.price(v) - 1)
            continue;
        if (free_vertex)
            return out; // two exceptional vertices: no match
        free_vertex = v;
    }
    out.matches = true;
    out.free_vertex = free_vertex;
    return out;
}

namespace {

bool bare_geodesic_exists(const Configuration& c, const PricedGraph& g, int cur,
                          int goal)
{
    if (cur == goal)
        return true;
    for (int w : g.neighbors(cur))
        if (g.distance(w, goal) == g.distance(cur, goal) - 1 && c.counts[w] == 0 &&
            bare_geodesic_exists(c, g, w, goal))
            return true;
    return false;
}

} // namespace

bool critical_shape_path_condition(const Configuration& c, const PricedGraph& g,
                                   int r)
{
    int d = g.diameter();
    for (int s = 0; s < g.vertex_count(); ++s)
        if (s != r && g.distance(r, s) == d && c.counts[s] == 0 &&
            bare_geodesic_exists(c, g, r, s))
            return true;
    return false;
}

ClaimVerdict check_critical_shape(const PricedGraph& g, int t,
                                  const AuditOptions& opts, OracleCache& cache)
{
    ClaimVerdict out;
    out.claim = "critical-shape(t=" + std::to_string(t) + ")";
    out.paper_value =
        "some critical configuration has every count 0 or price-1 except at "
        "most one vertex";

    auto critical = critical_configurations(g, t, opts.exact);
    (void)cache;
    out.computed_value = {{"pi", critical.pi},
                          {"critical_count", critical.members.size()}};

    bool standard = g.standard_price();
    const std::pair<Configuration, TargetSet>* match = nullptr;
    std::optional<int> match_free;
    for (const auto& member : critical.members) {
        auto shape = critical_shape(member.first, g);
        if (!shape.matches)
            continue;
        if (standard && shape.free_vertex &&
            !critical_shape_path_condition(member.first, g, *shape.free_vertex))
            continue;
        match = &member;
        match_free = shape.free_vertex;
        break;
    }

    nlohmann::ordered_json witness;
    witness["critical_size"] = critical.member_size;
    if (match) {
        out.verdict = Verdict::confirmed;
        witness["matching_config"] = config_json(match->first);
        witness["fails_targets"] = match->second.vertices;
        if (match_free)
            witness["free_vertex"] = *match_free;
    } else {
        out.verdict = Verdict::refuted_at_scale;
        auto members = nlohmann::ordered_json::array();
        std::size_t limit = std::min<std::size_t>(critical.members.size(), 64);
        for (std::size_t i = 0; i < limit; ++i)
            members.push_back(config_json(critical.members[i].first));
        witness["critical_members"] = members;
        witness["listed"] = limit;
    }
    out.witness = witness;
    return out;
}

namespace {

ClaimVerdict compare_to_oracle(std::string claim, std::int64_t formula_value,
                               const NumberResult& oracle,
                               nlohmann::ordered_json extra = {})
{
    ClaimVerdict out;
    out.claim = std::move(claim);
    out.paper_value = formula_value;
    out.computed_value = oracle.value;
    out.verdict = formula_value == oracle.value ? Verdict::confirmed
                                                : Verdict::refuted_at_scale;
    nlohmann::ordered_json witness = number_witness_json(oracle);
    for (auto& [key, value] : extra.items())
        witness[key] = value;
    out.witness = witness;
    return out;
}

ClaimVerdict bound_claim(std::string claim, std::int64_t bound,
                         const NumberResult& oracle, bool is_lower,
                         nlohmann::ordered_json extra = {})
{
    ClaimVerdict out;
    out.claim = std::move(claim);
    out.paper_value = bound;
    out.computed_value = oracle.value;
    bool holds = is_lower ? bound <= oracle.value : oracle.value <= bound;
    out.verdict = holds ? Verdict::confirmed : Verdict::refuted_at_scale;
    nlohmann::ordered_json witness = number_witness_json(oracle);
    for (auto& [key, value] : extra.items())
        witness[key] = value;
    out.witness = witness;
    return out;
}

} // namespace

std::vector<ClaimVerdict> audit_graph(const PricedGraph& g, int t_lo, int t_hi,
                                      const AuditOptions& opts, OracleCache& cache)
{
    int n = g.vertex_count();
    t_lo = std::max(t_lo, 1);
    t_hi = std::min(t_hi, n);
    std::vector<ClaimVerdict> out;

    bool complete = g.is_complete() && n >= 2;
    bool path = g.is_path() && n >= 2;
    int star_leaves = g.is_star() ? n - 1 : 0;

    for (int t = t_lo; t <= t_hi; ++t) {
        std::string suffix = "(t=" + std::to_string(t) + ")";
        auto oracle = cache.pi(g, t, opts.exact);

        if (t <= n - 1)
            out.push_back(bound_claim("spread-lower-bound" + suffix,
                                      lower_bound_spread(g, t), oracle, true));
        if (g.diameter() >= 1 && (t <= g.diameter() || t <= n - 1)) {
            auto stack = lower_bound_stack_detail(g, t);
            nlohmann::ordered_json extra;
            extra["literal_reading"] = stack.literal_value;
            extra["literal_reading_is_lower_bound"] =
                stack.literal_value <= oracle.value;
            extra["chosen_path"] = stack.path;
            out.push_back(bound_claim("stack-lower-bound" + suffix, stack.value,
                                      oracle, true, extra));
        }
        out.push_back(bound_claim("pigeonhole-upper-bound" + suffix,
                                  upper_bound(g, t), oracle, false));

        if (complete) {
            auto formula = pi_complete(g, t);
            out.push_back(compare_to_oracle(
                "complete-closed-form" + suffix, formula.value, oracle,
                {{"via_cover_identity", formula.via_cover_identity}}));
            if (g.standard_price())
                out.push_back(compare_to_oracle("complete-alt-closed-form" + suffix,
                                                complete_alt_closed_form(n, t),
                                                oracle));
        }
        if (path) {
            auto formula = pi_path(g, t);
            out.push_back(compare_to_oracle(
                "path-closed-form" + suffix, formula.value, oracle,
                {{"via_cover_identity", formula.via_cover_identity}}));
        }
        if (star_leaves >= 2 && t <= star_leaves) {
            auto formula = pi_star(g, t);
            out.push_back(compare_to_oracle("star-closed-form" + suffix,
                                            formula.value, oracle));
            if (g.standard_price()) {
                out.push_back(compare_to_oracle("star-linear-form" + suffix,
                                                star_linear_form(star_leaves, t),
                                                oracle));
                if (t == star_leaves) {
                    // The two published star forms disagree with each other
                    // at t = leaves; report the three-way comparison.
                    ClaimVerdict three;
                    three.claim = "star-all-leaves-comparison";
                    three.paper_value = {
                        {"closed_form", formula.value},
                        {"linear_form", star_linear_form(star_leaves, t)}};
                    three.computed_value = oracle.value;
                    three.verdict = (formula.value == oracle.value ||
                                     star_linear_form(star_leaves, t) == oracle.value)
                                        ? Verdict::confirmed
                                        : Verdict::refuted_at_scale;
                    three.witness = number_witness_json(oracle);
                    out.push_back(three);
                }
            }
        }

        out.push_back(check_critical_shape(g, t, opts, cache));
    }

    if (n >= 2)
        out.push_back(check_cover_increment_identity(g, opts, cache));

    out.push_back(check_cover_theorem(g, WeightFunction::ones(n), opts, cache));
    if (n >= 2 && n <= 4) {
        auto zero_first = WeightFunction::ones(n);
        zero_first.weights[0] = 0;
        out.push_back(check_cover_theorem(g, zero_first, opts, cache));
        auto zero_last = WeightFunction::ones(n);
        zero_last.weights[n - 1] = 0;
        out.push_back(check_cover_theorem(g, zero_last, opts, cache));
    }
    return out;
}

std::vector<ClaimVerdict> audit_family(Family family, int n, int t_lo, int t_hi,
                                       const AuditOptions& opts, OracleCache& cache)
{
    auto member = make_family_member(family, n);
    auto out = audit_graph(member, t_lo, t_hi, opts, cache);

    int max_t = std::min(t_hi, member.vertex_count() - 1);
    for (int t = std::max(1, t_lo); t <= max_t; ++t) {
        std::string suffix = "(t=" + std::to_string(t) + ")";
        auto series = alpha_sequence(family, t, n, opts, cache);
        switch (family) {
            case Family::path: {
                ClaimVerdict claim;
                claim.claim = "path-ratio-constant" + suffix;
                claim.paper_value = rat_json(path_ratio_claimed_constant(t));
                claim.witness = to_json(series);
                if (series.entries.empty()) {
                    claim.verdict = Verdict::inconclusive;
                } else {
                    bool constant = std::all_of(
                        series.entries.begin(), series.entries.end(),
                        [&](const RatioEntry& e) {
                            return e.ratio == series.entries.front().ratio;
                        });
                    claim.computed_value = rat_json(series.entries.front().ratio);
                    claim.verdict =
                        constant && series.entries.front().ratio ==
                                        path_ratio_claimed_constant(t)
                            ? Verdict::confirmed
                            : Verdict::refuted_at_scale;
                }
                out.push_back(claim);
                break;
            }
            case Family::complete: {
                auto claim = limit_verdict(series, Rat(2), opts.limit_tolerance);
                claim.claim = "complete-ratio-limit-2" + suffix;
                // The alternative closed form behind the limit claim, for
                // the same member range.
                auto alt = nlohmann::ordered_json::array();
                for (const auto& e : series.entries) {
                    std::int64_t lo = complete_alt_closed_form(e.index, t);
                    std::int64_t hi = complete_alt_closed_form(e.index, t + 1);
                    alt.push_back({{"index", e.index},
                                   {"pi_t", lo},
                                   {"pi_t_plus_1", hi},
                                   {"ratio", rat_json(Rat(hi, lo))}});
                }
                claim.witness["alt_formula_ratios"] = alt;
                out.push_back(claim);
                break;
            }
            case Family::star: {
                auto claim = limit_verdict(series, Rat(1), opts.limit_tolerance);
                claim.claim = "star-ratio-limit-1" + suffix;
                out.push_back(claim);
                break;
            }
        }
    }
    return out;
}

Rat path_ratio_claimed_constant(int t)
{
    std::int64_t num = checked_sub(checked_pow2(t + 2), 1);
    std::int64_t den = checked_mul(2, checked_sub(checked_pow2(t), 1));
    return Rat(num, den);
}

std::int64_t complete_alt_closed_form(int n, int t)
{
    std::int64_t value = checked_sub(n, t);
    value = checked_add(value, checked_mul(checked_pow2(n), t - 1));
    return checked_add(value, 1);
}

std::int64_t star_linear_form(int leaves, int t)
{
    return checked_add(checked_mul(3, static_cast<std::int64_t>(t)), leaves - 1);
}

} // namespace pebble
