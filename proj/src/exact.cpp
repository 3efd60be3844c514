#include "pebble/exact.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pebble/checked.hpp"
#include "pebble/formulas.hpp"

namespace pebble {

namespace {

constexpr std::uint64_t kNoEvent = std::numeric_limits<std::uint64_t>::max();

struct ScanEvent {
    enum class Kind { unsolvable, limit };
    Kind kind = Kind::unsolvable;
    Configuration config;
    std::optional<TargetSet> failing;
};

struct ScanOutcome {
    // Event at the lexicographically first index with one, if any.
    std::optional<ScanEvent> event;
    std::uint64_t event_index = kNoEvent;
    bool truncated = false;        // scanned range was cut short by the budget
    std::uint64_t charged = 0;     // deterministic work charge
};

// Evaluates one configuration; returns an event when it is a counterexample
// or when the per-query state budget is exhausted.
struct Evaluator {
    const PricedGraph& g;
    std::optional<int> t;                 // t-solvability query
    const WeightFunction* weights = nullptr; // weight query
    SolveOptions solve_opts;

    std::optional<ScanEvent> operator()(const Configuration& c) const
    {
        try {
            if (t) {
                auto result = is_t_solvable(c, g, *t, solve_opts);
                if (!result.solvable)
                    return ScanEvent{ScanEvent::Kind::unsolvable, c,
                                     result.failing_target};
            } else {
                auto result = can_reach_spec(c, g, *weights, solve_opts);
                if (!result.solvable)
                    return ScanEvent{ScanEvent::Kind::unsolvable, c, std::nullopt};
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ResourceLimit)
                throw;
            return ScanEvent{ScanEvent::Kind::limit, c, std::nullopt};
        }
        return std::nullopt;
    }
};

// Serial reference scan over configurations of size k, stopping at the
// first event. `limit` restricts the scan to the leading positions the
// budget still allows.
ScanOutcome scan_size_serial(const PricedGraph& g, std::int64_t k,
                             const Evaluator& eval, std::uint64_t limit,
                             std::uint64_t total)
{
    ScanOutcome out;
    std::uint64_t end = std::min(limit, total);
    ConfigurationStream stream(g.vertex_count(), k);
    for (std::uint64_t i = 0; i < end; ++i, stream.advance()) {
        if (auto ev = eval(stream.current())) {
            out.event = std::move(ev);
            out.event_index = i;
            out.charged = i + 1;
            return out;
        }
    }
    out.charged = end;
    out.truncated = end < total;
    return out;
}

// OpenMP scan: blocks of indices are handed to threads; a found event
// cancels every block to its right. The reduced outcome is the event with
// the smallest index, so the answer matches the serial reference exactly.
ScanOutcome scan_size_parallel(const PricedGraph& g, std::int64_t k,
                               const Evaluator& eval, std::uint64_t limit,
                               std::uint64_t total, int threads)
{
    std::uint64_t end = std::min(limit, total);
    if (end == 0) {
        ScanOutcome out;
        out.truncated = total > 0;
        return out;
    }

    constexpr std::uint64_t chunk = 256;
    const std::uint64_t blocks = (end + chunk - 1) / chunk;

    std::atomic<std::uint64_t> first_event{kNoEvent};
    std::mutex detail_mutex;
    ScanEvent best_event;
    std::exception_ptr failure;

#ifdef _OPENMP
    int requested = threads > 0 ? threads : omp_get_max_threads();
#else
    int requested = 1;
    (void)threads;
#endif

#pragma omp parallel for schedule(dynamic) num_threads(requested)
    for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
        std::uint64_t lo = static_cast<std::uint64_t>(b) * chunk;
        if (first_event.load(std::memory_order_relaxed) < lo)
            continue; // an earlier event already decides the scan
        std::uint64_t hi = std::min(lo + chunk, end);
        try {
            ConfigurationStream stream(g.vertex_count(), k, lo);
            for (std::uint64_t i = lo; i < hi; ++i, stream.advance()) {
                if (first_event.load(std::memory_order_relaxed) < i)
                    break;
                auto ev = eval(stream.current());
                if (!ev)
                    continue;
                std::uint64_t seen = first_event.load(std::memory_order_relaxed);
                while (i < seen &&
                       !first_event.compare_exchange_weak(seen, i,
                                                          std::memory_order_relaxed)) {
                }
                std::scoped_lock lock(detail_mutex);
                if (first_event.load(std::memory_order_relaxed) == i)
                    best_event = std::move(*ev);
                break;
            }
        } catch (...) {
            std::scoped_lock lock(detail_mutex);
            if (!failure)
                failure = std::current_exception();
            first_event.store(0, std::memory_order_relaxed); // stop everyone
        }
    }

    if (failure)
        std::rethrow_exception(failure);

    ScanOutcome out;
    std::uint64_t idx = first_event.load();
    if (idx != kNoEvent) {
        out.event = std::move(best_event);
        out.event_index = idx;
        out.charged = idx + 1;
        return out;
    }
    out.charged = end;
    out.truncated = end < total;
    return out;
}

class SizeScanner {
public:
    SizeScanner(const PricedGraph& g, Evaluator eval, const ExactOptions& opts) :
        g_(g), eval_(std::move(eval)), opts_(opts), remaining_(opts.budget_configs)
    {
    }

    // Scans size k; throws ResourceLimit when the verdict for k cannot be
    // reached within the remaining budget.
    std::optional<ScanEvent> scan(std::int64_t k)
    {
        auto total = try_configuration_count(g_.vertex_count(), k);
        if (!total)
            fail(ErrorKind::ResourceLimit,
                 "configuration count at size " + std::to_string(k) +
                     " exceeds 64 bits");
        ScanOutcome out =
            opts_.policy == ExecutionPolicy::serial
                ? scan_size_serial(g_, k, eval_, remaining_, *total)
                : scan_size_parallel(g_, k, eval_, remaining_, *total, opts_.threads);
        charged_ += out.charged;
        remaining_ -= out.charged;
        if (out.event && out.event->kind == ScanEvent::Kind::limit)
            fail(ErrorKind::ResourceLimit,
                 "solver state budget exceeded at size " + std::to_string(k) +
                     ", configuration " + out.event->config.str());
        if (!out.event && out.truncated)
            fail(ErrorKind::ResourceLimit,
                 "configuration budget exhausted while scanning size " +
                     std::to_string(k));
        return out.event ? std::optional<ScanEvent>(std::move(out.event.value()))
                         : std::nullopt;
    }

    std::uint64_t charged() const { return charged_; }

private:
    const PricedGraph& g_;
    Evaluator eval_;
    ExactOptions opts_;
    std::uint64_t remaining_;
    std::uint64_t charged_ = 0;
};

// Ascending search with certification: descend from the starting hint until
// a size with a counterexample is in hand, then ascend until a size scans
// clean. The starting hint is only a time saver; a wrong hint is detected
// and corrected, never trusted.
NumberResult search_threshold(SizeScanner& scanner, std::int64_t start,
                              std::int64_t floor, const SpecTarget& spec)
{
    std::int64_t k = std::max(start, floor);
    std::optional<ScanEvent> witness;

    while (k > floor) {
        auto event = scanner.scan(k - 1);
        if (event) {
            witness = std::move(event);
            break;
        }
        --k; // size k-1 proved all-solvable, the hint overshot
    }
    if (!witness) {
        // k == floor: a configuration of size floor-1 cannot possibly meet
        // the demand, so this scan terminates at the very first index.
        witness = scanner.scan(k - 1);
        if (!witness)
            fail(ErrorKind::DomainError,
                 "internal: no counterexample below the search floor");
    }

    while (true) {
        auto event = scanner.scan(k);
        if (!event)
            break;
        witness = std::move(event);
        ++k;
    }

    NumberResult result;
    result.value = k;
    result.witness_config = std::move(witness->config);
    if (witness->failing)
        result.witness_spec = SpecTarget(std::move(*witness->failing));
    else
        result.witness_spec = spec;
    result.configs_examined = scanner.charged();
    return result;
}

} // namespace

NumberResult pebbling_number(const PricedGraph& g, int t, const ExactOptions& opts)
{
    int n = g.vertex_count();
    if (t < 1 || t > n)
        fail(ErrorKind::DomainError, "t must be between 1 and the vertex count");

    SolveOptions solve_opts{opts.use_pruning, opts.budget_states};
    Evaluator eval{g, t, nullptr, solve_opts};
    SizeScanner scanner(g, eval, opts);

    // Any configuration of size t-1 is too small to cover t vertices, so
    // the search floor is t; the spread bound seeds the start when it
    // applies.
    std::int64_t start = t;
    if (t <= n - 1)
        start = std::max(start, lower_bound_spread(g, t));

    // The witness spec below is only a fallback; t-queries always carry a
    // concrete failing target set.
    return search_threshold(scanner, start, t, SpecTarget(TargetSet::of({})));
}

NumberResult weighted_cover_number(const PricedGraph& g, const WeightFunction& w,
                                   const ExactOptions& opts)
{
    validate_on_graph(w, g);
    if (w.size() == 0) {
        NumberResult result;
        result.value = 0;
        return result; // every configuration meets an all-zero demand
    }

    SolveOptions solve_opts{opts.use_pruning, opts.budget_states};
    Evaluator eval{g, std::nullopt, &w, solve_opts};
    SizeScanner scanner(g, eval, opts);
    return search_threshold(scanner, w.size(), w.size(), SpecTarget(w));
}

CriticalSet critical_configurations(const PricedGraph& g, int t,
                                    const ExactOptions& opts)
{
    auto number = pebbling_number(g, t, opts);

    CriticalSet out;
    out.pi = number.value;
    out.member_size = number.value - 1;

    SolveOptions solve_opts{opts.use_pruning, opts.budget_states};
    std::uint64_t total = configuration_count(g.vertex_count(), out.member_size);
    if (total > opts.budget_configs - std::min<std::uint64_t>(
                    opts.budget_configs, number.configs_examined))
        fail(ErrorKind::ResourceLimit,
             "configuration budget too small to enumerate the critical set");

    std::vector<std::vector<std::pair<std::uint64_t, std::pair<Configuration, TargetSet>>>>
        found;
#ifdef _OPENMP
    int requested = opts.policy == ExecutionPolicy::serial ? 1
                    : opts.threads > 0                     ? opts.threads
                                                           : omp_get_max_threads();
#else
    int requested = 1;
#endif
    found.resize(static_cast<std::size_t>(std::max(requested, 1)));

    constexpr std::uint64_t chunk = 256;
    const std::uint64_t blocks = (total + chunk - 1) / chunk;
    std::exception_ptr failure;
    std::mutex failure_mutex;

#pragma omp parallel for schedule(dynamic) num_threads(requested)
    for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
#ifdef _OPENMP
        auto& mine = found[static_cast<std::size_t>(omp_get_thread_num())];
#else
        auto& mine = found[0];
#endif
        std::uint64_t lo = static_cast<std::uint64_t>(b) * chunk;
        std::uint64_t hi = std::min(lo + chunk, total);
        try {
            ConfigurationStream stream(g.vertex_count(), out.member_size, lo);
            for (std::uint64_t i = lo; i < hi; ++i, stream.advance()) {
                auto result = is_t_solvable(stream.current(), g, t, solve_opts);
                if (!result.solvable)
                    mine.push_back({i, {stream.current(), *result.failing_target}});
            }
        } catch (...) {
            std::scoped_lock lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<std::pair<std::uint64_t, std::pair<Configuration, TargetSet>>> merged;
    for (auto& part : found)
        for (auto& item : part)
            merged.push_back(std::move(item));
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& item : merged)
        out.members.push_back(std::move(item.second));
    return out;
}

} // namespace pebble
