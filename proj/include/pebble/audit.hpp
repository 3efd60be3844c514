#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pebble/exact.hpp"
#include "pebble/families.hpp"
#include "pebble/formulas.hpp"
#include "pebble/graph.hpp"
#include "pebble/rational.hpp"

// Mechanical cross-check of published claims against the exact search.
// Verdicts about limits are always "at scale": finitely many terms cannot
// establish a limit, so the report carries the prefix evidence and says
// whether it is consistent with the claim, never more. All ratio values are
// exact rationals; no verdict logic touches floating point.

namespace pebble {

enum class Verdict {
    confirmed,
    confirmed_at_scale,
    refuted_at_scale,
    inconclusive,
};

const char* to_string(Verdict verdict);

struct ClaimVerdict {
    std::string claim;
    nlohmann::ordered_json paper_value;
    nlohmann::ordered_json computed_value;
    Verdict verdict = Verdict::inconclusive;
    nlohmann::ordered_json witness; // machine-checkable evidence
};

nlohmann::ordered_json to_json(const ClaimVerdict& verdict);
nlohmann::ordered_json to_json(const std::vector<ClaimVerdict>& verdicts);
nlohmann::ordered_json rat_json(const Rat& value); // {"num":..,"den":..}

enum class SeriesKind { rho, alpha, beta_estimate };
enum class ValueSource { oracle, formula, estimate };

const char* to_string(SeriesKind kind);
const char* to_string(ValueSource source);

struct RatioEntry {
    int index = 0;           // t for rho/beta, family index n for alpha
    std::int64_t pi_lo = 0;  // the two values whose ratio this is
    std::int64_t pi_hi = 0;
    Rat ratio;
    ValueSource source = ValueSource::oracle;
};

struct RatioSeries {
    SeriesKind kind = SeriesKind::rho;
    std::string subject; // graph description or family name
    int t = 0;           // fixed t for alpha series
    std::vector<RatioEntry> entries;
};

nlohmann::ordered_json to_json(const RatioSeries& series);

struct AuditOptions {
    ExactOptions exact;
    /// Family members up to this index get oracle values; larger members
    /// fall back to the audited closed forms (flagged per entry).
    int oracle_n_max = 5;
    Rat limit_tolerance{1, 4};
};

/// Memoized exact values shared by the audit checks. Thread-safe.
class OracleCache {
public:
    NumberResult pi(const PricedGraph& g, int t, const ExactOptions& opts);
    NumberResult gamma(const PricedGraph& g, const WeightFunction& w,
                       const ExactOptions& opts);

private:
    std::map<std::pair<std::string, std::string>, NumberResult> values_;
    std::mutex mutex_;
};

/// Successive ratios pi^{t+1}/pi^t on one graph, t = 1..n-1.
RatioSeries rho_series(const PricedGraph& g, const AuditOptions& opts,
                       OracleCache& cache);

/// The fixed-t ratio across a standard-price family as the index grows.
RatioSeries alpha_sequence(Family family, int t, int n_max,
                           const AuditOptions& opts, OracleCache& cache);

/// Last-term estimates of the alpha limit for t = 1..t_max; every entry is
/// an at-scale estimate, not a limit.
RatioSeries beta_estimate(Family family, int t_max, int n_max,
                          const AuditOptions& opts, OracleCache& cache);

/// At-scale comparison of a ratio series against a claimed limit.
ClaimVerdict limit_verdict(const RatioSeries& series, const Rat& claimed_limit,
                           const Rat& tolerance);

/// The cover-number increment identity: pi^{n} = pi^{n-1} + 1, checked
/// exactly from oracle values.
ClaimVerdict check_cover_increment_identity(const PricedGraph& g,
                                            const AuditOptions& opts,
                                            OracleCache& cache);

/// Whether a single-vertex stack of size gamma-1 fails the weights, the
/// simple-witness property behind the cover pebbling theorem. Runs on any
/// weights; for non-positive weights the outcome is recorded as evidence.
ClaimVerdict check_cover_theorem(const PricedGraph& g, const WeightFunction& w,
                                 const AuditOptions& opts, OracleCache& cache);

/// Shape predicate for critical configurations: every count is 0 or
/// price-1, except at most one free vertex. Pure function, solver-free.
struct ShapeMatch {
    bool matches = false;
    std::optional<int> free_vertex;
};
ShapeMatch critical_shape(const Configuration& c, const PricedGraph& g);

/// Standard-price side condition: the free vertex r sees some vertex s at
/// diameter distance along a geodesic carrying no pebbles outside r.
bool critical_shape_path_condition(const Configuration& c, const PricedGraph& g,
                                   int r);

/// Scans the complete critical set for a shape-matching member.
ClaimVerdict check_critical_shape(const PricedGraph& g, int t,
                                  const AuditOptions& opts, OracleCache& cache);

/// Every applicable per-graph check over a t range, in deterministic order.
std::vector<ClaimVerdict> audit_graph(const PricedGraph& g, int t_lo, int t_hi,
                                      const AuditOptions& opts, OracleCache& cache);

/// audit_graph on the family member of index n plus the family-level ratio
/// claims with members up to n.
std::vector<ClaimVerdict> audit_family(Family family, int n, int t_lo, int t_hi,
                                       const AuditOptions& opts, OracleCache& cache);

// Closed forms published for the standard-price families' ratio section.
Rat path_ratio_claimed_constant(int t);               // (2^{t+2}-1)/(2(2^t-1))
std::int64_t complete_alt_closed_form(int n, int t);  // n-t+2^n(t-1)+1
std::int64_t star_linear_form(int leaves, int t);     // 3t+leaves-1

} // namespace pebble
