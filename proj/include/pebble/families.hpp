#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pebble/graph.hpp"

// Generators for the named graph families. Kept out of the core so the
// graph type stays generator-free; the CLI and the audit layer share these.

namespace pebble {

enum class Family { path, complete, star };

Family family_from_name(const std::string& name);
const char* family_name(Family family);

/// P_n on vertices 0..n-1 in chain order.
PricedGraph make_path(int n, std::vector<std::int64_t> prices = {});
/// K_n.
PricedGraph make_complete(int n, std::vector<std::int64_t> prices = {});
/// Star with `leaves` leaves: vertex 0 is the center, 1..leaves the leaves.
/// Note the family index counts leaves, so the graph has leaves+1 vertices.
PricedGraph make_star(int leaves, std::vector<std::int64_t> prices = {});
/// Cycle C_n.
PricedGraph make_cycle(int n, std::vector<std::int64_t> prices = {});

/// The family member of index n (path/complete: n vertices; star: n leaves).
PricedGraph make_family_member(Family family, int n,
                               std::vector<std::int64_t> prices = {});

/// Number of vertices of the family member of index n.
int family_member_vertices(Family family, int n);

} // namespace pebble
