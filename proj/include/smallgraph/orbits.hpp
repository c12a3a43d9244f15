#pragma once

// Group actions on cycles and disjoint 6-cycle pairs, and orbit
// partitioning by breadth-first closure under generators.

#include <cstddef>
#include <string>
#include <vector>

#include "smallgraph/cycles.hpp"
#include "smallgraph/perm.hpp"

namespace smallgraph {

// Applies p to every vertex label, then re-canonicalizes. Requires every
// label of c to lie in 1..p.degree().
Cycle act_on_cycle(const Permutation& p, const Cycle& c);

DisjointPair act_on_pair(const Permutation& p, const DisjointPair& pr);

struct OrbitPartition {
    std::string family_kind;
    std::size_t group_order = 0;
    // Indices into the input family; each orbit sorted, orbits ordered by
    // smallest member.
    std::vector<std::vector<std::size_t>> orbits;

    bool transitive() const { return orbits.size() == 1; }
    std::vector<std::size_t> orbit_sizes() const;
};

// Throws std::logic_error if a generator maps a member outside the family
// (the family would not be closed, which signals an enumeration bug).
OrbitPartition orbit_partition(const PermGroup& grp, const std::vector<Cycle>& family,
                               const std::string& family_kind);
OrbitPartition orbit_partition(const PermGroup& grp, const std::vector<DisjointPair>& family,
                               const std::string& family_kind);

bool is_transitive(const PermGroup& grp, const std::vector<Cycle>& family);
bool is_transitive(const PermGroup& grp, const std::vector<DisjointPair>& family);

}  // namespace smallgraph
