#pragma once

// Exhaustive simple-cycle enumeration and counting for small graphs.
//
// A cycle is stored in canonical rotation: smallest label first, then the
// direction whose second element is smaller than its last. Two cycles with
// the same edge set therefore compare equal.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smallgraph/graph.hpp"

namespace smallgraph {

class Cycle {
public:
    // Canonicalizes; requires >= 3 distinct labels.
    explicit Cycle(std::vector<int> vertex_labels);

    const std::vector<int>& vertices() const { return vertices_; }
    int length() const { return static_cast<int>(vertices_.size()); }

    bool operator==(const Cycle& o) const = default;
    auto operator<=>(const Cycle& o) const = default;

private:
    std::vector<int> vertices_;
};

// True iff consecutive vertices of c (cyclically) are edges of g.
bool is_cycle_of(const Graph& g, const Cycle& c);

// All simple k-cycles, canonical, sorted lexicographically.
std::vector<Cycle> enumerate_cycles(const Graph& g, int k);

// Counts for every occurring length, in one DFS pass. Zero entries omitted.
std::map<int, long long> cycle_census(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Unordered pair of vertex-disjoint 6-cycles; the cycle holding the
// smallest label comes first.
struct DisjointPair {
    Cycle first;
    Cycle second;

    DisjointPair(Cycle a, Cycle b);

    bool operator==(const DisjointPair& o) const = default;
    auto operator<=>(const DisjointPair& o) const = default;
};

// All vertex-disjoint 6-cycle pairs, canonical, sorted.
std::vector<DisjointPair> disjoint_six_cycle_pairs(const Graph& g);

std::string to_string(const Cycle& c);        // "(2 3 8 ...)"
std::string to_string(const DisjointPair& p); // "(..)+(..)"

}  // namespace smallgraph
