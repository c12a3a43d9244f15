#pragma once

// Shared test utilities: independent oracles (kept free of the library's
// enumeration/backtracking code paths), deterministic random graphs, and
// reference constructions.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "smallgraph/graph.hpp"

namespace testutil {

// Erdos-Renyi G(n, p) with labels 1..n.
inline smallgraph::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    smallgraph::Graph g(labels);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) g.add_edge(i, j);
    return g;
}

// Subset-based cycle census oracle: for every vertex subset, count the
// circular arrangements whose consecutive pairs are all edges. Each cycle
// is produced once (first element fixed to the subset minimum, direction
// fixed by second < last).
inline std::map<int, long long> oracle_cycle_census(const smallgraph::Graph& g) {
    std::map<int, long long> census;
    int n = g.vertex_count();
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        int k = std::popcount(subset);
        if (k < 3) continue;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if ((subset >> i) & 1u) members.push_back(i);
        std::vector<int> rest(members.begin() + 1, members.end());
        std::sort(rest.begin(), rest.end());
        do {
            if (rest.front() > rest.back()) continue;  // one direction only
            bool ok = g.adjacent(members[0], rest.front()) && g.adjacent(rest.back(), members[0]);
            for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
                ok = g.adjacent(rest[i], rest[i + 1]);
            if (ok) ++census[k];
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return census;
}

// Full scan over all vertex bijections, no refinement, no search ordering.
inline long long brute_force_automorphism_count(const smallgraph::Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (g.adjacent(i, j) != g.adjacent(perm[i], perm[j])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Point-line incidence graph of the Fano plane: an independent route to
// the unique (3,6)-cage. Points 1..7, lines 8..14.
inline smallgraph::Graph fano_incidence_graph() {
    static const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                    {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    std::vector<int> labels(14);
    std::iota(labels.begin(), labels.end(), 1);
    smallgraph::Graph g(labels);
    for (int l = 0; l < 7; ++l)
        for (int p : lines[l]) g.add_edge_labels(p, l + 8);
    return g;
}

// The 21-line edge list matching heawood()'s construction.
inline std::string heawood_edge_list_text() {
    std::string text = "# heawood graph\n";
    for (int i = 1; i <= 14; ++i)
        text += std::to_string(i) + " " + std::to_string(i % 14 + 1) + "\n";
    for (int i = 1; i <= 13; i += 2)
        text += std::to_string(i) + " " + std::to_string((i + 4) % 14 + 1) + "\n";
    return text;
}

// Heawood with one edge swapped: {1,6} removed, {1,8} added.
inline smallgraph::Graph mutant_heawood() {
    smallgraph::Graph hw = smallgraph::heawood();
    std::vector<int> labels(14);
    std::iota(labels.begin(), labels.end(), 1);
    smallgraph::Graph g(labels);
    for (auto [u, v] : hw.edges()) {
        if (u == 1 && v == 6) continue;
        g.add_edge_labels(u, v);
    }
    g.add_edge_labels(1, 8);
    return g;
}

}  // namespace testutil
