#pragma once

// Structural verifiers for the Heawood graph's cycle lemmas: the
// Hamiltonian chord pattern, the 12-cycle complement structure, the
// distance-3 deletion count, and the disjoint 6-cycle pair configuration.
// Each verifier searches all rotations/reflections for a witness labeling
// instead of trusting a fixed one.

#include <array>
#include <string>
#include <vector>

#include "smallgraph/cycles.hpp"
#include "smallgraph/graph.hpp"

namespace smallgraph {

struct LemmaVerdict {
    std::string lemma_id;
    std::string instance;
    bool pass = false;
    std::string witness;  // found labeling on pass, first violation on fail
};

// Hamiltonian cycles: every vertex's unique chord lands 5 steps away, and
// the +5 chords fill exactly one parity class of positions.
struct ChordPatternWitness {
    std::vector<int> labeling;  // labels in positions x_1..x_14
    int plus_parity = 0;        // 1 if the +5 chords sit at odd positions
};
LemmaVerdict check_hamiltonian_chord_pattern(const Graph& g, const Cycle& c,
                                             ChordPatternWitness* out = nullptr);

// 12-cycles: the two off-cycle vertices are non-adjacent, each sees the
// cycle at three positions spaced 4 apart, and their neighbor positions
// interleave at distance 1.
struct ComplementWitness {
    int v = 0, w = 0;                     // off-cycle labels; v is adjacent to x_1
    std::array<int, 3> v_positions{};     // 1-based positions in canonical cycle order
    std::array<int, 3> w_positions{};
    std::vector<int> labeling;            // normalized x_1..x_12: v ~ {1,5,9}, w ~ {4,8,12}
    std::vector<std::pair<int, int>> chords;  // remaining off-cycle edges, 1-based positions
};
LemmaVerdict check_twelve_cycle_complement(const Graph& g, const Cycle& c,
                                           ComplementWitness* out = nullptr);

// All 12-cycles of g - {u, v}.
std::vector<Cycle> twelve_cycles_avoiding_pair(const Graph& g, int u_label, int v_label);

// Disjoint 6-cycle pairs: the two off-pair vertices are adjacent, each has
// one neighbor per cycle (v ~ x1,y4 and w ~ y1,x4), and the cross edges are
// x2y2, x3y5, x5y3, x6y6.
struct PairConfigWitness {
    int v = 0, w = 0;
    std::array<int, 6> x{};
    std::array<int, 6> y{};
};
LemmaVerdict check_disjoint_pair_configuration(const Graph& g, const DisjointPair& p,
                                               PairConfigWitness* out = nullptr);

}  // namespace smallgraph
