#pragma once

// Permutations and extensionally-stored finite permutation groups, plus
// graph automorphism enumeration, PGL2(q) as a permutation group on the
// projective line, and abstract isomorphism testing between small groups.

#include <map>
#include <string>
#include <vector>

#include "smallgraph/graph.hpp"

namespace smallgraph {

class Permutation {
public:
    explicit Permutation(int degree);  // identity
    // Validates that images is a bijection on 0..degree-1.
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    // 1-based action, for vertices labeled 1..degree.
    int apply_label(int label) const;

    // compose(q): apply q first, then this.
    Permutation compose(const Permutation& q) const;
    Permutation inverse() const;
    int order() const;
    bool is_identity() const;

    // One-line 1-based image list, e.g. "(3 1 2)".
    std::string to_string() const;

    bool operator==(const Permutation& o) const = default;
    auto operator<=>(const Permutation& o) const = default;

private:
    Permutation() = default;
    std::vector<int> images_;
};

struct PermGroup {
    int degree = 0;
    std::vector<Permutation> elements;    // complete, sorted, deduplicated
    std::vector<Permutation> generators;  // greedy generating subset

    std::size_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;
    // order -> number of elements of that order
    std::map<int, int> element_order_histogram() const;
};

// BFS closure of a generator set; result sorted.
std::vector<Permutation> close_under_composition(int degree, const std::vector<Permutation>& gens);

// Smallest-first greedy scan: add an element iff not generated so far.
std::vector<Permutation> greedy_generators(int degree, const std::vector<Permutation>& sorted_elements);

// Sorts, deduplicates, and extracts greedy generators. The element list is
// assumed closed; see tests for the closure checks.
PermGroup group_from_elements(int degree, std::vector<Permutation> elements);

PermGroup group_from_generators(int degree, const std::vector<Permutation>& gens);

// Every adjacency-preserving vertex bijection of g (indices 0..n-1).
// Enumerative regime: requires g.vertex_count() <= 20.
PermGroup automorphisms(const Graph& g);

// Fractional-linear maps x -> (ax+b)/(cx+d), ad-bc != 0, acting on the
// projective line {0..q-1, inf} as permutations of q+1 points.
// q must be prime.
PermGroup pgl2(int q);

// Abstract group isomorphism via order histograms plus backtracking
// generator assignment with a full multiplication-consistency check.
bool groups_isomorphic(const PermGroup& a, const PermGroup& b);

}  // namespace smallgraph
