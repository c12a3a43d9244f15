#pragma once

// Zeon (nilpotent) algebra: integer combinations of squarefree monomials
// zeta_S over vertex subsets, with zeta_v^2 = 0 and commuting generators.
// The nilpotent adjacency matrix Psi has Psi[i][j] = zeta_j on edges; the
// coefficient sum of trace(Psi^k) is 2k times the number of simple
// k-cycles, because any closed walk repeating a vertex vanishes.
//
// Coefficients are 64-bit with checked arithmetic; overflow throws
// std::overflow_error instead of wrapping.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smallgraph/graph.hpp"

namespace smallgraph {

class ZeonElement {
public:
    using Term = std::pair<std::uint64_t, long long>;  // (subset mask, coefficient)

    ZeonElement() = default;
    static ZeonElement scalar(long long c);
    static ZeonElement generator(int vertex_index);
    static ZeonElement monomial(std::uint64_t mask, long long coeff);
    // Arbitrary term list; sorts, combines, drops zeros.
    explicit ZeonElement(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(std::uint64_t mask) const;
    long long coefficient_sum() const;
    int max_grade() const;  // largest subset size; 0 for zero/scalar

    ZeonElement operator+(const ZeonElement& o) const;
    ZeonElement operator*(const ZeonElement& o) const;
    bool operator==(const ZeonElement& o) const = default;

    std::string to_string() const;

private:
    std::vector<Term> terms_;  // sorted by mask, no zero coefficients
};

inline ZeonElement zeon_mul(const ZeonElement& a, const ZeonElement& b) { return a * b; }

class ZeonMatrix {
public:
    explicit ZeonMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

    int dim() const { return n_; }
    ZeonElement& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const ZeonElement& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    int nonzero_entries() const;
    long long trace_coefficient_sum() const;

private:
    int n_;
    std::vector<ZeonElement> entries_;
};

// Product, dropping monomials over max_grade vertices (monomials only grow,
// so pruning is sound when chasing a fixed walk length).
ZeonMatrix multiply(const ZeonMatrix& a, const ZeonMatrix& b, int max_grade = 64);

ZeonMatrix nilpotent_adjacency(const Graph& g);

// Number of simple k-cycles via trace(Psi^k); throws std::logic_error if
// the coefficient sum is not divisible by 2k (an implementation bug).
long long count_cycles_zeon(const Graph& g, int k);

// Counts for all lengths 3..n in one pass of repeated multiplication.
std::map<int, long long> cycle_census_zeon(const Graph& g);

}  // namespace smallgraph
