#include "smallgraph/zeon.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace smallgraph {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("zeon coefficient overflow in addition");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("zeon coefficient overflow in multiplication");
    return r;
}

// Sort by mask, combine equal masks, drop zeros.
std::vector<ZeonElement::Term> normalize(std::vector<ZeonElement::Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<ZeonElement::Term> out;
    for (const auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second = checked_add(out.back().second, t.second);
        else
            out.push_back(t);
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
}

}  // namespace

ZeonElement::ZeonElement(std::vector<Term> terms) : terms_(normalize(std::move(terms))) {}

ZeonElement ZeonElement::scalar(long long c) {
    return ZeonElement(std::vector<Term>{{0, c}});
}

ZeonElement ZeonElement::generator(int vertex_index) {
    return monomial(std::uint64_t{1} << vertex_index, 1);
}

ZeonElement ZeonElement::monomial(std::uint64_t mask, long long coeff) {
    return ZeonElement(std::vector<Term>{{mask, coeff}});
}

long long ZeonElement::coefficient(std::uint64_t mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term& t, std::uint64_t m) { return t.first < m; });
    return (it != terms_.end() && it->first == mask) ? it->second : 0;
}

long long ZeonElement::coefficient_sum() const {
    long long sum = 0;
    for (const auto& [mask, c] : terms_) sum = checked_add(sum, c);
    return sum;
}

int ZeonElement::max_grade() const {
    int g = 0;
    for (const auto& [mask, c] : terms_) g = std::max(g, std::popcount(mask));
    return g;
}

ZeonElement ZeonElement::operator+(const ZeonElement& o) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return ZeonElement(std::move(all));
}

ZeonElement ZeonElement::operator*(const ZeonElement& o) const {
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& [s, c] : terms_)
        for (const auto& [t, d] : o.terms_)
            if ((s & t) == 0) prod.emplace_back(s | t, checked_mul(c, d));
    return ZeonElement(std::move(prod));
}

std::string ZeonElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c;
        if (mask) {
            out << "*z{";
            bool comma = false;
            for (std::uint64_t m = mask; m; m &= m - 1) {
                if (comma) out << ",";
                comma = true;
                out << std::countr_zero(m) + 1;
            }
            out << "}";
        }
    }
    return out.str();
}

int ZeonMatrix::nonzero_entries() const {
    int count = 0;
    for (const auto& e : entries_)
        if (!e.is_zero()) ++count;
    return count;
}

long long ZeonMatrix::trace_coefficient_sum() const {
    long long sum = 0;
    for (int i = 0; i < n_; ++i) sum = checked_add(sum, at(i, i).coefficient_sum());
    return sum;
}

ZeonMatrix multiply(const ZeonMatrix& a, const ZeonMatrix& b, int max_grade) {
    if (a.dim() != b.dim()) throw std::invalid_argument("zeon matrix dimension mismatch");
    int n = a.dim();
    ZeonMatrix c(n);
    std::vector<ZeonElement::Term> acc;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            acc.clear();
            for (int l = 0; l < n; ++l) {
                const ZeonElement& x = a.at(i, l);
                const ZeonElement& y = b.at(l, j);
                if (x.is_zero() || y.is_zero()) continue;
                for (const auto& [s, cs] : x.terms())
                    for (const auto& [t, ct] : y.terms()) {
                        if (s & t) continue;
                        std::uint64_t u = s | t;
                        if (std::popcount(u) > max_grade) continue;
                        acc.emplace_back(u, checked_mul(cs, ct));
                    }
            }
            c.at(i, j) = ZeonElement(acc);
        }
    return c;
}

ZeonMatrix nilpotent_adjacency(const Graph& g) {
    int n = g.vertex_count();
    ZeonMatrix psi(n);
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbor_indices(i)) psi.at(i, j) = ZeonElement::generator(j);
    return psi;
}

namespace {

long long cycles_from_trace(long long sum, int k) {
    if (sum % (2 * k) != 0)
        throw std::logic_error("trace coefficient sum " + std::to_string(sum) +
                               " not divisible by 2k for k=" + std::to_string(k));
    return sum / (2 * k);
}

}  // namespace

long long count_cycles_zeon(const Graph& g, int k) {
    if (k < 3 || k > g.vertex_count())
        throw std::invalid_argument("cycle length " + std::to_string(k) + " out of range");
    ZeonMatrix psi = nilpotent_adjacency(g);
    ZeonMatrix power = psi;
    for (int m = 2; m <= k; ++m) power = multiply(power, psi, k);
    return cycles_from_trace(power.trace_coefficient_sum(), k);
}

std::map<int, long long> cycle_census_zeon(const Graph& g) {
    std::map<int, long long> census;
    int n = g.vertex_count();
    if (n < 3) return census;
    ZeonMatrix psi = nilpotent_adjacency(g);
    ZeonMatrix power = psi;
    for (int m = 2; m <= n; ++m) {
        power = multiply(power, psi, n);
        if (m < 3) continue;
        long long c = cycles_from_trace(power.trace_coefficient_sum(), m);
        if (c != 0) census[m] = c;
    }
    return census;
}

}  // namespace smallgraph
