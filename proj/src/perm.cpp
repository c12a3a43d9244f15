#include "smallgraph/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace smallgraph {

Permutation::Permutation(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[v] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

int Permutation::apply_label(int label) const {
    if (label < 1 || label > degree())
        throw std::invalid_argument("label " + std::to_string(label) + " outside permutation degree");
    return images_[label - 1] + 1;
}

Permutation Permutation::compose(const Permutation& q) const {
    if (degree() != q.degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> r(images_.size());
    for (int i = 0; i < degree(); ++i) r[i] = images_[q.images_[i]];
    Permutation p;
    p.images_ = std::move(r);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> r(images_.size());
    for (int i = 0; i < degree(); ++i) r[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(r);
    return p;
}

int Permutation::order() const {
    int n = degree();
    std::vector<char> seen(n, 0);
    long long ord = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = images_[j];
            ++len;
        }
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < degree(); ++i) {
        if (i) out << " ";
        out << images_[i] + 1;
    }
    out << ")";
    return out.str();
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

std::map<int, int> PermGroup::element_order_histogram() const {
    std::map<int, int> hist;
    for (const auto& e : elements) ++hist[e.order()];
    return hist;
}

std::vector<Permutation> close_under_composition(int degree, const std::vector<Permutation>& gens) {
    std::set<Permutation> closed{Permutation(degree)};
    std::vector<Permutation> frontier{Permutation(degree)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Permutation y = x.compose(g);
                if (closed.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return {closed.begin(), closed.end()};
}

std::vector<Permutation> greedy_generators(int degree, const std::vector<Permutation>& sorted_elements) {
    std::vector<Permutation> gens;
    std::vector<Permutation> generated{Permutation(degree)};
    for (const auto& e : sorted_elements) {
        if (std::binary_search(generated.begin(), generated.end(), e)) continue;
        gens.push_back(e);
        generated = close_under_composition(degree, gens);
        if (generated.size() == sorted_elements.size()) break;
    }
    return gens;
}

PermGroup group_from_elements(int degree, std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PermGroup g;
    g.degree = degree;
    g.generators = greedy_generators(degree, elements);
    g.elements = std::move(elements);
    return g;
}

PermGroup group_from_generators(int degree, const std::vector<Permutation>& gens) {
    return group_from_elements(degree, close_under_composition(degree, gens));
}

namespace {

// Degree-based color refinement for a single graph.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> col(n);
    for (int i = 0; i < n; ++i) col[i] = g.degree(i);
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(col[v]);
            for (int w : g.neighbor_indices(v)) sig[v].push_back(col[w]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        auto palette = sig;
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        std::vector<int> ncol(n);
        for (int v = 0; v < n; ++v)
            ncol[v] = static_cast<int>(std::lower_bound(palette.begin(), palette.end(), sig[v]) - palette.begin());
        if (ncol == col) break;
        col.swap(ncol);
    }
    return col;
}

}  // namespace

PermGroup automorphisms(const Graph& g) {
    int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("automorphism enumeration supports at most 20 vertices");
    std::vector<int> col = refine_colors(g);

    // Prefer vertices attached to already-assigned ones; adjacency
    // consistency is checked after every single assignment.
    std::vector<int> order;
    {
        std::vector<char> placed(n, 0);
        for (int round = 0; round < n; ++round) {
            int pick = -1;
            for (int v = 0; v < n && pick == -1; ++v) {
                if (placed[v]) continue;
                for (int w : g.neighbor_indices(v))
                    if (placed[w]) { pick = v; break; }
            }
            if (pick == -1)
                for (int v = 0; v < n; ++v)
                    if (!placed[v]) { pick = v; break; }
            placed[pick] = 1;
            order.push_back(pick);
        }
    }

    std::vector<Permutation> found;
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto backtrack = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            found.push_back(Permutation::from_images(image));
            return;
        }
        int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || col[v] != col[w]) continue;
            bool ok = true;
            for (int d = 0; d < depth; ++d) {
                int u = order[d];
                if (g.adjacent(v, u) != g.adjacent(w, image[u])) { ok = false; break; }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            self(self, depth + 1);
            used[w] = 0;
            image[v] = -1;
        }
    };
    if (n == 0) found.push_back(Permutation(0));
    else backtrack(backtrack, 0);
    return group_from_elements(n, std::move(found));
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

PermGroup pgl2(int q) {
    if (!is_prime(q)) throw std::invalid_argument("pgl2 requires a prime q");
    int inf = q;  // point indices: 0..q-1 are field values, q is infinity
    std::vector<int> inv(q, 0);
    for (int x = 1; x < q; ++x)
        for (int y = 1; y < q; ++y)
            if (x * y % q == 1) { inv[x] = y; break; }

    std::set<Permutation> elems;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d) {
                    if ((a * d - b * c) % q == 0) continue;
                    std::vector<int> images(q + 1);
                    for (int x = 0; x < q; ++x) {
                        int num = (a * x + b) % q;
                        int den = (c * x + d) % q;
                        images[x] = den == 0 ? inf : num * inv[den] % q;
                    }
                    images[inf] = c == 0 ? inf : a * inv[c] % q;
                    elems.insert(Permutation::from_images(std::move(images)));
                }
    return group_from_elements(q + 1, {elems.begin(), elems.end()});
}

namespace {

// The map built from generator images, extended over all products; checks
// multiplication-table consistency and bijectivity.
bool extends_to_isomorphism(const PermGroup& a, const PermGroup& b,
                            const std::vector<Permutation>& gens,
                            const std::vector<Permutation>& images) {
    auto index_in = [](const std::vector<Permutation>& sorted, const Permutation& p) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
        if (it == sorted.end() || !(*it == p)) return -1;
        return static_cast<int>(it - sorted.begin());
    };
    std::size_t n = a.order();
    std::vector<int> phi(n, -1);
    std::vector<char> hit(n, 0);
    int ida = index_in(a.elements, Permutation(a.degree));
    int idb = index_in(b.elements, Permutation(b.degree));
    if (ida < 0 || idb < 0) return false;
    phi[ida] = idb;
    hit[idb] = 1;
    std::vector<int> queue{ida};
    std::size_t mapped = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (std::size_t t = 0; t < gens.size(); ++t) {
            Permutation xa = a.elements[x].compose(gens[t]);
            Permutation xb = b.elements[phi[x]].compose(images[t]);
            int ia = index_in(a.elements, xa);
            int ib = index_in(b.elements, xb);
            if (ia < 0 || ib < 0) return false;  // input not closed
            if (phi[ia] == -1) {
                if (hit[ib]) return false;  // not injective
                phi[ia] = ib;
                hit[ib] = 1;
                ++mapped;
                queue.push_back(ia);
            } else if (phi[ia] != ib) {
                return false;  // inconsistent with multiplication table
            }
        }
    }
    return mapped == n;
}

}  // namespace

bool groups_isomorphic(const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return false;
    if (a.element_order_histogram() != b.element_order_histogram()) return false;
    if (a.order() == 1) return true;

    // Descending element order maximizes early pruning.
    std::vector<Permutation> gens = a.generators;
    std::sort(gens.begin(), gens.end(), [](const Permutation& x, const Permutation& y) {
        int ox = x.order(), oy = y.order();
        return ox != oy ? ox > oy : x < y;
    });
    std::vector<int> gen_orders;
    for (const auto& g : gens) gen_orders.push_back(g.order());

    std::vector<std::vector<Permutation>> candidates(gens.size());
    for (std::size_t t = 0; t < gens.size(); ++t)
        for (const auto& e : b.elements)
            if (e.order() == gen_orders[t]) candidates[t].push_back(e);

    std::vector<Permutation> images;
    auto backtrack = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == gens.size()) return extends_to_isomorphism(a, b, gens, images);
        for (const auto& cand : candidates[depth]) {
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j) {
                if (gens[depth].compose(gens[j]).order() != cand.compose(images[j]).order()) ok = false;
                if (ok && gens[j].compose(gens[depth]).order() != images[j].compose(cand).order()) ok = false;
            }
            if (!ok) continue;
            images.push_back(cand);
            if (self(self, depth + 1)) return true;
            images.pop_back();
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

}  // namespace smallgraph
