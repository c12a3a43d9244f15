#include "smallgraph/cycles.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace smallgraph {

namespace {

std::vector<int> canonical_rotation(const std::vector<int>& vs) {
    int k = static_cast<int>(vs.size());
    int start = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
    std::vector<int> fwd(k), rev(k);
    for (int i = 0; i < k; ++i) {
        fwd[i] = vs[(start + i) % k];
        rev[i] = vs[(start - i + k) % k];
    }
    return fwd[1] < rev[1] ? fwd : rev;
}

}  // namespace

Cycle::Cycle(std::vector<int> vertex_labels) {
    if (vertex_labels.size() < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    auto sorted = vertex_labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cycle vertices must be distinct");
    vertices_ = canonical_rotation(vertex_labels);
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
    const auto& vs = c.vertices();
    int k = c.length();
    for (int i = 0; i < k; ++i) {
        if (!g.has_label(vs[i])) return false;
        if (!g.adjacent_labels(vs[i], vs[(i + 1) % k])) return false;
    }
    return true;
}

namespace {

// Rooted DFS: paths start at the root and only visit higher indices, so
// each cycle is found exactly once per direction; keeping the orientations
// with path[1] < path[last] leaves exactly one copy. Index order equals
// label order, so emitted sequences are already canonical.
struct CycleSearch {
    const Graph& g;
    int target = 0;  // 0 = all lengths
    std::vector<int> path;
    std::uint64_t on_path = 0;
    std::vector<Cycle>* sink = nullptr;
    std::map<int, long long>* counts = nullptr;

    explicit CycleSearch(const Graph& g) : g(g) {}

    void run() {
        int n = g.vertex_count();
        path.reserve(n);
        for (int root = 0; root < n; ++root) {
            path.assign(1, root);
            on_path = std::uint64_t{1} << root;
            extend(root, root);
        }
    }

    void emit() {
        if (counts) ++(*counts)[static_cast<int>(path.size())];
        if (sink) {
            std::vector<int> labels(path.size());
            for (std::size_t i = 0; i < path.size(); ++i) labels[i] = g.label_of(path[i]);
            sink->emplace_back(std::move(labels));
        }
    }

    void extend(int root, int v) {
        int depth = static_cast<int>(path.size());
        bool at_target = target != 0 && depth == target;
        if (depth >= 3 && (target == 0 || at_target) && g.adjacent(v, root) && path[1] < path.back())
            emit();
        if (at_target) return;
        std::uint64_t cand = g.row(v) & ~on_path;
        cand &= ~((std::uint64_t{2} << root) - 1);  // indices > root only
        for (std::uint64_t m = cand; m; m &= m - 1) {
            int w = std::countr_zero(m);
            path.push_back(w);
            on_path |= std::uint64_t{1} << w;
            extend(root, w);
            on_path &= ~(std::uint64_t{1} << w);
            path.pop_back();
        }
    }
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, int k) {
    if (k < 3 || k > g.vertex_count())
        throw std::invalid_argument("cycle length " + std::to_string(k) + " out of range");
    std::vector<Cycle> out;
    CycleSearch search(g);
    search.target = k;
    search.sink = &out;
    search.run();
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, long long> cycle_census(const Graph& g) {
    std::map<int, long long> counts;
    CycleSearch search(g);
    search.counts = &counts;
    search.run();
    return counts;
}

std::optional<int> girth(const Graph& g) {
    // Per-root BFS; a non-tree edge closes a walk of length
    // dist(u)+dist(w)+1 through the root. Any such walk contains a cycle no
    // longer than itself, and for a root on a shortest cycle the bound is
    // attained, so the minimum over all roots is exact.
    int n = g.vertex_count();
    int best = -1;
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        dist[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.neighbor_indices(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v] && v < w) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

DisjointPair::DisjointPair(Cycle a, Cycle b) : first(std::move(a)), second(std::move(b)) {
    if (first.length() != 6 || second.length() != 6)
        throw std::invalid_argument("disjoint pair cycles must have length 6");
    for (int l : first.vertices())
        for (int m : second.vertices())
            if (l == m) throw std::invalid_argument("pair cycles share vertex " + std::to_string(l));
    if (second.vertices()[0] < first.vertices()[0]) std::swap(first, second);
}

std::vector<DisjointPair> disjoint_six_cycle_pairs(const Graph& g) {
    std::vector<DisjointPair> out;
    if (g.vertex_count() < 12) return out;
    auto sixes = enumerate_cycles(g, 6);
    std::vector<std::uint64_t> masks(sixes.size(), 0);
    for (std::size_t i = 0; i < sixes.size(); ++i)
        for (int l : sixes[i].vertices()) masks[i] |= std::uint64_t{1} << g.index_of(l);
    for (std::size_t i = 0; i < sixes.size(); ++i)
        for (std::size_t j = i + 1; j < sixes.size(); ++j)
            if ((masks[i] & masks[j]) == 0) out.emplace_back(sixes[i], sixes[j]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Cycle& c) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < c.vertices().size(); ++i) {
        if (i) out << " ";
        out << c.vertices()[i];
    }
    out << ")";
    return out.str();
}

std::string to_string(const DisjointPair& p) {
    return to_string(p.first) + "+" + to_string(p.second);
}

}  // namespace smallgraph
