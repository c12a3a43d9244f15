#include "smallgraph/family.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace smallgraph {

Graph delta_y(const Graph& g, const std::array<int, 3>& t) {
    auto [a, b, c] = t;
    if (a == b || a == c || b == c)
        throw std::invalid_argument("triangle vertices must be distinct");
    if (!g.adjacent_labels(a, b) || !g.adjacent_labels(a, c) || !g.adjacent_labels(b, c))
        throw std::invalid_argument("vertices do not form a triangle");

    int fresh = g.labels().back() + 1;
    std::vector<int> labels = g.labels();
    labels.push_back(fresh);
    Graph h(labels);
    for (auto [u, v] : g.edges()) {
        bool in_triangle = (u == a || u == b || u == c) && (v == a || v == b || v == c);
        if (!in_triangle) h.add_edge_labels(u, v);
    }
    for (int v : t) h.add_edge_labels(fresh, v);
    return h;
}

std::optional<Graph> y_delta(const Graph& g, int vertex_label) {
    auto nbrs = g.neighbor_labels(vertex_label);
    if (nbrs.size() != 3)
        throw std::invalid_argument("vertex " + std::to_string(vertex_label) + " does not have degree 3");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g.adjacent_labels(nbrs[i], nbrs[j])) return std::nullopt;

    std::vector<int> labels;
    for (int l : g.labels())
        if (l != vertex_label) labels.push_back(l);
    Graph h(labels);
    for (auto [u, v] : g.edges())
        if (u != vertex_label && v != vertex_label) h.add_edge_labels(u, v);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) h.add_edge_labels(nbrs[i], nbrs[j]);
    return h;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!g.adjacent(i, j)) continue;
            for (int k = j + 1; k < n; ++k)
                if (g.adjacent(i, k) && g.adjacent(j, k))
                    out.push_back({g.label_of(i), g.label_of(j), g.label_of(k)});
        }
    return out;
}

namespace {

// Compact labels to 1..n, preserving their order.
Graph normalize_labels(const Graph& g) {
    std::map<int, int> to_new;
    int next = 1;
    for (int l : g.labels()) to_new[l] = next++;
    std::vector<int> labels(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) labels[i] = i + 1;
    Graph h(labels);
    for (auto [u, v] : g.edges()) h.add_edge_labels(to_new[u], to_new[v]);
    return h;
}

}  // namespace

std::vector<Graph> k7_family() {
    std::vector<Graph> reps{complete_graph(7)};
    for (std::size_t head = 0; head < reps.size(); ++head) {
        std::vector<Graph> discovered;
        {
            // copy: reps may reallocate while we push new representatives
            const Graph g = reps[head];
            for (const auto& t : triangles(g)) discovered.push_back(normalize_labels(delta_y(g, t)));
            for (int v : g.labels()) {
                if (g.neighbor_labels(v).size() != 3) continue;
                auto h = y_delta(g, v);
                if (h) discovered.push_back(normalize_labels(*h));
            }
        }
        for (const auto& h : discovered) {
            bool known = false;
            for (const auto& rep : reps)
                if (rep.vertex_count() == h.vertex_count() && find_isomorphism(rep, h)) {
                    known = true;
                    break;
                }
            if (!known) reps.push_back(h);
        }
    }
    return reps;
}

}  // namespace smallgraph
