#include "smallgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace smallgraph {

Graph::Graph(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (static_cast<int>(labels.size()) > kMaxVertices)
        throw std::invalid_argument("graph exceeds " + std::to_string(kMaxVertices) + " vertices");
    for (int l : labels)
        if (l <= 0) throw std::invalid_argument("vertex labels must be positive");
    labels_ = std::move(labels);
    adj_.assign(labels_.size(), 0);
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t r : adj_) total += std::popcount(r);
    return total / 2;
}

int Graph::index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw std::invalid_argument("unknown vertex label " + std::to_string(label));
    return static_cast<int>(it - labels_.begin());
}

bool Graph::has_label(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

void Graph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("self-loop on vertex " + std::to_string(labels_[i]));
    adj_[i] |= std::uint64_t{1} << j;
    adj_[j] |= std::uint64_t{1} << i;
}

void Graph::add_edge_labels(int u, int v) {
    add_edge(index_of(u), index_of(v));
}

bool Graph::adjacent_labels(int u, int v) const {
    return adjacent(index_of(u), index_of(v));
}

int Graph::degree(int i) const {
    return std::popcount(adj_[i]);
}

std::vector<int> Graph::neighbor_indices(int i) const {
    std::vector<int> out;
    for (std::uint64_t m = adj_[i]; m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

std::vector<int> Graph::neighbor_labels(int u) const {
    std::vector<int> out;
    for (int j : neighbor_indices(index_of(u))) out.push_back(labels_[j]);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < vertex_count(); ++i)
        for (std::uint64_t m = adj_[i] >> i; m; m &= m - 1) {
            int j = i + std::countr_zero(m);
            if (j > i) out.emplace_back(labels_[i], labels_[j]);
        }
    return out;
}

bool Graph::is_connected() const {
    int n = vertex_count();
    if (n == 0) return true;
    std::uint64_t seen = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (std::uint64_t m = adj_[v] & ~seen; m; m &= m - 1) {
            int w = std::countr_zero(m);
            seen |= std::uint64_t{1} << w;
            queue.push_back(w);
        }
    }
    return std::popcount(seen) == n;
}

bool Graph::is_bipartite() const {
    int n = vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : neighbor_indices(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph heawood() {
    std::vector<int> labels(14);
    std::iota(labels.begin(), labels.end(), 1);
    Graph g(labels);
    for (int i = 1; i <= 14; ++i) g.add_edge_labels(i, i % 14 + 1);
    for (int i = 1; i <= 13; i += 2) g.add_edge_labels(i, (i + 4) % 14 + 1);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph needs n >= 1");
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    Graph g(labels);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    Graph g(labels);
    for (int i = 1; i <= n; ++i) g.add_edge_labels(i, i % n + 1);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph needs n >= 1");
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    Graph g(labels);
    for (int i = 1; i < n; ++i) g.add_edge_labels(i, i + 1);
    return g;
}

Graph petersen() {
    std::vector<int> labels(10);
    std::iota(labels.begin(), labels.end(), 1);
    Graph g(labels);
    for (int i = 1; i <= 5; ++i) {
        g.add_edge_labels(i, i % 5 + 1);      // outer pentagon
        g.add_edge_labels(i, i + 5);          // spokes
        g.add_edge_labels(i + 5, (i + 1) % 5 + 6);  // inner pentagram
    }
    return g;
}

Graph graph_from_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edge_labels;
    std::vector<int> labels;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        auto parse = [&](const std::string& tok) {
            std::size_t pos = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size() || value <= 0)
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": expected positive integer, got '" + tok + "'");
            return value;
        };
        int u = parse(first);
        std::string second, extra;
        if (!(ls >> second))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": missing second endpoint");
        int v = parse(second);
        if (ls >> extra)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
        if (u == v)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": self-loop on " + std::to_string(u));
        edge_labels.emplace_back(u, v);
        labels.push_back(u);
        labels.push_back(v);
    }
    Graph g(labels);
    for (auto [u, v] : edge_labels) g.add_edge_labels(u, v);  // duplicates collapse
    return g;
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return graph_from_edge_list(in);
}

Graph graph_from_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file " + path);
    return graph_from_edge_list(in);
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

// BFS distances (in hops) from index s; -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbor_indices(v)) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

std::optional<int> distance(const Graph& g, int u_label, int v_label) {
    int u = g.index_of(u_label), v = g.index_of(v_label);
    int d = bfs_distances(g, u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

DistanceClassification distance_classes(const Graph& g, int source_label) {
    int s = g.index_of(source_label);
    auto dist = bfs_distances(g, s);
    int max_d = 0;
    for (int d : dist) max_d = std::max(max_d, d);
    DistanceClassification dc;
    dc.source = source_label;
    dc.classes.resize(max_d);
    for (int i = 0; i < g.vertex_count(); ++i)
        if (dist[i] > 0) dc.classes[dist[i] - 1].push_back(g.label_of(i));
    return dc;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& labels) {
    std::uint64_t kill = 0;
    for (int l : labels) kill |= std::uint64_t{1} << g.index_of(l);
    std::vector<int> keep;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (!((kill >> i) & 1u)) keep.push_back(g.label_of(i));
    Graph h(keep);
    for (auto [u, v] : g.edges())
        if (h.has_label(u) && h.has_label(v)) h.add_edge_labels(u, v);
    return h;
}

namespace {

// Iterated color refinement: start from degrees, refine by the multiset of
// neighbor colors, with a palette shared by both graphs so classes line up.
std::pair<std::vector<int>, std::vector<int>> joint_refine(const Graph& a, const Graph& b) {
    int na = a.vertex_count(), nb = b.vertex_count();
    std::vector<int> ca(na), cb(nb);
    for (int i = 0; i < na; ++i) ca[i] = a.degree(i);
    for (int i = 0; i < nb; ++i) cb[i] = b.degree(i);
    for (int round = 0; round < na + 1; ++round) {
        std::vector<std::vector<int>> sig_a(na), sig_b(nb);
        auto signature = [](const Graph& g, const std::vector<int>& col, int v) {
            std::vector<int> s{col[v]};
            for (int w : g.neighbor_indices(v)) s.push_back(col[w]);
            std::sort(s.begin() + 1, s.end());
            return s;
        };
        for (int v = 0; v < na; ++v) sig_a[v] = signature(a, ca, v);
        for (int v = 0; v < nb; ++v) sig_b[v] = signature(b, cb, v);
        std::vector<std::vector<int>> palette;
        palette.insert(palette.end(), sig_a.begin(), sig_a.end());
        palette.insert(palette.end(), sig_b.begin(), sig_b.end());
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        auto color_of = [&](const std::vector<int>& s) {
            return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), s) - palette.begin());
        };
        std::vector<int> nca(na), ncb(nb);
        for (int v = 0; v < na; ++v) nca[v] = color_of(sig_a[v]);
        for (int v = 0; v < nb; ++v) ncb[v] = color_of(sig_b[v]);
        if (nca == ca && ncb == cb) break;
        ca.swap(nca);
        cb.swap(ncb);
    }
    return {ca, cb};
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2) {
    int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    auto [c1, c2] = joint_refine(g1, g2);
    {
        auto s1 = c1, s2 = c2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    // Order g1's vertices so each one touches an already-placed vertex when
    // possible; candidates are color-matched and checked incrementally.
    std::vector<int> order;
    {
        std::vector<char> placed(n, 0);
        for (int round = 0; round < n; ++round) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                bool touches = false;
                for (int w : g1.neighbor_indices(v))
                    if (placed[w]) { touches = true; break; }
                if (touches) { pick = v; break; }
            }
            if (pick == -1)
                for (int v = 0; v < n; ++v)
                    if (!placed[v]) { pick = v; break; }
            placed[pick] = 1;
            order.push_back(pick);
        }
    }

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || c1[v] != c2[w]) continue;
            bool ok = true;
            for (int d = 0; d < depth; ++d) {
                int u = order[d];
                if (g1.adjacent(v, u) != g2.adjacent(w, image[u])) { ok = false; break; }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (self(self, depth + 1)) return true;
            used[w] = 0;
            image[v] = -1;
        }
        return false;
    };
    if (backtrack(backtrack, 0)) return image;
    return std::nullopt;
}

}  // namespace smallgraph
