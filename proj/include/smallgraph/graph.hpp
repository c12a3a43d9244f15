#pragma once

// Simple undirected graphs on at most 64 vertices, one 64-bit adjacency
// mask per vertex. Vertices carry external integer labels (1-based for all
// built-in constructors); internally everything is 0-based indices. The
// label list is kept strictly increasing, so index order == label order.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace smallgraph {

class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    // Vertex set from labels (deduplicated, sorted); no edges yet.
    explicit Graph(std::vector<int> labels);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const;
    const std::vector<int>& labels() const { return labels_; }

    int label_of(int index) const { return labels_[index]; }
    // Index of an external label; throws std::invalid_argument if unknown.
    int index_of(int label) const;
    bool has_label(int label) const;

    void add_edge(int i, int j);          // indices
    void add_edge_labels(int u, int v);   // external labels

    bool adjacent(int i, int j) const { return (adj_[i] >> j) & 1u; }
    bool adjacent_labels(int u, int v) const;
    std::uint64_t row(int i) const { return adj_[i]; }
    int degree(int i) const;
    std::vector<int> neighbor_indices(int i) const;
    std::vector<int> neighbor_labels(int u) const;  // sorted

    // Edges as label pairs (u < v), sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    bool is_bipartite() const;

    bool operator==(const Graph& o) const = default;

private:
    std::vector<int> labels_;          // strictly increasing
    std::vector<std::uint64_t> adj_;   // adj_[i] bit j <=> edge {i,j}
};

// Named constructors. Labels are 1..n.
Graph heawood();
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen();

// Line-oriented edge list: "u v" per line, '#' starts a comment line,
// blank lines ignored. Throws std::invalid_argument with the offending
// line number on self-loops or malformed tokens.
Graph graph_from_edge_list(std::istream& in);
Graph graph_from_edge_list(const std::string& text);
Graph graph_from_edge_list_file(const std::string& path);

std::string to_dot(const Graph& g);

// Shortest-path hop count between labels; nullopt if unreachable.
std::optional<int> distance(const Graph& g, int u_label, int v_label);

struct DistanceClassification {
    int source = 0;                          // external label
    std::vector<std::vector<int>> classes;   // classes[i] = labels at distance i+1
};

// Breadth-first layering from a source label.
DistanceClassification distance_classes(const Graph& g, int source_label);

// Induced subgraph on the complement of a label set; surviving labels kept.
Graph delete_vertices(const Graph& g, const std::vector<int>& labels);

// Edge-preserving vertex bijection between two graphs, as an index map
// (result[i] = index in g2 of the image of g1's vertex i), or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);

}  // namespace smallgraph
