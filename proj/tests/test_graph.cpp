#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "helpers.hpp"
#include "smallgraph/cycles.hpp"
#include "smallgraph/graph.hpp"

using namespace smallgraph;

TEST_CASE("edge list parsing") {
    SUBCASE("triangle") {
        Graph g = graph_from_edge_list("1 2\n2 3\n3 1");
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 3);
        CHECK(g.adjacent_labels(1, 2));
        CHECK(g.adjacent_labels(2, 3));
        CHECK(g.adjacent_labels(3, 1));
    }
    SUBCASE("comments, blanks and duplicate edges collapse") {
        Graph g = graph_from_edge_list("# comment\n\n1 2\n2 1\n\n2 3\n");
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);
    }
    SUBCASE("heawood edge list equals the constructor") {
        CHECK(graph_from_edge_list(testutil::heawood_edge_list_text()) == heawood());
    }
    SUBCASE("self-loop rejected with line number") {
        CHECK_THROWS_WITH_AS(graph_from_edge_list("1 2\n1 1\n"),
                             doctest::Contains("line 2"), std::invalid_argument);
    }
    SUBCASE("non-integer token rejected") {
        CHECK_THROWS_AS(graph_from_edge_list("1 x\n"), std::invalid_argument);
        CHECK_THROWS_AS(graph_from_edge_list("1 -2\n"), std::invalid_argument);
        CHECK_THROWS_AS(graph_from_edge_list("1 2 3\n"), std::invalid_argument);
        CHECK_THROWS_AS(graph_from_edge_list("1\n"), std::invalid_argument);
    }
}

TEST_CASE("heawood construction") {
    Graph g = heawood();
    CHECK(g.vertex_count() == 14);
    CHECK(g.edge_count() == 21);
    for (int i = 0; i < 14; ++i) CHECK(g.degree(i) == 3);
    CHECK(g.is_bipartite());
    CHECK(g.is_connected());
    CHECK(g.neighbor_labels(1) == std::vector<int>{2, 6, 14});
    CHECK(girth(g) == 6);
}

TEST_CASE("complete graphs") {
    CHECK(complete_graph(7).edge_count() == 21);
    CHECK(complete_graph(1).edge_count() == 0);
    Graph k4 = complete_graph(4);
    for (int i = 0; i < 4; ++i) CHECK(k4.degree(i) == 3);
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
}

TEST_CASE("distance") {
    Graph g = heawood();
    CHECK(distance(g, 1, 4) == 3);
    CHECK(distance(g, 1, 1) == 0);
    CHECK(distance(g, 1, 9) == 2);
    CHECK_THROWS_AS(distance(g, 1, 99), std::invalid_argument);

    SUBCASE("unreachable") {
        Graph two = graph_from_edge_list("1 2\n3 4");
        CHECK(distance(two, 1, 3) == std::nullopt);
    }
    SUBCASE("symmetry and triangle inequality, exhaustive") {
        for (int u = 1; u <= 14; ++u)
            for (int v = 1; v <= 14; ++v) {
                CHECK(distance(g, u, v) == distance(g, v, u));
                for (int w = 1; w <= 14; ++w)
                    CHECK(*distance(g, u, w) <= *distance(g, u, v) + *distance(g, v, w));
            }
    }
}

TEST_CASE("distance classes") {
    Graph g = heawood();
    SUBCASE("from vertex 1, verbatim") {
        auto dc = distance_classes(g, 1);
        REQUIRE(dc.classes.size() == 3);
        CHECK(dc.classes[0] == std::vector<int>{2, 6, 14});
        CHECK(dc.classes[1] == std::vector<int>{3, 5, 7, 9, 11, 13});
        CHECK(dc.classes[2] == std::vector<int>{4, 8, 10, 12});
    }
    SUBCASE("triangle has a single class") {
        auto dc = distance_classes(complete_graph(3), 1);
        REQUIRE(dc.classes.size() == 1);
        CHECK(dc.classes[0] == std::vector<int>{2, 3});
    }
    SUBCASE("sizes 3/6/4 from every source") {
        for (int s = 1; s <= 14; ++s) {
            auto dc = distance_classes(g, s);
            REQUIRE(dc.classes.size() == 3);
            CHECK(dc.classes[0].size() == 3);
            CHECK(dc.classes[1].size() == 6);
            CHECK(dc.classes[2].size() == 4);
        }
    }
    SUBCASE("every vertex in class i has a neighbor in class i-1") {
        for (int s = 1; s <= 14; ++s) {
            auto dc = distance_classes(g, s);
            for (std::size_t i = 1; i < dc.classes.size(); ++i)
                for (int v : dc.classes[i]) {
                    bool linked = false;
                    for (int u : dc.classes[i - 1]) linked = linked || g.adjacent_labels(u, v);
                    CHECK(linked);
                }
        }
    }
    SUBCASE("unknown source rejected") {
        CHECK_THROWS_AS(distance_classes(g, 15), std::invalid_argument);
    }
}

TEST_CASE("delete vertices") {
    Graph g = heawood();
    SUBCASE("distance-3 pair {1,4}") {
        Graph h = delete_vertices(g, {1, 4});
        CHECK(h.vertex_count() == 12);
        CHECK(h.edge_count() == 15);
        for (int v : {2, 3, 5, 6, 13, 14}) CHECK(h.degree(h.index_of(v)) == 2);
    }
    SUBCASE("empty set is identity") { CHECK(delete_vertices(g, {}) == g); }
    SUBCASE("deleting everything yields the empty graph") {
        CHECK(delete_vertices(g, g.labels()).vertex_count() == 0);
    }
    SUBCASE("vertex count always drops by the set size") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            Graph r = testutil::random_graph(rng, 10, 0.4);
            std::vector<int> kill;
            for (int l : r.labels())
                if (rng() % 2) kill.push_back(l);
            CHECK(delete_vertices(r, kill).vertex_count() == r.vertex_count() - (int)kill.size());
        }
    }
}

namespace {

Graph relabeled(const Graph& g, const std::vector<int>& new_of_old, std::mt19937&) {
    Graph h(new_of_old);
    for (auto [u, v] : g.edges()) h.add_edge_labels(new_of_old[g.index_of(u)], new_of_old[g.index_of(v)]);
    return h;
}

}  // namespace

TEST_CASE("find_isomorphism") {
    Graph g = heawood();
    SUBCASE("100 random relabelings succeed and preserve edges") {
        std::mt19937 rng(11);
        std::vector<int> perm(14);
        std::iota(perm.begin(), perm.end(), 1);
        for (int trial = 0; trial < 100; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph h = relabeled(g, perm, rng);
            auto iso = find_isomorphism(g, h);
            REQUIRE(iso.has_value());
            for (int i = 0; i < 14; ++i)
                for (int j = 0; j < 14; ++j)
                    CHECK(g.adjacent(i, j) == h.adjacent((*iso)[i], (*iso)[j]));
        }
    }
    SUBCASE("K4 vs C4: no isomorphism") {
        CHECK(!find_isomorphism(complete_graph(4), cycle_graph(4)).has_value());
    }
    SUBCASE("same degree sequence, still distinguished") {
        Graph two_triangles = graph_from_edge_list("1 2\n2 3\n3 1\n4 5\n5 6\n6 4");
        CHECK(!find_isomorphism(cycle_graph(6), two_triangles).has_value());
    }
    SUBCASE("fano incidence construction is the heawood graph") {
        CHECK(find_isomorphism(testutil::fano_incidence_graph(), g).has_value());
    }
}

TEST_CASE("dot export") {
    CHECK(to_dot(complete_graph(3)) == "graph G {\n  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n}\n");
}

TEST_CASE("graph construction guards") {
    CHECK_THROWS_AS(Graph(std::vector<int>{0, 1}), std::invalid_argument);
    SUBCASE("65 distinct labels rejected") {
        std::vector<int> labels(65);
        std::iota(labels.begin(), labels.end(), 1);
        CHECK_THROWS_AS(Graph(labels), std::invalid_argument);
    }
    SUBCASE("edge count equals half the row-cardinality sum") {
        std::mt19937 rng(3);
        Graph r = testutil::random_graph(rng, 12, 0.5);
        int total = 0;
        for (int i = 0; i < r.vertex_count(); ++i) total += r.degree(i);
        CHECK(total == 2 * r.edge_count());
    }
}
