#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "ramsey/graph.hpp"

using namespace ramsey;

namespace {

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, std::move(e));
}

} // namespace

TEST_CASE("builders") {
    CHECK(complete_graph(3) == Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(matching(3).vertex_count() == 6);
    CHECK(matching(3).edge_count() == 3);
    Graph p3 = path_graph(3);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(complete_graph(-1), error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), error);
}

TEST_CASE("graph6 codec") {
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    CHECK(parse_graph6("Bw") == complete_graph(3));

    // Six-vertex strings round-trip bit-exactly.
    for (const char* raw : {"E?~o", "E???", "E~~w"}) {
        std::string s(raw);
        Graph g = parse_graph6(s);
        CHECK(g.vertex_count() == 6);
        CHECK(write_graph6(g) == s);
    }

    CHECK_THROWS_WITH_AS(parse_graph6(""), doctest::Contains("truncated"), error);
    CHECK_THROWS_WITH_AS(parse_graph6("B"), doctest::Contains("truncated"), error);
    CHECK_THROWS_WITH_AS(parse_graph6("B\x01w"), doctest::Contains("out-of-range"), error);
    CHECK_THROWS_WITH_AS(parse_graph6("Bww"), doctest::Contains("trailing"), error);
    CHECK_THROWS_WITH_AS(parse_graph6("B~"), doctest::Contains("padding"), error);

    // Header form switches at n = 63.
    Graph g62 = complete_graph(62);
    Graph g63 = complete_graph(63);
    CHECK(write_graph6(g62)[0] == char(62 + 63));
    CHECK(write_graph6(g63)[0] == '~');
    CHECK(parse_graph6(write_graph6(g62)) == g62);
    CHECK(parse_graph6(write_graph6(g63)) == g63);

    // Round-trip identity on random graphs.
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = oracle::random_graph(rng, n, static_cast<int>(rng() % (n * 2 + 1)));
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    CHECK(parse_graph6(write_graph6(Graph(0))) == Graph(0));
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("0 1\n1 2\n");
    CHECK(g == path_graph(2));
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), error);
    CHECK_THROWS_AS(parse_edge_list("a b"), error);
}

TEST_CASE("clique enumeration") {
    CHECK(cliques_of_size(complete_graph(5), 3).size() == 10);
    CHECK(cliques_of_size(cycle_graph(5), 3).empty());

    // Petersen graph is triangle-free; cross-check every triple directly.
    Graph pg = petersen();
    int triangles = 0;
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b)
            for (int c = b + 1; c < 10; ++c)
                if (pg.has_edge(a, b) && pg.has_edge(a, c) && pg.has_edge(b, c)) ++triangles;
    CHECK(triangles == 0);
    CHECK(cliques_of_size(pg, 3).empty());

    auto tris = cliques_of_size(complete_graph(4), 3);
    CHECK(std::is_sorted(tris.begin(), tris.end()));
    CHECK(cliques_of_size(complete_graph(3), 1).size() == 3);
    CHECK(clique_number(petersen()) == 2);
    CHECK(clique_number(complete_graph(6)) == 6);
}

TEST_CASE("edge distance") {
    Graph p4 = path_graph(3);
    CHECK(edge_distance(p4, {0, 1}, {2, 3}) == 1);
    CHECK(edge_distance(p4, {0, 1}, {0, 1}) == 0);
    CHECK(edge_distance(p4, {0, 1}, {1, 2}) == 0);

    Graph two = matching(2);
    CHECK(edge_distance(two, {0, 1}, {2, 3}) == -1);

    CHECK_THROWS_AS(edge_distance(p4, {0, 2}, {2, 3}), error);

    // Symmetry, and adding an edge never increases the distance.
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = oracle::random_graph(rng, 8, 10);
        if (g.edge_count() < 2) continue;
        auto e = g.edge_at(rng() % g.edge_count());
        auto f = g.edge_at(rng() % g.edge_count());
        int d1 = edge_distance(g, {e.first, e.second}, {f.first, f.second});
        int d2 = edge_distance(g, {f.first, f.second}, {e.first, e.second});
        CHECK(d1 == d2);
        // Add one absent edge.
        int u = static_cast<int>(rng() % 8), v = static_cast<int>(rng() % 8);
        if (u != v && !g.has_edge(u, v)) {
            auto edges = g.edges();
            edges.emplace_back(u, v);
            Graph g2 = Graph::from_edges(8, edges);
            int d3 = edge_distance(g2, {e.first, e.second}, {f.first, f.second});
            if (d1 >= 0) {
                CHECK(d3 >= 0);
                CHECK(d3 <= d1);
            }
        }
    }
}

TEST_CASE("merge_edges") {
    Graph k3 = complete_graph(3);
    auto [bowtie, map] = merge_edges(k3, {0, 1}, k3, {0, 1});
    CHECK(bowtie.vertex_count() == 4);
    CHECK(bowtie.edge_count() == 5);

    // Merging a bare edge onto any edge is the identity up to labels.
    Graph c5 = cycle_graph(5);
    auto [same, map2] = merge_edges(c5, {2, 3}, matching(1), {0, 1});
    CHECK(same == c5);
    CHECK(map2.edge_map_right[0] == same.edge_index(2, 3));

    CHECK_THROWS_AS(merge_edges(c5, {0, 2}, k3, {0, 1}), error);

    // Count formulas |V|-2 and |E|-1 hold on random pairs, and every clique
    // of the product lies inside one operand.
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = oracle::random_graph(rng, 4 + rng() % 5, 4 + rng() % 8);
        Graph h = oracle::random_graph(rng, 4 + rng() % 5, 4 + rng() % 8);
        if (g.edge_count() == 0 || h.edge_count() == 0) continue;
        auto ge = g.edge_at(rng() % g.edge_count());
        auto he = h.edge_at(rng() % h.edge_count());
        MergeOrientation o{rng() % 2 == 0};
        auto [m, sm] = merge_edges(g, {ge.first, ge.second}, h, {he.first, he.second}, o);
        CHECK(m.vertex_count() == g.vertex_count() + h.vertex_count() - 2);
        CHECK(m.edge_count() == g.edge_count() + h.edge_count() - 1);
        CHECK(cliques_confined(m, sm, 6));
        // Maps are total and land on real edges.
        for (int i = 0; i < g.edge_count(); ++i) CHECK(sm.edge_map_left[i] >= 0);
        for (int i = 0; i < h.edge_count(); ++i) CHECK(sm.edge_map_right[i] >= 0);
    }
}

TEST_CASE("canonical form") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = oracle::random_graph(rng, 7, 2 + rng() % 14);
        Graph c = canonical_form(g);
        CHECK(canonical_form(c) == c);
        CHECK(iso_equal(g, c));
    }

    // Any relabeling of C5 lands on the same form.
    Graph base = cycle_graph(5);
    Graph cf = canonical_form(base);
    std::vector<int> perm{0, 1, 2, 3, 4};
    for (int rep = 0; rep < 20; ++rep) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : base.edges()) edges.emplace_back(perm[u], perm[v]);
        CHECK(canonical_form(Graph::from_edges(5, edges)) == cf);
    }

    // The 11 graphs on 4 vertices, by exhaustive enumeration of all 2^6
    // edge subsets.
    std::vector<std::pair<int, int>> slots{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::set<std::string> forms;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < 6; ++b)
            if (mask & (1 << b)) edges.push_back(slots[b]);
        forms.insert(write_graph6(canonical_form(Graph::from_edges(4, edges))));
    }
    CHECK(forms.size() == 11);

    CHECK_THROWS_WITH_AS(canonical_form(complete_graph(17)), doctest::Contains("cap"), error);
    CHECK(canonical_form(complete_graph(20), 20) == complete_graph(20));

    CHECK(iso_equal(path_graph(3), Graph::from_edges(4, {{3, 1}, {1, 0}, {0, 2}})));
    CHECK_FALSE(iso_equal(path_graph(3), matching(2)));
}
