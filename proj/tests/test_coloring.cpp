#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "ramsey/coloring.hpp"

using namespace ramsey;

namespace {

const CliqueTuple T33({3, 3});
const CliqueTuple T43({4, 3});

Coloring make_coloring(const Graph& g, std::vector<int> colors) {
    Coloring c = Coloring::empty(g);
    REQUIRE(colors.size() == c.color.size());
    for (std::size_t i = 0; i < colors.size(); ++i)
        c.color[i] = static_cast<std::uint8_t>(colors[i]);
    return c;
}

} // namespace

TEST_CASE("clique tuple validation") {
    CHECK_THROWS_AS(CliqueTuple({}), error);
    CHECK_THROWS_AS(CliqueTuple({3, 4}), error);
    CHECK_THROWS_AS(CliqueTuple({3, 1}), error);
    CHECK(CliqueTuple({3, 2}).q() == 2);
    CHECK_FALSE(CliqueTuple({3, 2}).gadget_ok());
    CHECK(T43.order(1) == 4);
    CHECK(T43.restrict_to({2}) == CliqueTuple({3}));
    CHECK(CliqueTuple({5, 4, 3}).restrict_to({1, 3}) == CliqueTuple({5, 3}));
}

TEST_CASE("is_free basics") {
    Graph k3 = complete_graph(3);
    CHECK_FALSE(is_free(k3, T33, make_coloring(k3, {1, 1, 1})));
    CHECK(is_free(k3, T33, make_coloring(k3, {1, 1, 2})));
    CHECK_THROWS_AS(is_free(k3, T33, Coloring::empty(k3)), error);

    // K6 has no (3,3)-free coloring: r(3,3) = 6, checked over all 2^15.
    Graph k6 = complete_graph(6);
    int free_count = 0;
    oracle::each_completion(k6, 2, Coloring::empty(k6), [&](const Coloring& c) {
        if (is_free(k6, T33, c)) ++free_count;
        CHECK(is_free(k6, T33, c) == oracle::is_free(k6, T33, c));
        return true;
    });
    CHECK(free_count == 0);
}

TEST_CASE("extend basics") {
    Graph p3 = path_graph(2);
    auto out = extend(p3, T33, Coloring::empty(p3));
    REQUIRE(out.extended());
    CHECK(out.coloring == make_coloring(p3, {1, 1}));

    Graph k6e = delete_edge(complete_graph(6), {0, 1});
    CHECK(k6e.edge_count() == 14);
    auto ext = extend(k6e, T33, Coloring::empty(k6e));
    REQUIRE(ext.extended());
    CHECK(ext.coloring == oracle::first_free(k6e, T33));

    Graph k6 = complete_graph(6);
    CHECK(extend(k6, T33, Coloring::empty(k6)).kind == ExtendOutcome::Kind::NoExtension);

    // A partial that already holds a monochromatic triangle is reported
    // distinctly from mere unsatisfiability.
    Graph k4 = complete_graph(4);
    Coloring bad = Coloring::empty(k4);
    bad.color[k4.edge_index(0, 1)] = 1;
    bad.color[k4.edge_index(0, 2)] = 1;
    bad.color[k4.edge_index(1, 2)] = 1;
    CHECK(extend(k4, T33, bad).kind == ExtendOutcome::Kind::InvalidPartial);
    CHECK(extend(k4, T33, bad, SearchPath::Generic).kind == ExtendOutcome::Kind::InvalidPartial);

    // Pre-colored edges are never altered.
    Coloring pin = Coloring::empty(k6e);
    pin.color[3] = 2;
    auto pinned = extend(k6e, T33, pin);
    if (pinned.extended()) CHECK(pinned.coloring->color[3] == 2);
}

TEST_CASE("arrows on the classical instances") {
    CHECK(arrows(complete_graph(6), T33).arrows);
    auto v5 = arrows(complete_graph(5), T33);
    CHECK_FALSE(v5.arrows);
    REQUIRE(v5.witness.has_value());
    CHECK(*v5.witness == oracle::first_free(complete_graph(5), T33));
    CHECK(is_free(complete_graph(5), T33, *v5.witness));
    // The witness decomposes K5 into two edge-disjoint 5-cycles: both color
    // classes are 2-regular.
    for (int color = 1; color <= 2; ++color) {
        std::vector<int> deg(5, 0);
        for (int e = 0; e < 10; ++e)
            if (v5.witness->color[e] == color) {
                auto [u, v] = complete_graph(5).edge_at(e);
                ++deg[u];
                ++deg[v];
            }
        for (int d : deg) CHECK(d == 2);
    }

    CHECK_FALSE(arrows(matching(1), T33).arrows);
    CHECK_FALSE(arrows(matching(1), CliqueTuple({5, 3, 3})).arrows);

    // One color: arrowing means containing the clique.
    CHECK(arrows(complete_graph(4), CliqueTuple({4})).arrows);
    CHECK_FALSE(arrows(cycle_graph(5), CliqueTuple({3})).arrows);

    // Witnesses are reproducible.
    auto again = arrows(complete_graph(5), T33);
    CHECK(again.witness == v5.witness);
}

TEST_CASE("engine agrees with brute force on random graphs") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 60; ++rep) {
        int q = (rep % 2) ? 3 : 2;
        CliqueTuple T = (rep % 4 == 1) ? CliqueTuple({4, 3}) : CliqueTuple(std::vector<int>(q, 3));
        int n = 4 + static_cast<int>(rng() % 4);
        int m = 3 + static_cast<int>(rng() % (q == 3 ? 7 : 9));
        Graph g = oracle::random_graph(rng, n, m);

        auto naive = oracle::first_free(g, T);
        auto verdict = arrows(g, T, SearchPath::Generic);
        CHECK(verdict.arrows == !naive.has_value());
        if (naive) CHECK(verdict.witness == naive);
        if (T.q() == 2) {
            auto fast = arrows(g, T, SearchPath::Fast2);
            CHECK(fast.arrows == verdict.arrows);
            CHECK(fast.witness == verdict.witness);
        }

        Coloring partial = oracle::random_partial(rng, g, T.q(), 2 + rng() % 3);
        bool partial_ok = oracle::is_free(g, T, partial);
        auto ext = extend(g, T, partial);
        if (!partial_ok) {
            CHECK(ext.kind == ExtendOutcome::Kind::InvalidPartial);
        } else {
            auto expect = oracle::first_free_completion(g, T, partial);
            CHECK(ext.extended() == expect.has_value());
            if (expect) CHECK(ext.coloring == expect);
        }
    }
}

TEST_CASE("arrowing monotonicity") {
    std::mt19937_64 rng(55);
    for (int rep = 0; rep < 25; ++rep) {
        Graph g = oracle::random_graph(rng, 6, 9 + rng() % 5);
        // Supergraph: add two random edges if possible.
        auto edges = g.edges();
        for (int tries = 0; tries < 10 && edges.size() < 13; ++tries) {
            int u = static_cast<int>(rng() % 6), v = static_cast<int>(rng() % 6);
            if (u != v && !g.has_edge(u, v)) {
                edges.emplace_back(u, v);
                break;
            }
        }
        Graph big = Graph::from_edges(6, edges);
        if (arrows(g, T33).arrows) CHECK(arrows(big, T33).arrows);

        // Larger targets only make arrowing harder.
        if (!arrows(g, T33).arrows) {
            CHECK_FALSE(arrows(g, T43).arrows);
            CHECK_FALSE(arrows(g, CliqueTuple({4, 4})).arrows);
        }
    }
}

TEST_CASE("palette permutations") {
    std::mt19937_64 rng(77);
    Graph g = oracle::random_graph(rng, 6, 10);
    oracle::each_completion(g, 2, Coloring::empty(g), [&](const Coloring& c) {
        CHECK(color_class_permutation_check(g, T33, c, {2, 1}) == is_free(g, T33, c));
        CHECK(color_class_permutation_check(g, T33, c, {1, 2}) == is_free(g, T33, c));
        return true;
    });
    Coloring total = *oracle::first_free(path_graph(3), T43);
    CHECK_THROWS_WITH_AS(color_class_permutation_check(path_graph(3), T43, total, {2, 1}),
                         doctest::Contains("classes"), error);

    // Swapping equal-size colors preserves freeness on random colorings.
    CliqueTuple T334({3, 3});
    for (int rep = 0; rep < 100; ++rep) {
        Graph h = oracle::random_graph(rng, 6, 8 + rng() % 5);
        Coloring c = oracle::random_partial(rng, h, 2, h.edge_count());
        CHECK(is_free(h, T334, c) == is_free(h, T334, apply_color_permutation(c, {2, 1})));
    }
}

TEST_CASE("ramsey minimality") {
    Graph k6 = complete_graph(6);
    CHECK(is_minimal(k6, T33));

    Graph k7 = complete_graph(7);
    CHECK_FALSE(is_minimal(k7, T33));
    Graph shrunk = minimal_subgraph(k7, T33);
    CHECK(shrunk.vertex_count() == 6);
    CHECK(shrunk == complete_graph(6));

    CHECK_THROWS_WITH_AS(minimal_subgraph(complete_graph(5), T33),
                         doctest::Contains("not Ramsey"), error);

    // An isolated vertex spoils minimality even when every edge is critical.
    Graph k6_plus = disjoint_union(k6, Graph(1));
    CHECK(arrows(k6_plus, T33).arrows);
    CHECK_FALSE(is_minimal(k6_plus, T33));

    CHECK(ramsey_number(T33, 8) == 6);
    CHECK_FALSE(ramsey_number(CliqueTuple({4, 4}), 6).has_value());
}
