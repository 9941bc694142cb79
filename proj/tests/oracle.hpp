#pragma once

// Brute-force oracles used to freeze expected values. These deliberately
// avoid the library's search machinery: freeness is re-derived from
// adjacency alone, and colorings are enumerated as plain odometers in
// canonical edge order, so the oracles stay independent of the
// implementation paths they check.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace oracle {

using ramsey::CliqueTuple;
using ramsey::Coloring;
using ramsey::Graph;

// Monochromatic K_t in the given color? Own combination walk over vertex
// subsets; adjacency is the only library accessor used.
inline bool mono_clique(const Graph& g, const Coloring& c, int color, int t) {
    int n = g.vertex_count();
    if (t > n) return false;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        bool good = true;
        for (int a = 0; a < t && good; ++a)
            for (int b = a + 1; b < t; ++b) {
                if (!g.has_edge(idx[a], idx[b]) ||
                    c.color[g.edge_index(idx[a], idx[b])] != color) {
                    good = false;
                    break;
                }
            }
        if (good) return true;
        int pos = t - 1;
        while (pos >= 0 && idx[pos] == n - t + pos) --pos;
        if (pos < 0) return false;
        ++idx[pos];
        for (int i = pos + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
    }
}

inline bool is_free(const Graph& g, const CliqueTuple& T, const Coloring& c) {
    for (int color = 1; color <= T.q(); ++color)
        if (mono_clique(g, c, color, T.order(color))) return false;
    return true;
}

// Visits every total completion of the partial coloring in lexicographic
// order (canonical edge order, colors ascending). Return false to stop.
template <typename Fn>
void each_completion(const Graph& g, int q, const Coloring& partial, Fn&& fn) {
    std::vector<int> slots;
    for (int e = 0; e < g.edge_count(); ++e)
        if (partial.color[e] == 0) slots.push_back(e);
    Coloring c = partial;
    for (int e : slots) c.color[e] = 1;
    while (true) {
        if (!fn(static_cast<const Coloring&>(c))) return;
        int pos = static_cast<int>(slots.size()) - 1;
        while (pos >= 0 && c.color[slots[pos]] == q) --pos;
        if (pos < 0) return;
        ++c.color[slots[pos]];
        for (std::size_t i = pos + 1; i < slots.size(); ++i) c.color[slots[i]] = 1;
    }
}

inline std::optional<Coloring> first_free_completion(const Graph& g, const CliqueTuple& T,
                                                     const Coloring& partial) {
    std::optional<Coloring> found;
    each_completion(g, T.q(), partial, [&](const Coloring& c) {
        if (oracle::is_free(g, T, c)) {
            found = c;
            return false;
        }
        return true;
    });
    return found;
}

inline std::optional<Coloring> first_free(const Graph& g, const CliqueTuple& T) {
    return first_free_completion(g, T, Coloring::empty(g));
}

// All realizable color pairs on two distinguished edges, by full sweep.
inline std::set<std::pair<int, int>> aux_arcs(const Graph& g, const CliqueTuple& T,
                                              const ramsey::EdgeRef& g1,
                                              const ramsey::EdgeRef& g2) {
    std::set<std::pair<int, int>> arcs;
    each_completion(g, T.q(), Coloring::empty(g), [&](const Coloring& c) {
        if (oracle::is_free(g, T, c))
            arcs.emplace(c.color[g.edge_index(g1)], c.color[g.edge_index(g2)]);
        return true;
    });
    return arcs;
}

// ---- seeded generators ------------------------------------------------------

inline Graph random_graph(std::mt19937_64& rng, int n, int m) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    if (m > static_cast<int>(all.size())) m = static_cast<int>(all.size());
    all.resize(m);
    return Graph::from_edges(n, std::move(all));
}

inline Coloring random_partial(std::mt19937_64& rng, const Graph& g, int q, int pinned) {
    Coloring c = Coloring::empty(g);
    std::vector<int> idx(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    pinned = std::min(pinned, g.edge_count());
    for (int i = 0; i < pinned; ++i)
        c.color[idx[i]] = static_cast<std::uint8_t>(1 + rng() % q);
    return c;
}

} // namespace oracle
