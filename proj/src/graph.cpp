#include "ramsey/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ramsey {

Graph::Graph(int n) : n_(n) {
    require(n >= 0, "vertex count must be nonnegative");
    require(n <= kMaxVertices, "vertex count exceeds cap");
    adj_.assign(n, Bitset(n));
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto& [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
        require(u != v, "self-loop rejected");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges_ = std::move(edges);
    for (auto [u, v] : g.edges_) {
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return adj_[u].test(v);
}

int Graph::edge_index(int u, int v) const {
    if (!has_edge(u, v)) return -1;
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    return static_cast<int>(it - edges_.begin());
}

// ---- builders -------------------------------------------------------------

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, std::move(e));
}

Graph path_graph(int k) {
    require(k >= 0, "path length must be nonnegative");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(k == 0 ? 1 : k + 1, std::move(e));
}

Graph matching(int k) {
    require(k >= 0, "matching size must be nonnegative");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(2 * i, 2 * i + 1);
    return Graph::from_edges(2 * k, std::move(e));
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(e));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> e = g.edges();
    int off = g.vertex_count();
    for (auto [u, v] : h.edges()) e.emplace_back(u + off, v + off);
    return Graph::from_edges(off + h.vertex_count(), std::move(e));
}

// ---- cliques --------------------------------------------------------------

namespace {

bool clique_rec(const Graph& g, int t, std::vector<int>& cur, const Bitset& cand,
                const std::function<bool(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == t) return fn(cur);
    for (int v = cand.next(); v >= 0; v = cand.next(v + 1)) {
        // Vertices remaining must still allow a set of size t.
        cur.push_back(v);
        Bitset next = cand & g.neighbors(v);
        // Only candidates above v keep the lexicographic order.
        for (int w = next.next(); w >= 0 && w <= v; w = next.next(w + 1)) next.reset(w);
        if (!clique_rec(g, t, cur, next, fn)) return false;
        cur.pop_back();
    }
    return true;
}

} // namespace

void for_each_clique(const Graph& g, int t,
                     const std::function<bool(const std::vector<int>&)>& fn) {
    require(t >= 1, "clique size must be positive");
    if (t > g.vertex_count()) return;
    Bitset all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    std::vector<int> cur;
    cur.reserve(t);
    clique_rec(g, t, cur, all, fn);
}

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int t) {
    std::vector<std::vector<int>> out;
    for_each_clique(g, t, [&](const std::vector<int>& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool has_clique(const Graph& g, int t) {
    bool found = false;
    for_each_clique(g, t, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

int clique_number(const Graph& g) {
    int w = 0;
    while (w < g.vertex_count() && has_clique(g, w + 1)) ++w;
    return w;
}

// ---- distances ------------------------------------------------------------

int edge_distance(const Graph& g, const EdgeRef& e, const EdgeRef& f) {
    require(g.has_edge(e), "first edge not in graph");
    require(g.has_edge(f), "second edge not in graph");
    if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) return 0;
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> bfs;
    dist[e.u] = dist[e.v] = 0;
    bfs.push(e.u);
    bfs.push(e.v);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        if (u == f.u || u == f.v) return dist[u];
        const Bitset& nb = g.neighbors(u);
        for (int w = nb.next(); w >= 0; w = nb.next(w + 1)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                bfs.push(w);
            }
        }
    }
    return -1;
}

// ---- surgery --------------------------------------------------------------

Bitset SurgeryMap::left_image(int combined_n) const {
    Bitset b(combined_n);
    for (int x : vertex_map_left) b.set(x);
    return b;
}

Bitset SurgeryMap::right_image(int combined_n) const {
    Bitset b(combined_n);
    for (int x : vertex_map_right) b.set(x);
    return b;
}

std::pair<Graph, SurgeryMap> merge_edges(const Graph& g, const EdgeRef& ge,
                                         const Graph& h, const EdgeRef& he,
                                         MergeOrientation orientation) {
    require(g.has_edge(ge), "merge: left edge missing");
    require(h.has_edge(he), "merge: right edge missing");

    int ng = g.vertex_count();
    SurgeryMap map;
    map.vertex_map_left.resize(ng);
    std::iota(map.vertex_map_left.begin(), map.vertex_map_left.end(), 0);

    map.vertex_map_right.assign(h.vertex_count(), -1);
    map.vertex_map_right[he.lo()] = orientation.flipped ? ge.hi() : ge.lo();
    map.vertex_map_right[he.hi()] = orientation.flipped ? ge.lo() : ge.hi();
    int next = ng;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (map.vertex_map_right[v] < 0) map.vertex_map_right[v] = next++;

    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges())
        edges.emplace_back(map.vertex_map_right[u], map.vertex_map_right[v]);
    Graph combined = Graph::from_edges(next, std::move(edges));

    map.edge_map_left.resize(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge_at(i);
        map.edge_map_left[i] = combined.edge_index(u, v);
    }
    map.edge_map_right.resize(h.edge_count());
    for (int i = 0; i < h.edge_count(); ++i) {
        auto [u, v] = h.edge_at(i);
        map.edge_map_right[i] =
            combined.edge_index(map.vertex_map_right[u], map.vertex_map_right[v]);
    }
    return {std::move(combined), std::move(map)};
}

bool cliques_confined(const Graph& combined, const SurgeryMap& map, int max_size) {
    // Containment is as a subgraph: every edge of the clique must be the
    // image of an edge of the same operand.
    Bitset left_edges(combined.edge_count()), right_edges(combined.edge_count());
    for (int i : map.edge_map_left) left_edges.set(i);
    for (int i : map.edge_map_right) right_edges.set(i);
    for (int t = 3; t <= max_size; ++t) {
        bool ok = true;
        for_each_clique(combined, t, [&](const std::vector<int>& c) {
            bool in_left = true, in_right = true;
            for (std::size_t a = 0; a < c.size(); ++a)
                for (std::size_t b = a + 1; b < c.size(); ++b) {
                    int idx = combined.edge_index(c[a], c[b]);
                    if (!left_edges.test(idx)) in_left = false;
                    if (!right_edges.test(idx)) in_right = false;
                }
            if (!in_left && !in_right) {
                ok = false;
                return false;
            }
            return true;
        });
        if (!ok) return false;
    }
    return true;
}

} // namespace ramsey
