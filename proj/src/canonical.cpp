#include <algorithm>
#include <map>
#include <vector>

#include "ramsey/graph.hpp"

// Exact canonical labeling via individualization-refinement backtracking.
// Leaves are full relabelings; the winner minimizes the adjacency bit-string
// read in canonical edge order. Twin candidates inside a cell are pruned
// (swapping twins is an automorphism), which keeps complete multipartite
// graphs linear instead of factorial.

namespace ramsey {

namespace {

using Cells = std::vector<std::vector<int>>;

void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
            Bitset splitter(g.vertex_count());
            for (int v : cells[si]) splitter.set(v);
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                if (cells[ci].size() <= 1) continue;
                std::map<int, std::vector<int>> groups;
                for (int v : cells[ci]) {
                    Bitset t = g.neighbors(v);
                    t &= splitter;
                    groups[t.count()].push_back(v);
                }
                if (groups.size() > 1) {
                    Cells next;
                    next.reserve(cells.size() + groups.size());
                    for (std::size_t k = 0; k < cells.size(); ++k) {
                        if (k == ci)
                            for (auto& [cnt, grp] : groups) next.push_back(grp);
                        else
                            next.push_back(cells[k]);
                    }
                    cells = std::move(next);
                    changed = true;
                    break;
                }
            }
        }
    }
}

struct CanonState {
    const Graph& g;
    std::vector<std::uint64_t> best;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit CanonState(const Graph& gr) : g(gr) {}

    std::vector<std::uint64_t> bitstring(const std::vector<int>& perm) const {
        int n = g.vertex_count();
        std::vector<std::uint64_t> bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
        std::size_t k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (g.has_edge(perm[i], perm[j])) bits[k >> 6] |= 1ull << (63 - (k & 63));
        return bits;
    }

    bool twins(int u, int v) const {
        Bitset a = g.neighbors(u);
        Bitset b = g.neighbors(v);
        a.reset(u);
        a.reset(v);
        b.reset(u);
        b.reset(v);
        return a == b;
    }

    void descend(Cells cells) {
        refine(g, cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            std::vector<int> perm;
            perm.reserve(g.vertex_count());
            for (auto& c : cells) perm.push_back(c[0]);
            auto bits = bitstring(perm);
            if (!have_best || bits < best) {
                best = std::move(bits);
                best_perm = std::move(perm);
                have_best = true;
            }
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            bool dup = false;
            for (int u : tried)
                if (twins(u, v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried.push_back(v);
            Cells next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i == target) {
                    next.push_back({v});
                    std::vector<int> rest;
                    for (int w : cells[i])
                        if (w != v) rest.push_back(w);
                    next.push_back(std::move(rest));
                } else {
                    next.push_back(cells[i]);
                }
            }
            descend(std::move(next));
        }
    }
};

} // namespace

Graph canonical_form(const Graph& g, int cap) {
    require(g.vertex_count() <= cap, "canonical_form: cap exceeded");
    int n = g.vertex_count();
    if (n == 0) return g;
    CanonState state(g);
    Cells initial{std::vector<int>(n)};
    for (int v = 0; v < n; ++v) initial[0][v] = v;
    state.descend(std::move(initial));
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[state.best_perm[i]] = i;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
    return Graph::from_edges(n, std::move(edges));
}

bool iso_equal(const Graph& g, const Graph& h, int cap) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.vertex_count(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g, cap) == canonical_form(h, cap);
}

} // namespace ramsey
