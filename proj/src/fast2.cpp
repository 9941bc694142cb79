#include <algorithm>
#include <bit>
#include <cstdint>

#include "fast2.hpp"

// Two-color search over vertex adjacency masks. Colorings are explored as
// red graphs (color 1) whose complement within the colored region stays
// K_{t2}-free, which is the classical subgraph formulation of 2-color
// arrowing. Refutations run in vertex-by-vertex order; witnesses are found
// by a second pass in canonical edge order, so verdicts and witnesses match
// the generic engine exactly.

namespace ramsey::detail {

namespace {

// Is there a clique of the given size inside cand, using adj for the color
// under test?
bool clique_in(const std::uint64_t* adj, std::uint64_t cand, int need) {
    if (need == 0) return true;
    while (cand) {
        if (std::popcount(cand) < need) return false;
        int w = std::countr_zero(cand);
        cand &= cand - 1;
        if (clique_in(adj, adj[w] & cand, need - 1)) return true;
    }
    return false;
}

class Fast2 {
public:
    Fast2(const Graph& g, const CliqueTuple& T) : g_(g) {
        t_[0] = T.order(1);
        t_[1] = T.order(2);
        std::fill(std::begin(mask_[0]), std::end(mask_[0]), 0);
        std::fill(std::begin(mask_[1]), std::end(mask_[1]), 0);
    }

    ExtendOutcome run(const Coloring& partial) {
        work_ = partial;
        std::vector<int> pinned, open;
        for (int e = 0; e < g_.edge_count(); ++e)
            (partial.color[e] ? pinned : open).push_back(e);
        for (int e : pinned) {
            auto [u, v] = g_.edge_at(e);
            int c = partial.color[e] - 1;
            if (completes(c, u, v)) return {ExtendOutcome::Kind::InvalidPartial, std::nullopt};
            place(c, u, v);
        }

        // Vertex-by-vertex order: all edges into vertex v before any edge
        // into v+1. Cheap to refute, and the verdict is order-independent.
        std::vector<int> colex = open;
        std::sort(colex.begin(), colex.end(), [&](int a, int b) {
            auto ea = g_.edge_at(a), eb = g_.edge_at(b);
            return std::make_pair(ea.second, ea.first) < std::make_pair(eb.second, eb.first);
        });
        std::uint64_t snap[2][64];
        std::copy(std::begin(mask_[0]), std::end(mask_[0]), std::begin(snap[0]));
        std::copy(std::begin(mask_[1]), std::end(mask_[1]), std::begin(snap[1]));
        if (!dfs(colex, 0, false)) return {ExtendOutcome::Kind::NoExtension, std::nullopt};

        // A total extension exists; find the least one in canonical order.
        std::copy(std::begin(snap[0]), std::end(snap[0]), std::begin(mask_[0]));
        std::copy(std::begin(snap[1]), std::end(snap[1]), std::begin(mask_[1]));
        work_ = partial;
        dfs(open, 0, true);
        return {ExtendOutcome::Kind::Extended, solution_};
    }

private:
    bool completes(int c, int u, int v) const {
        return clique_in(mask_[c], mask_[c][u] & mask_[c][v], t_[c] - 2);
    }

    void place(int c, int u, int v) {
        mask_[c][u] |= 1ull << v;
        mask_[c][v] |= 1ull << u;
    }

    void unplace(int c, int u, int v) {
        mask_[c][u] &= ~(1ull << v);
        mask_[c][v] &= ~(1ull << u);
    }

    bool dfs(const std::vector<int>& order, std::size_t k, bool record) {
        if (k == order.size()) {
            if (record) solution_ = work_;
            return true;
        }
        int e = order[k];
        auto [u, v] = g_.edge_at(e);
        for (int c = 0; c < 2; ++c) {
            if (completes(c, u, v)) continue;
            place(c, u, v);
            work_.color[e] = static_cast<std::uint8_t>(c + 1);
            if (dfs(order, k + 1, record)) return true;
            work_.color[e] = 0;
            unplace(c, u, v);
        }
        return false;
    }

    const Graph& g_;
    int t_[2];
    std::uint64_t mask_[2][64];
    Coloring work_;
    std::optional<Coloring> solution_;
};

} // namespace

bool fast2_applicable(const Graph& g, const CliqueTuple& T) {
    return T.q() == 2 && g.vertex_count() <= 64;
}

ExtendOutcome fast2_extend(const Graph& g, const CliqueTuple& T, const Coloring& partial) {
    return Fast2(g, T).run(partial);
}

} // namespace ramsey::detail
