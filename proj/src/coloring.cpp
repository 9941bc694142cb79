#include "ramsey/coloring.hpp"

#include <algorithm>
#include <map>

#include "fast2.hpp"

namespace ramsey {

CliqueTuple::CliqueTuple(std::vector<int> orders) : orders_(std::move(orders)) {
    require(!orders_.empty(), "tuple must have at least one clique");
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        require(orders_[i] >= 2, "clique orders must be at least 2");
        require(i == 0 || orders_[i - 1] >= orders_[i], "clique orders must be nonincreasing");
    }
}

void CliqueTuple::require_gadget() const {
    require(gadget_ok(), "gadget operations require all clique orders >= 3");
}

CliqueTuple CliqueTuple::restrict_to(const std::vector<int>& X) const {
    require(!X.empty(), "restriction needs a non-empty color set");
    std::vector<int> sub;
    for (std::size_t i = 0; i < X.size(); ++i) {
        require(X[i] >= 1 && X[i] <= q(), "restriction color out of palette");
        require(i == 0 || X[i] > X[i - 1], "restriction colors must be strictly increasing");
        sub.push_back(order(X[i]));
    }
    return CliqueTuple(std::move(sub));
}

bool is_free(const Graph& g, const CliqueTuple& T, const Coloring& c) {
    require(static_cast<int>(c.color.size()) == g.edge_count(), "coloring size mismatch");
    require(c.total(), "is_free requires a total coloring");
    for (auto col : c.color) require(col <= T.q(), "color outside palette");
    for (int color = 1; color <= T.q(); ++color) {
        bool mono = false;
        for_each_clique(g, T.order(color), [&](const std::vector<int>& K) {
            bool all_match = true;
            for (std::size_t a = 0; a < K.size() && all_match; ++a)
                for (std::size_t b = a + 1; b < K.size(); ++b)
                    if (c.color[g.edge_index(K[a], K[b])] != color) {
                        all_match = false;
                        break;
                    }
            if (all_match) mono = true;
            return !mono;
        });
        if (mono) return false;
    }
    return true;
}

// ---- generic search engine --------------------------------------------------
//
// Depth-first over the uncolored edges in the given order, colors tried
// ascending. Per color we track, for every clique of the color's order, how
// many of its edges carry that color; a branch dies the moment a counter
// reaches the clique's edge count. The first total coloring found is the
// least one in the branch order.

namespace {

class GenericSearcher {
public:
    GenericSearcher(const Graph& g, const CliqueTuple& T) : g_(g), T_(T) {
        std::vector<int> sizes = T.orders();
        std::sort(sizes.begin(), sizes.end());
        sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
        for (int s : sizes) {
            SizeCliques sc;
            sc.size = s;
            sc.at_edge.assign(g.edge_count(), {});
            for_each_clique(g, s, [&](const std::vector<int>& K) {
                int id = static_cast<int>(sc.edge_total.size());
                int cnt = 0;
                for (std::size_t a = 0; a < K.size(); ++a)
                    for (std::size_t b = a + 1; b < K.size(); ++b) {
                        sc.at_edge[g.edge_index(K[a], K[b])].push_back(id);
                        ++cnt;
                    }
                sc.edge_total.push_back(cnt);
                return true;
            });
            size_index_[s] = static_cast<int>(by_size_.size());
            by_size_.push_back(std::move(sc));
        }
        counts_.resize(T.q());
        for (int c = 1; c <= T.q(); ++c)
            counts_[c - 1].assign(by_size_[size_index_[T.order(c)]].edge_total.size(), 0);
    }

    ExtendOutcome run(const Coloring& partial, const std::vector<int>& branch_order) {
        work_ = partial;
        std::vector<int> pinned;
        for (int e = 0; e < g_.edge_count(); ++e)
            if (partial.color[e] != 0) pinned.push_back(e);
        for (std::size_t i = 0; i < pinned.size(); ++i) {
            if (!place(pinned[i], work_.color[pinned[i]])) {
                for (std::size_t j = 0; j < i; ++j) unplace(pinned[j], work_.color[pinned[j]]);
                return {ExtendOutcome::Kind::InvalidPartial, std::nullopt};
            }
        }
        order_ = &branch_order;
        bool found = dfs(0);
        for (int e : pinned) unplace(e, work_.color[e]);
        if (found) return {ExtendOutcome::Kind::Extended, solution_};
        return {ExtendOutcome::Kind::NoExtension, std::nullopt};
    }

private:
    struct SizeCliques {
        int size = 0;
        std::vector<int> edge_total;              // clique id -> C(size, 2)
        std::vector<std::vector<int>> at_edge;    // edge index -> clique ids
    };

    bool place(int edge, int color) {
        const SizeCliques& sc = by_size_[size_index_[T_.order(color)]];
        auto& cnt = counts_[color - 1];
        const auto& ids = sc.at_edge[edge];
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (++cnt[ids[i]] == sc.edge_total[ids[i]]) {
                for (std::size_t j = 0; j <= i; ++j) --cnt[ids[j]];
                return false;
            }
        }
        return true;
    }

    void unplace(int edge, int color) {
        auto& cnt = counts_[color - 1];
        for (int id : by_size_[size_index_[T_.order(color)]].at_edge[edge]) --cnt[id];
    }

    bool dfs(std::size_t k) {
        if (k == order_->size()) {
            solution_ = work_;
            return true;
        }
        int e = (*order_)[k];
        for (int c = 1; c <= T_.q(); ++c) {
            if (!place(e, c)) continue;
            work_.color[e] = c;
            if (dfs(k + 1)) return true;
            work_.color[e] = 0;
            unplace(e, c);
        }
        return false;
    }

    const Graph& g_;
    CliqueTuple T_;
    std::vector<SizeCliques> by_size_;
    std::map<int, int> size_index_;
    std::vector<std::vector<int>> counts_;
    Coloring work_;
    std::optional<Coloring> solution_;
    const std::vector<int>* order_ = nullptr;
};

std::vector<int> uncolored_in_canonical_order(const Graph& g, const Coloring& partial) {
    std::vector<int> order;
    for (int e = 0; e < g.edge_count(); ++e)
        if (partial.color[e] == 0) order.push_back(e);
    return order;
}

} // namespace

ExtendOutcome extend(const Graph& g, const CliqueTuple& T, const Coloring& partial,
                     SearchPath path) {
    require(static_cast<int>(partial.color.size()) == g.edge_count(), "coloring size mismatch");
    for (auto c : partial.color) require(c <= T.q(), "color outside palette");
    if (path == SearchPath::Fast2)
        require(detail::fast2_applicable(g, T), "fast path requires q = 2 and <= 64 vertices");
    if (path != SearchPath::Generic && detail::fast2_applicable(g, T))
        return detail::fast2_extend(g, T, partial);
    GenericSearcher searcher(g, T);
    return searcher.run(partial, uncolored_in_canonical_order(g, partial));
}

ArrowVerdict arrows(const Graph& g, const CliqueTuple& T, SearchPath path) {
    ExtendOutcome out = extend(g, T, Coloring::empty(g), path);
    if (out.extended()) return {false, out.coloring};
    return {true, std::nullopt};
}

Coloring apply_color_permutation(const Coloring& c, const std::vector<int>& sigma) {
    Coloring out = c;
    for (auto& col : out.color)
        if (col != 0) col = static_cast<std::uint8_t>(sigma[col - 1]);
    return out;
}

bool color_class_permutation_check(const Graph& g, const CliqueTuple& T, const Coloring& c,
                                   const std::vector<int>& sigma) {
    require(static_cast<int>(sigma.size()) == T.q(), "sigma must cover the palette");
    std::vector<bool> seen(T.q(), false);
    for (int i = 1; i <= T.q(); ++i) {
        int img = sigma[i - 1];
        require(img >= 1 && img <= T.q(), "sigma image outside palette");
        require(!seen[img - 1], "sigma is not a permutation");
        seen[img - 1] = true;
        require(T.order(img) == T.order(i), "sigma crosses clique-size classes");
    }
    return is_free(g, T, apply_color_permutation(c, sigma));
}

Graph delete_edge(const Graph& g, const EdgeRef& e) {
    require(g.has_edge(e), "delete_edge: edge missing");
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (!(u == e.lo() && v == e.hi())) edges.emplace_back(u, v);
    return Graph::from_edges(g.vertex_count(), std::move(edges));
}

bool is_minimal(const Graph& g, const CliqueTuple& T) {
    if (!arrows(g, T).arrows) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return false;
    for (auto [u, v] : g.edges())
        if (arrows(delete_edge(g, EdgeRef(u, v)), T).arrows) return false;
    return true;
}

Graph minimal_subgraph(const Graph& g, const CliqueTuple& T) {
    require(arrows(g, T).arrows, "minimal_subgraph: input is not Ramsey for the tuple");
    Graph cur = g;
    for (auto [u, v] : g.edges()) {
        Graph candidate = delete_edge(cur, EdgeRef(u, v));
        if (arrows(candidate, T).arrows) cur = std::move(candidate);
    }
    // Drop isolated vertices, preserving relative label order.
    std::vector<int> relabel(cur.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < cur.vertex_count(); ++v)
        if (cur.degree(v) > 0) relabel[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : cur.edges()) edges.emplace_back(relabel[u], relabel[v]);
    return Graph::from_edges(next, std::move(edges));
}

std::optional<int> ramsey_number(const CliqueTuple& T, int n_cap) {
    for (int n = 2; n <= n_cap; ++n)
        if (arrows(complete_graph(n), T).arrows) return n;
    return std::nullopt;
}

} // namespace ramsey
