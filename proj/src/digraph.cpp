#include "ramsey/digraph.hpp"

#include <algorithm>

namespace ramsey {

std::vector<int> AuxDigraph::out_neighbors(int i) const {
    std::vector<int> out;
    for (auto& [a, b] : arcs)
        if (a == i) out.push_back(b);
    return out;
}

std::vector<int> AuxDigraph::in_neighbors(int i) const {
    std::vector<int> in;
    for (auto& [a, b] : arcs)
        if (b == i) in.push_back(a);
    return in;
}

AuxDigraph aux_digraph(const Graph& g, const CliqueTuple& T, const EdgeRef& g1,
                       const EdgeRef& g2, SearchPath path) {
    require(g.has_edge(g1), "aux_digraph: first edge missing");
    require(g.has_edge(g2), "aux_digraph: second edge missing");
    require(!g1.same(g2), "aux_digraph: distinguished edges must be distinct");
    int e1 = g.edge_index(g1), e2 = g.edge_index(g2);
    AuxDigraph d;
    d.q = T.q();
    for (int i = 1; i <= T.q(); ++i)
        for (int j = 1; j <= T.q(); ++j) {
            Coloring partial = Coloring::empty(g);
            partial.color[e1] = static_cast<std::uint8_t>(i);
            partial.color[e2] = static_cast<std::uint8_t>(j);
            if (extend(g, T, partial, path).extended()) d.arcs.emplace(i, j);
        }
    return d;
}

DigraphReport analyze(const AuxDigraph& d) {
    DigraphReport r;
    r.out_nbrs.assign(d.q, {});
    r.in_nbrs.assign(d.q, {});
    for (auto& [i, j] : d.arcs) {
        r.out_nbrs[i - 1].push_back(j);
        r.in_nbrs[j - 1].push_back(i);
    }
    for (int i = 1; i <= d.q; ++i) {
        if (r.out_nbrs[i - 1].empty()) r.empty_out.push_back(i);
        if (r.in_nbrs[i - 1].empty()) r.empty_in.push_back(i);
    }
    r.symmetric = true;
    for (auto& [i, j] : d.arcs) {
        if (!d.has(j, i)) r.symmetric = false;
        if (i != j && d.has(j, i)) r.has_two_cycle = true;
    }
    return r;
}

bool expected_shape_check(const AuxDigraph& d, const SenderShape& kind) {
    require(!kind.X.empty(), "shape check needs a non-empty color set");
    std::vector<bool> in_x(d.q + 1, false);
    for (int c : kind.X) {
        require(c >= 1 && c <= d.q, "shape color outside palette");
        in_x[c] = true;
    }
    for (int i = 1; i <= d.q; ++i)
        for (int j = 1; j <= d.q; ++j) {
            bool want = kind.polarity == SenderPolarity::Negative
                            ? (in_x[i] && in_x[j] && i != j)
                            : (in_x[i] && i == j);
            if (d.has(i, j) != want) return false;
        }
    return true;
}

} // namespace ramsey
