#pragma once

#include <set>
#include <utility>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

// Digraph on the color palette recording which ordered color pairs are
// realizable on two distinguished edges under T-free colorings.
struct AuxDigraph {
    int q = 0;
    std::set<std::pair<int, int>> arcs;

    bool has(int i, int j) const { return arcs.count({i, j}) > 0; }

    std::vector<int> out_neighbors(int i) const;
    std::vector<int> in_neighbors(int i) const;
};

struct DigraphReport {
    std::vector<int> empty_out;
    std::vector<int> empty_in;
    bool has_two_cycle = false;
    bool symmetric = false;
    std::vector<std::vector<int>> out_nbrs;  // index 0 holds color 1
    std::vector<std::vector<int>> in_nbrs;
};

// Arc (i,j) present iff the partial coloring {g1 -> i, g2 -> j} extends to a
// T-free coloring. q^2 extension queries.
AuxDigraph aux_digraph(const Graph& g, const CliqueTuple& T, const EdgeRef& g1,
                       const EdgeRef& g2, SearchPath path = SearchPath::Auto);

DigraphReport analyze(const AuxDigraph& d);

enum class SenderPolarity { Negative, Positive };

struct SenderShape {
    std::vector<int> X;  // sorted colors
    SenderPolarity polarity = SenderPolarity::Negative;
};

// Exact match against the sender characterizations: negative X-sender means
// all arcs within X except loops and nothing touching the complement;
// positive X-sender means exactly the loops on X.
bool expected_shape_check(const AuxDigraph& d, const SenderShape& kind);

} // namespace ramsey
