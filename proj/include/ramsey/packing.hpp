#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/gadget.hpp"
#include "ramsey/hyper.hpp"

namespace ramsey {

// Edge-disjoint graphs G_1..G_q on the same vertex set [n].
struct ColorPattern {
    int n = 0;
    std::vector<Graph> graphs;

    void validate() const;
};

struct PatternCheck {
    bool valid = false;
    // (P1) failure: a K_{t_i+1} in G_i.
    std::optional<std::pair<int, std::vector<int>>> clique_violation;
    // (P2) failure: a vertex coloring with no color seeing its clique.
    std::optional<std::vector<int>> uncovered_coloring;
};

// (P1) each G_i is K_{t_i+1}-free; (P2) every vertex q-coloring puts some
// K_{t_i} of G_i inside color class i.
PatternCheck pattern_valid(const ColorPattern& p, const std::vector<int>& t);

struct Refutation {
    int n = 0;
    std::uint64_t nodes = 0;  // DFS nodes of the exhausted search
};

struct PackingOutcome {
    std::optional<int> value;
    std::optional<ColorPattern> witness;
    std::vector<Refutation> refuted;  // one entry per exhaustively refuted n
    int n_max = 0;

    // When value is absent the search proves P > n_max.
    int lower_bound() const { return value ? *value : n_max + 1; }
};

// Least n <= n_max carrying a valid pattern, by exhaustive search with
// lexicographic-leader symmetry pruning. Every smaller n is refuted
// exhaustively and recorded.
PackingOutcome packing_parameter(const std::vector<int>& t, int n_max);

struct PackingBounds {
    long long lower = 0;
    long long upper_log2 = 0;  // ceil((8 q t1 lg t1)^3)
    long long upper_ln = 0;    // ceil((8 q t1 ln t1)^3)
};

PackingBounds packing_bounds(int q, const std::vector<int>& t);

// Edge-disjoint s-uniform k-regular hypergraphs on one vertex set.
struct HypergraphFamily {
    std::vector<OrientedHypergraph> members;
    int s = 0;
    int k = 0;

    void validate() const;
};

// Seeded random equipartition of every hyperedge of H_i into t_i parts with
// the complete multipartite graph on it. Each G_i is checked K_{t_i+1}-free;
// a violation signals a girth-precondition breach in the family.
ColorPattern turan_blowup(const HypergraphFamily& fam, const std::vector<int>& t,
                          std::uint64_t seed);

// Largest d such that the claw over K_{r(T)-1} still admits a T-free
// coloring with the pendant edge colored `color`; -1 if even d = 0 fails.
int claw_threshold(const CliqueTuple& T, const Graph& s, const EdgeRef& e, const EdgeRef& f,
                   int color, int r_cap = 10);

struct GadgetShape {
    GadgetKind kind = GadgetKind::Determiner;
    std::vector<int> X;
    SenderPolarity polarity = SenderPolarity::Negative;
};

struct SearchHit {
    Graph graph;
    GadgetCertificate cert;
};

// Runs gadget verification over each source graph and each signal edge (or
// unordered edge pair), reduced modulo marked-graph isomorphism. The budget
// caps verification calls; exceeding it yields a clean partial result.
std::vector<SearchHit> gadget_search(const CliqueTuple& T, const GadgetShape& shape,
                                     const std::vector<Graph>& source, std::uint64_t budget,
                                     bool* budget_exhausted = nullptr);

// All graphs on 1..max_n vertices up to isomorphism, as canonical forms.
std::vector<Graph> all_graphs_up_to(int max_n);

// All Ramsey-minimal graphs for T on at most n_max vertices, up to
// isomorphism, using the size-Ramsey edge bound C(r,2) to prune candidates.
std::vector<Graph> minimal_ramsey_enumeration(const CliqueTuple& T, int n_max);

} // namespace ramsey
