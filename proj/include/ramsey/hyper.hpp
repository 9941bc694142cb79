#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/common.hpp"

namespace ramsey {

// Oriented uniform hypergraph: arcs are ordered tuples of distinct vertices.
struct OrientedHypergraph {
    int n = 0;
    int uniformity = 0;
    std::vector<std::vector<int>> arcs;
    std::optional<std::pair<int, int>> distinguished;

    void validate() const;
};

// Forbidden color patterns on arcs: tuples over the palette 1..q.
struct PatternSet {
    int q = 0;
    int len = 0;
    std::set<std::vector<int>> members;

    bool contains(const std::vector<int>& p) const { return members.count(p) > 0; }
    bool has_all_monochromatic() const;
};

struct GirthResult {
    enum class Kind { Exact, Infinite, AtLeast } kind = Kind::Infinite;
    int value = 0;  // the girth for Exact, the first unchecked length for AtLeast

    bool exceeds(int g) const {
        return kind == Kind::Infinite || (kind == Kind::Exact ? value > g : value > g);
    }
};

// Shortest h >= 2 such that some h hyperedges cover at most (l-1)h vertices.
// Exact up to max_circuit (default: all subset sizes); longer circuits are
// reported as a lower bound, never a wrong number.
GirthResult hypergraph_girth(const OrientedHypergraph& h, int max_circuit = -1);

// Least vertex q-coloring (colors 1..q, vertex order, colors ascending)
// realizing no forbidden pattern on any arc.
std::optional<std::vector<int>> phi_avoiding_coloring(const OrientedHypergraph& h,
                                                      const PatternSet& phi, int q);

// Exhaustive search within the caps for a hypergraph with girth > g, no arc
// holding both distinguished vertices, at least one phi-avoiding coloring,
// and distinct colors on the distinguished pair under every such coloring.
// The distinguished pair is fixed to (0, 1).
std::optional<OrientedHypergraph> toy_hypergraph_search(const PatternSet& phi, int q, int len,
                                                        int g, int max_n, int max_arcs);

// File format: header "n l", one arc per line, optional trailing
// "distinguished u u'" line.
OrientedHypergraph parse_hypergraph(const std::string& text);
std::string write_hypergraph(const OrientedHypergraph& h);

} // namespace ramsey
