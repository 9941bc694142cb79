#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/bits.hpp"
#include "ramsey/common.hpp"

namespace ramsey {

// An edge named by its endpoints. The pair is unordered except where an
// operation declares an orientation contract.
struct EdgeRef {
    int u = -1;
    int v = -1;

    EdgeRef() = default;
    EdgeRef(int a, int b) : u(a), v(b) {}

    int lo() const { return u < v ? u : v; }
    int hi() const { return u < v ? v : u; }

    bool same(const EdgeRef& o) const { return lo() == o.lo() && hi() == o.hi(); }
    bool operator==(const EdgeRef& o) const { return u == o.u && v == o.v; }
};

// Simple undirected graph with stable labels 0..n-1 and the canonical edge
// order (sorted pairs, lexicographic). Immutable after construction; all
// surgery returns new graphs.
class Graph {
public:
    static constexpr int kMaxVertices = 1024;

    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    bool has_edge(const EdgeRef& e) const { return has_edge(e.u, e.v); }

    // Index into canonical edge order, or -1.
    int edge_index(int u, int v) const;
    int edge_index(const EdgeRef& e) const { return edge_index(e.u, e.v); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge_at(int idx) const { return edges_[idx]; }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// ---- builders -------------------------------------------------------------

Graph complete_graph(int n);
Graph path_graph(int k);   // path with k edges on k+1 vertices
Graph matching(int k);     // k disjoint edges on 2k vertices
Graph cycle_graph(int n);
Graph disjoint_union(const Graph& g, const Graph& h);

// ---- graph6 ---------------------------------------------------------------

Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// Whitespace-separated "u v" pairs; n = max label + 1.
Graph parse_edge_list(const std::string& text);

// ---- cliques --------------------------------------------------------------

// Calls fn once per t-subset inducing a complete subgraph, in lexicographic
// order of the sorted vertex set. Return false from fn to stop early.
void for_each_clique(const Graph& g, int t, const std::function<bool(const std::vector<int>&)>& fn);

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int t);

bool has_clique(const Graph& g, int t);
int clique_number(const Graph& g);

// ---- distances ------------------------------------------------------------

// Length of a shortest path with one endpoint in e and one in f; 0 when the
// edges share a vertex, -1 (infinity) when no path exists.
int edge_distance(const Graph& g, const EdgeRef& e, const EdgeRef& f);

// ---- surgery --------------------------------------------------------------

// Label images of both operands in a combined graph. Maps are total on their
// sources; identified vertices share images.
struct SurgeryMap {
    std::vector<int> vertex_map_left;
    std::vector<int> vertex_map_right;
    std::vector<int> edge_map_left;   // source edge index -> combined edge index
    std::vector<int> edge_map_right;

    Bitset left_image(int combined_n) const;
    Bitset right_image(int combined_n) const;
};

// Endpoint correspondence for merging two edges, relative to sorted
// endpoints: by default lo<->lo and hi<->hi; flipped pairs lo<->hi.
struct MergeOrientation {
    bool flipped = false;
};

// Disjoint union of g and h with ge and he identified per the orientation.
// |V| = |V(g)|+|V(h)|-2 and |E| = |E(g)|+|E(h)|-1, always.
std::pair<Graph, SurgeryMap> merge_edges(const Graph& g, const EdgeRef& ge,
                                         const Graph& h, const EdgeRef& he,
                                         MergeOrientation orientation = {});

// Checks the structural core of the safeness lemmas on a merge/join product:
// every clique on 3..max_size vertices lies entirely inside one operand
// image.
bool cliques_confined(const Graph& combined, const SurgeryMap& map, int max_size);

// ---- canonical forms ------------------------------------------------------

// Relabeling of g minimizing the adjacency bit-string read in canonical edge
// order. Exact; default cap 16 vertices.
Graph canonical_form(const Graph& g, int cap = 16);

bool iso_equal(const Graph& g, const Graph& h, int cap = 16);

} // namespace ramsey
