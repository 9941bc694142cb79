#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// The tuple (t1 >= ... >= tq) of clique orders with color palette 1..q.
// Orders >= 2 are admitted (the packing parameter allows t_i = 2); callers
// on the gadget side require all orders >= 3.
class CliqueTuple {
public:
    explicit CliqueTuple(std::vector<int> orders);

    int q() const { return static_cast<int>(orders_.size()); }
    int order(int color) const { return orders_[color - 1]; }  // colors are 1-based
    const std::vector<int>& orders() const { return orders_; }

    bool gadget_ok() const { return orders_.back() >= 3; }
    void require_gadget() const;

    // Sub-tuple (t_i) for i in X, as its own tuple.
    CliqueTuple restrict_to(const std::vector<int>& X) const;

    bool operator==(const CliqueTuple& o) const { return orders_ == o.orders_; }

private:
    std::vector<int> orders_;
};

// Edge coloring aligned with the canonical edge order of its graph.
// color[i] in 1..q, or 0 for unset.
struct Coloring {
    std::vector<std::uint8_t> color;

    static Coloring empty(const Graph& g) { return Coloring{std::vector<std::uint8_t>(g.edge_count(), 0)}; }
    bool total() const {
        for (auto c : color)
            if (c == 0) return false;
        return true;
    }
    bool operator==(const Coloring& o) const { return color == o.color; }
};

struct ArrowVerdict {
    bool arrows = false;
    // Lexicographically least T-free coloring, present iff arrows is false.
    std::optional<Coloring> witness;
};

enum class SearchPath {
    Auto,     // 2-color bitset path when applicable, generic otherwise
    Generic,  // counter-based DFS over edges in canonical order
    Fast2,    // 2-color bitset path (requires q = 2, n <= 64)
};

// True iff no color i has a monochromatic K_{t_i}. The coloring must be
// total.
bool is_free(const Graph& g, const CliqueTuple& T, const Coloring& c);

struct ExtendOutcome {
    enum class Kind { Extended, NoExtension, InvalidPartial } kind;
    std::optional<Coloring> coloring;  // present iff kind == Extended

    bool extended() const { return kind == Kind::Extended; }
};

// Least T-free total extension of the partial coloring under canonical edge
// and color order, or NoExtension. A partial whose colored subgraph already
// contains a forbidden clique reports InvalidPartial instead.
ExtendOutcome extend(const Graph& g, const CliqueTuple& T, const Coloring& partial,
                     SearchPath path = SearchPath::Auto);

ArrowVerdict arrows(const Graph& g, const CliqueTuple& T, SearchPath path = SearchPath::Auto);

// sigma maps colors 1..q to colors 1..q and may only permute within classes
// of equal clique order.
bool color_class_permutation_check(const Graph& g, const CliqueTuple& T, const Coloring& c,
                                   const std::vector<int>& sigma);

Coloring apply_color_permutation(const Coloring& c, const std::vector<int>& sigma);

// Ramsey-minimal: arrows T, every single-edge deletion does not, and no
// vertex is isolated.
bool is_minimal(const Graph& g, const CliqueTuple& T);

// Greedy edge deletion in canonical order, then isolated-vertex removal.
// Requires arrows(g, T).
Graph minimal_subgraph(const Graph& g, const CliqueTuple& T);

// Smallest n with arrows(K_n, T), or nullopt if above the cap.
std::optional<int> ramsey_number(const CliqueTuple& T, int n_cap);

Graph delete_edge(const Graph& g, const EdgeRef& e);

} // namespace ramsey
