#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/digraph.hpp"

namespace ramsey {

enum class GadgetKind { Determiner, Sender };

struct GadgetSpec {
    GadgetKind kind = GadgetKind::Determiner;
    std::vector<int> X;                                  // sorted non-empty color set
    SenderPolarity polarity = SenderPolarity::Negative;  // senders only
    EdgeRef e;
    EdgeRef f;  // senders only
};

enum class Safeness { Safe, Unknown };

struct SafenessReport {
    Safeness level = Safeness::Unknown;
    std::string lemma;  // which structural fact certifies it, if any
};

// Machine-checkable evidence: per required color (or pair) a T-free witness
// assigning it to the signal edge(s); per excluded color (or pair) the
// oracle's no-extension verdict.
struct GadgetCertificate {
    GadgetSpec spec;
    std::map<std::pair<int, int>, Coloring> witnesses;  // determiners use (c, 0)
    std::vector<std::pair<int, int>> exclusions;
    SafenessReport safeness;
};

struct Refusal {
    std::string axiom;  // "R1", "R2", "R3", "S1", "S2", "S3"
    std::string detail;
    std::optional<int> color;
    std::optional<std::pair<int, int>> pair;
    std::optional<Coloring> witness;  // least counterexample where one exists
};

using VerifyResult = std::variant<GadgetCertificate, Refusal>;

inline bool verified(const VerifyResult& r) {
    return std::holds_alternative<GadgetCertificate>(r);
}

// Colors c such that pinning the edge to c still extends to a T-free
// coloring.
std::vector<int> achievable_colors(const Graph& g, const CliqueTuple& T, const EdgeRef& e,
                                   SearchPath path = SearchPath::Auto);

// Certificate iff the achievable color set equals X exactly (non-emptiness
// of X gives axiom R1). The refusal names the violated axiom and the least
// offending color.
VerifyResult verify_determiner(const Graph& g, const CliqueTuple& T, const EdgeRef& e,
                               const std::vector<int>& X, SearchPath path = SearchPath::Auto);

// Certificate iff the auxiliary digraph on (e, f) matches the polarity
// shape over X exactly; the refusal pinpoints the first wrong arc.
VerifyResult verify_sender(const Graph& g, const CliqueTuple& T, const EdgeRef& e,
                           const EdgeRef& f, const std::vector<int>& X, SenderPolarity polarity,
                           SearchPath path = SearchPath::Auto);

// Determiners are safe unconditionally; senders are safe when the signal
// edges are at distance >= 3, otherwise unknown.
SafenessReport structural_safeness(const Graph& g, const CliqueTuple& T,
                                   const GadgetCertificate& cert);

// Re-validates every witness and exclusion of a certificate against the
// graph it claims to describe.
bool revalidate(const Graph& g, const CliqueTuple& T, const GadgetCertificate& cert);

} // namespace ramsey
