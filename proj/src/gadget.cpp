#include "ramsey/gadget.hpp"

#include <algorithm>

namespace ramsey {

namespace {

void check_color_set(const std::vector<int>& X, int q) {
    require(!X.empty(), "color set must be non-empty");
    for (std::size_t i = 0; i < X.size(); ++i) {
        require(X[i] >= 1 && X[i] <= q, "color outside palette");
        require(i == 0 || X[i] > X[i - 1], "color set must be sorted and duplicate-free");
    }
}

ExtendOutcome pin_and_extend(const Graph& g, const CliqueTuple& T,
                             std::initializer_list<std::pair<int, int>> pins, SearchPath path) {
    Coloring partial = Coloring::empty(g);
    for (auto [idx, c] : pins) partial.color[idx] = static_cast<std::uint8_t>(c);
    return extend(g, T, partial, path);
}

} // namespace

std::vector<int> achievable_colors(const Graph& g, const CliqueTuple& T, const EdgeRef& e,
                                   SearchPath path) {
    require(g.has_edge(e), "achievable_colors: edge missing");
    T.require_gadget();
    int idx = g.edge_index(e);
    std::vector<int> out;
    for (int c = 1; c <= T.q(); ++c)
        if (pin_and_extend(g, T, {{idx, c}}, path).extended()) out.push_back(c);
    return out;
}

VerifyResult verify_determiner(const Graph& g, const CliqueTuple& T, const EdgeRef& e,
                               const std::vector<int>& X, SearchPath path) {
    require(g.has_edge(e), "verify_determiner: signal edge missing");
    T.require_gadget();
    check_color_set(X, T.q());
    int idx = g.edge_index(e);

    std::vector<bool> in_x(T.q() + 1, false);
    for (int c : X) in_x[c] = true;

    // Settle the whole achievable set first, so an unsatisfiable host is
    // reported as R1 rather than as a missing color.
    std::vector<std::optional<Coloring>> witness(T.q() + 1);
    bool any = false;
    for (int c = 1; c <= T.q(); ++c) {
        auto out = pin_and_extend(g, T, {{idx, c}}, path);
        if (out.extended()) {
            witness[c] = std::move(out.coloring);
            any = true;
        }
    }
    if (!any)
        return Refusal{"R1", "no T-free coloring exists at all; the graph is Ramsey for the tuple",
                       std::nullopt, std::nullopt, std::nullopt};
    for (int c = 1; c <= T.q(); ++c) {
        if (witness[c].has_value() && !in_x[c])
            return Refusal{"R2", "color " + std::to_string(c) + " achievable on the signal edge",
                           c, std::nullopt, witness[c]};
        if (!witness[c].has_value() && in_x[c])
            return Refusal{"R3", "color " + std::to_string(c) + " not achievable on the signal edge",
                           c, std::nullopt, std::nullopt};
    }

    GadgetCertificate cert;
    cert.spec = {GadgetKind::Determiner, X, SenderPolarity::Negative, e, {}};
    for (int c = 1; c <= T.q(); ++c) {
        if (witness[c].has_value())
            cert.witnesses[{c, 0}] = *witness[c];
        else
            cert.exclusions.emplace_back(c, 0);
    }
    cert.safeness = structural_safeness(g, T, cert);
    return cert;
}

VerifyResult verify_sender(const Graph& g, const CliqueTuple& T, const EdgeRef& e,
                           const EdgeRef& f, const std::vector<int>& X, SenderPolarity polarity,
                           SearchPath path) {
    require(g.has_edge(e) && g.has_edge(f), "verify_sender: signal edge missing");
    require(!e.same(f), "verify_sender: signal edges must be distinct");
    T.require_gadget();
    check_color_set(X, T.q());
    if (polarity == SenderPolarity::Negative)
        require(X.size() >= 2, "negative sender needs at least two colors");

    std::vector<bool> in_x(T.q() + 1, false);
    for (int c : X) in_x[c] = true;
    int ie = g.edge_index(e), jf = g.edge_index(f);

    std::vector<std::vector<std::optional<Coloring>>> wit(
        T.q() + 1, std::vector<std::optional<Coloring>>(T.q() + 1));
    bool any = false;
    for (int i = 1; i <= T.q(); ++i)
        for (int j = 1; j <= T.q(); ++j) {
            auto out = pin_and_extend(g, T, {{ie, i}, {jf, j}}, path);
            if (out.extended()) {
                wit[i][j] = std::move(out.coloring);
                any = true;
            }
        }
    if (!any)
        return Refusal{"S1", "no T-free coloring exists at all; the graph is Ramsey for the tuple",
                       std::nullopt, std::nullopt, std::nullopt};
    for (int i = 1; i <= T.q(); ++i)
        for (int j = 1; j <= T.q(); ++j) {
            bool want = polarity == SenderPolarity::Negative ? (in_x[i] && in_x[j] && i != j)
                                                             : (in_x[i] && i == j);
            if (wit[i][j].has_value() && !want)
                return Refusal{"S2",
                               std::string(i == j ? "loop" : "pair") + " (" + std::to_string(i) +
                                   "," + std::to_string(j) + ") realizable on the signal edges",
                               std::nullopt, std::make_pair(i, j), wit[i][j]};
            if (!wit[i][j].has_value() && want)
                return Refusal{"S3",
                               "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") not realizable on the signal edges",
                               std::nullopt, std::make_pair(i, j), std::nullopt};
        }

    GadgetCertificate cert;
    cert.spec = {GadgetKind::Sender, X, polarity, e, f};
    for (int i = 1; i <= T.q(); ++i)
        for (int j = 1; j <= T.q(); ++j) {
            if (wit[i][j].has_value())
                cert.witnesses[{i, j}] = *wit[i][j];
            else
                cert.exclusions.emplace_back(i, j);
        }
    cert.safeness = structural_safeness(g, T, cert);
    return cert;
}

SafenessReport structural_safeness(const Graph& g, const CliqueTuple& T,
                                   const GadgetCertificate& cert) {
    T.require_gadget();
    if (cert.spec.kind == GadgetKind::Determiner)
        return {Safeness::Safe, "every set-determiner for a clique tuple is safe"};
    int d = edge_distance(g, cert.spec.e, cert.spec.f);
    if (d < 0 || d >= 3)
        return {Safeness::Safe, "sender signal edges at distance >= 3"};
    return {Safeness::Unknown, ""};
}

bool revalidate(const Graph& g, const CliqueTuple& T, const GadgetCertificate& cert) {
    int ie = g.edge_index(cert.spec.e);
    int jf = cert.spec.kind == GadgetKind::Sender ? g.edge_index(cert.spec.f) : -1;
    if (ie < 0 || (cert.spec.kind == GadgetKind::Sender && jf < 0)) return false;
    for (auto& [key, wit] : cert.witnesses) {
        if (!is_free(g, T, wit)) return false;
        if (wit.color[ie] != key.first) return false;
        if (cert.spec.kind == GadgetKind::Sender && wit.color[jf] != key.second) return false;
    }
    for (auto [i, j] : cert.exclusions) {
        Coloring partial = Coloring::empty(g);
        partial.color[ie] = static_cast<std::uint8_t>(i);
        if (cert.spec.kind == GadgetKind::Sender)
            partial.color[jf] = static_cast<std::uint8_t>(j);
        if (extend(g, T, partial).extended()) return false;
    }
    return true;
}

} // namespace ramsey
