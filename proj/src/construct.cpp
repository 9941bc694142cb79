#include "ramsey/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ramsey {

namespace {

// Incremental disjoint assembly with vertex identification. Slots are added
// in construction order; after the quotient, classes are labeled by their
// smallest slot, so earlier operands keep their labels.
class Assembly {
public:
    int add(int count) {
        int base = static_cast<int>(parent_.size());
        parent_.resize(base + count);
        std::iota(parent_.begin() + base, parent_.end(), base);
        return base;
    }

    int add_graph(const Graph& g) {
        int base = add(g.vertex_count());
        for (auto [u, v] : g.edges()) edges_.emplace_back(base + u, base + v);
        return base;
    }

    void add_edge(int a, int b) { edges_.emplace_back(a, b); }

    void identify(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
    }

    Graph finish() {
        labels_.assign(parent_.size(), -1);
        int next = 0;
        for (std::size_t s = 0; s < parent_.size(); ++s)
            if (find(static_cast<int>(s)) == static_cast<int>(s)) labels_[s] = next++;
        for (std::size_t s = 0; s < parent_.size(); ++s) labels_[s] = labels_[find(static_cast<int>(s))];
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edges_.size());
        for (auto [a, b] : edges_) {
            int la = labels_[a], lb = labels_[b];
            require(la != lb, "identification forces a self-loop");
            edges.emplace_back(la, lb);
        }
        return Graph::from_edges(next, std::move(edges));
    }

    int label(int slot) const { return labels_[slot]; }

    EdgeRef image(int a, int b) const { return {labels_[a], labels_[b]}; }

private:
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    std::vector<int> parent_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> labels_;
};

SurgeryMap make_surgery(const Assembly& A, const Graph& combined, const Graph& left, int left_base,
                        const Graph& right, int right_base) {
    SurgeryMap m;
    for (int v = 0; v < left.vertex_count(); ++v) m.vertex_map_left.push_back(A.label(left_base + v));
    for (int v = 0; v < right.vertex_count(); ++v)
        m.vertex_map_right.push_back(A.label(right_base + v));
    for (auto [u, v] : left.edges())
        m.edge_map_left.push_back(combined.edge_index(m.vertex_map_left[u], m.vertex_map_left[v]));
    for (auto [u, v] : right.edges())
        m.edge_map_right.push_back(
            combined.edge_index(m.vertex_map_right[u], m.vertex_map_right[v]));
    return m;
}

std::string e2s(const EdgeRef& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string prov(const std::string& name,
                 std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::ostringstream out;
    out << name << '(';
    bool first = true;
    for (auto& [k, v] : kv) {
        if (!first) out << ',';
        out << k << '=' << v;
        first = false;
    }
    out << ')';
    return out.str();
}

// The endpoint shared by two adjacent edges, or -1.
int shared_vertex(const EdgeRef& a, const EdgeRef& b) {
    if (a.u == b.u || a.u == b.v) return a.u;
    if (a.v == b.u || a.v == b.v) return a.v;
    return -1;
}

int other_endpoint(const EdgeRef& e, int v) { return e.u == v ? e.v : e.u; }

void require_adjacent_pair(const Graph& g, const EdgeRef& e, const EdgeRef& f, const char* what) {
    require(g.has_edge(e) && g.has_edge(f), std::string(what) + ": tracked edge missing");
    require(!e.same(f), std::string(what) + ": tracked edges must be distinct");
    int w = shared_vertex(e, f);
    require(w >= 0, std::string(what) + ": tracked edges must share a vertex");
}

// Rides a gadget with adjacent signal edges (ge, gf) on two adjacent slots
// edges (sa, sb): the shared signal vertex lands on the shared slot vertex.
void ride_adjacent(Assembly& A, const EdgeRef& sa, const EdgeRef& sb, int base,
                   const EdgeRef& ge, const EdgeRef& gf) {
    int w = shared_vertex(ge, gf);
    int p = shared_vertex(sa, sb);
    A.identify(base + w, p);
    A.identify(base + other_endpoint(ge, w), other_endpoint(sa, p));
    A.identify(base + other_endpoint(gf, w), other_endpoint(sb, p));
}

} // namespace

ComposedGadget attach(const Graph& host, const EdgeRef& target, const Graph& gadget,
                      const EdgeRef& signal) {
    auto [combined, map] = merge_edges(host, target, gadget, signal);
    ComposedGadget out;
    out.graph = std::move(combined);
    out.tracked["e"] = EdgeRef(target.lo(), target.hi());
    out.provenance = prov("attach", {{"host", write_graph6(host)},
                                     {"target", e2s(target)},
                                     {"gadget", write_graph6(gadget)},
                                     {"signal", e2s(signal)}});
    out.surgery = std::move(map);
    return out;
}

ComposedGadget join(const Graph& host, const EdgeRef& a, const EdgeRef& b, const Graph& gadget,
                    const EdgeRef& e, const EdgeRef& f) {
    require(host.has_edge(a) && host.has_edge(b), "join: host edge missing");
    require(gadget.has_edge(e) && gadget.has_edge(f), "join: gadget edge missing");
    require(!a.same(b), "join: host edges must be distinct");
    require(!e.same(f), "join: gadget edges must be distinct");

    Assembly A;
    A.add_graph(host);
    int base = A.add_graph(gadget);
    A.identify(base + e.lo(), a.lo());
    A.identify(base + e.hi(), a.hi());
    A.identify(base + f.lo(), b.lo());
    A.identify(base + f.hi(), b.hi());
    Graph combined = A.finish();

    ComposedGadget out;
    out.tracked["e"] = A.image(a.lo(), a.hi());
    out.tracked["f"] = A.image(b.lo(), b.hi());
    out.surgery = make_surgery(A, combined, host, 0, gadget, base);
    out.graph = std::move(combined);
    out.provenance = prov("join", {{"host", write_graph6(host)},
                                   {"a", e2s(a)},
                                   {"b", e2s(b)},
                                   {"gadget", write_graph6(gadget)},
                                   {"e", e2s(e)},
                                   {"f", e2s(f)}});
    return out;
}

ComposedGadget glue_on_path(const Graph& g1, int a1, int b1, int c1, const Graph& g2, int a2,
                            int b2, int c2) {
    require(g1.has_edge(a1, b1) && g1.has_edge(b1, c1), "glue: path edges missing in first graph");
    require(g2.has_edge(a2, b2) && g2.has_edge(b2, c2), "glue: path edges missing in second graph");
    require(!g1.has_edge(a1, c1), "glue: outer vertices must be non-adjacent in first graph");
    require(!g2.has_edge(a2, c2), "glue: outer vertices must be non-adjacent in second graph");

    Assembly A;
    A.add_graph(g1);
    int base = A.add_graph(g2);
    A.identify(base + a2, a1);
    A.identify(base + b2, b1);
    A.identify(base + c2, c1);
    Graph combined = A.finish();

    ComposedGadget out;
    out.tracked["ab"] = A.image(a1, b1);
    out.tracked["bc"] = A.image(b1, c1);
    out.surgery = make_surgery(A, combined, g1, 0, g2, base);
    out.graph = std::move(combined);
    out.provenance = prov("glue_on_path", {{"g1", write_graph6(g1)},
                                           {"path1", std::to_string(a1) + "-" + std::to_string(b1) +
                                                         "-" + std::to_string(c1)},
                                           {"g2", write_graph6(g2)},
                                           {"path2", std::to_string(a2) + "-" + std::to_string(b2) +
                                                         "-" + std::to_string(c2)}});
    return out;
}

ComposedGadget symmetric_double(const Graph& s, const EdgeRef& e, const EdgeRef& f) {
    require_adjacent_pair(s, e, f, "symmetric_double");
    int b = shared_vertex(e, f);
    int a = other_endpoint(e, b);
    int c = other_endpoint(f, b);
    require(!s.has_edge(a, c),
            "symmetric_double: no edge may join the non-shared signal endpoints");
    ComposedGadget out = glue_on_path(s, a, b, c, s, c, b, a);
    out.provenance = prov("symmetric_double",
                          {{"s", write_graph6(s)}, {"e", e2s(e)}, {"f", e2s(f)}});
    return out;
}

ComposedGadget claw(const Graph& s, const EdgeRef& e, const EdgeRef& f, int h, int d) {
    require(h > d && d >= 0, "claw: need h > d >= 0");
    require_adjacent_pair(s, e, f, "claw");

    Assembly A;
    A.add(h);  // v_1..v_h at slots 0..h-1
    for (int u = 0; u < h; ++u)
        for (int v = u + 1; v < h; ++v) A.add_edge(u, v);
    int x = A.add(1);
    int y = A.add(1);
    A.add_edge(x, y);
    EdgeRef xy(x, y);
    for (int i = 0; i < d; ++i) {
        A.add_edge(x, i);
        int base = A.add_graph(s);
        ride_adjacent(A, xy, EdgeRef(x, i), base, e, f);
    }
    A.add_edge(x, d);
    Graph combined = A.finish();

    ComposedGadget out;
    out.tracked["xy"] = A.image(x, y);
    out.tracked["xz"] = A.image(x, d);
    out.graph = std::move(combined);
    out.provenance = prov("claw", {{"s", write_graph6(s)},
                                   {"e", e2s(e)},
                                   {"f", e2s(f)},
                                   {"h", std::to_string(h)},
                                   {"d", std::to_string(d)}});
    return out;
}

ComposedGadget chain_T(const Graph& s, const EdgeRef& se, const EdgeRef& sf, const Graph& sc,
                       const EdgeRef& ce, const EdgeRef& cf) {
    require_adjacent_pair(s, se, sf, "chain_T");
    require_adjacent_pair(sc, ce, cf, "chain_T");

    Assembly A;
    A.add(4);  // a b c d
    A.add_edge(0, 1);
    A.add_edge(1, 2);
    A.add_edge(2, 3);
    int bs = A.add_graph(s);
    ride_adjacent(A, EdgeRef(0, 1), EdgeRef(1, 2), bs, se, sf);
    int bc = A.add_graph(sc);
    ride_adjacent(A, EdgeRef(1, 2), EdgeRef(2, 3), bc, ce, cf);
    Graph combined = A.finish();

    ComposedGadget out;
    out.tracked["ab"] = A.image(0, 1);
    out.tracked["bc"] = A.image(1, 2);
    out.tracked["cd"] = A.image(2, 3);
    out.graph = std::move(combined);
    out.provenance = prov("chain_T", {{"s", write_graph6(s)},
                                      {"se", e2s(se)},
                                      {"sf", e2s(sf)},
                                      {"sc", write_graph6(sc)},
                                      {"ce", e2s(ce)},
                                      {"cf", e2s(cf)}});
    return out;
}

ComposedGadget chain_Tprime(const Graph& s, const EdgeRef& se, const EdgeRef& sf, const Graph& sc,
                            const EdgeRef& ce, const EdgeRef& cf) {
    require_adjacent_pair(s, se, sf, "chain_Tprime");
    require_adjacent_pair(sc, ce, cf, "chain_Tprime");

    Assembly A;
    A.add(5);  // p a b c d
    for (int i = 0; i < 4; ++i) A.add_edge(i, i + 1);
    int b1 = A.add_graph(sc);
    ride_adjacent(A, EdgeRef(0, 1), EdgeRef(1, 2), b1, ce, cf);
    int bs = A.add_graph(s);
    ride_adjacent(A, EdgeRef(1, 2), EdgeRef(2, 3), bs, se, sf);
    int b2 = A.add_graph(sc);
    ride_adjacent(A, EdgeRef(2, 3), EdgeRef(3, 4), b2, ce, cf);
    Graph combined = A.finish();

    ComposedGadget out;
    out.tracked["pa"] = A.image(0, 1);
    out.tracked["ab"] = A.image(1, 2);
    out.tracked["bc"] = A.image(2, 3);
    out.tracked["cd"] = A.image(3, 4);
    out.graph = std::move(combined);
    out.provenance = prov("chain_Tprime", {{"s", write_graph6(s)},
                                           {"se", e2s(se)},
                                           {"sf", e2s(sf)},
                                           {"sc", write_graph6(sc)},
                                           {"ce", e2s(ce)},
                                           {"cf", e2s(cf)}});
    return out;
}

ComposedGadget star_attach_all(const Graph& f, const Graph& r, const EdgeRef& signal,
                               std::optional<EdgeRef> except) {
    require(r.has_edge(signal), "star_attach_all: signal edge missing");
    if (except) require(f.has_edge(*except), "star_attach_all: exception is not an edge");

    Assembly A;
    A.add_graph(f);
    for (auto [u, v] : f.edges()) {
        if (except && except->lo() == u && except->hi() == v) continue;
        int base = A.add_graph(r);
        A.identify(base + signal.lo(), u);
        A.identify(base + signal.hi(), v);
    }
    Graph combined = A.finish();

    ComposedGadget out;
    if (except) out.tracked["e"] = A.image(except->lo(), except->hi());
    out.graph = std::move(combined);
    out.provenance = prov("star_attach_all",
                          {{"f", write_graph6(f)},
                           {"r", write_graph6(r)},
                           {"signal", e2s(signal)},
                           {"except", except ? e2s(*except) : std::string("none")}});
    return out;
}

ComposedGadget complement_determiner(const Graph& r, const GadgetCertificate& r_cert,
                                     const CliqueTuple& T, const Graph& g_min, const EdgeRef& e) {
    require(r_cert.spec.kind == GadgetKind::Determiner,
            "complement_determiner: certificate must be a determiner certificate");
    require(revalidate(r, T, r_cert), "complement_determiner: certificate does not revalidate");
    require(g_min.has_edge(e), "complement_determiner: marked edge missing");
    CliqueTuple TX = T.restrict_to(r_cert.spec.X);
    require(arrows(g_min, TX).arrows, "complement_determiner: base graph must arrow the restricted tuple");
    require(is_minimal(g_min, TX), "complement_determiner: base graph must be Ramsey-minimal");

    ComposedGadget out = star_attach_all(g_min, r, r_cert.spec.e, e);
    out.provenance = prov("complement_determiner", {{"r", write_graph6(r)},
                                                    {"signal", e2s(r_cert.spec.e)},
                                                    {"g_min", write_graph6(g_min)},
                                                    {"e", e2s(e)}});
    return out;
}

ComposedGadget positive_from_negative(const Graph& s, const GadgetCertificate& s_cert,
                                      const CliqueTuple& T) {
    require(s_cert.spec.kind == GadgetKind::Sender &&
                s_cert.spec.polarity == SenderPolarity::Negative,
            "positive_from_negative: need a negative sender certificate");
    require(static_cast<int>(s_cert.spec.X.size()) == T.q(),
            "positive_from_negative: sender must cover the full palette");
    require(revalidate(s, T, s_cert), "positive_from_negative: certificate does not revalidate");
    int q = T.q();

    Assembly A;
    A.add(2 * (q + 1));
    for (int i = 0; i <= q; ++i) A.add_edge(2 * i, 2 * i + 1);
    for (int i = 0; i < q + 1; ++i)
        for (int j = i + 1; j < q + 1; ++j) {
            if (i == q - 1 && j == q) continue;
            int base = A.add_graph(s);
            A.identify(base + s_cert.spec.e.lo(), 2 * i);
            A.identify(base + s_cert.spec.e.hi(), 2 * i + 1);
            A.identify(base + s_cert.spec.f.lo(), 2 * j);
            A.identify(base + s_cert.spec.f.hi(), 2 * j + 1);
        }
    Graph combined = A.finish();

    ComposedGadget out;
    out.tracked["e"] = A.image(2 * (q - 1), 2 * (q - 1) + 1);
    out.tracked["f"] = A.image(2 * q, 2 * q + 1);
    out.graph = std::move(combined);
    out.provenance =
        prov("positive_from_negative", {{"s", write_graph6(s)},
                                        {"e", e2s(s_cert.spec.e)},
                                        {"f", e2s(s_cert.spec.f)},
                                        {"q", std::to_string(q)}});
    return out;
}

ComposedGadget determiner_from_positive(const Graph& s, const GadgetCertificate& s_cert,
                                        const CliqueTuple& T, int t) {
    require(s_cert.spec.kind == GadgetKind::Sender &&
                s_cert.spec.polarity == SenderPolarity::Positive,
            "determiner_from_positive: need a positive sender certificate");
    require(static_cast<int>(s_cert.spec.X.size()) == T.q(),
            "determiner_from_positive: sender must cover the full palette");
    require(revalidate(s, T, s_cert), "determiner_from_positive: certificate does not revalidate");
    require(t >= 2, "determiner_from_positive: clique order must be at least 2");

    Assembly A;
    A.add(t);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) A.add_edge(u, v);
    int ex = A.add(1), ey = A.add(1);
    A.add_edge(ex, ey);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) {
            int base = A.add_graph(s);
            A.identify(base + s_cert.spec.e.lo(), ex);
            A.identify(base + s_cert.spec.e.hi(), ey);
            A.identify(base + s_cert.spec.f.lo(), u);
            A.identify(base + s_cert.spec.f.hi(), v);
        }
    Graph combined = A.finish();

    ComposedGadget out;
    out.tracked["e"] = A.image(ex, ey);
    out.graph = std::move(combined);
    out.provenance = prov("determiner_from_positive", {{"s", write_graph6(s)},
                                                       {"e", e2s(s_cert.spec.e)},
                                                       {"f", e2s(s_cert.spec.f)},
                                                       {"t", std::to_string(t)}});
    return out;
}

ComposedGadget two_level_star(const Graph& h, const Graph& s, const EdgeRef& e, const EdgeRef& f) {
    require(h.vertex_count() >= 2, "two_level_star: host needs at least two vertices");
    require_adjacent_pair(s, e, f, "two_level_star");
    int m = h.vertex_count();

    Assembly A;
    A.add_graph(h);
    int u = A.add(1), v = A.add(1);
    A.add_edge(v, u);
    for (int x = 0; x < m - 1; ++x) A.add_edge(v, x);
    for (auto [x, y] : h.edges()) {
        int b1 = A.add_graph(s);
        ride_adjacent(A, EdgeRef(u, v), EdgeRef(v, x), b1, e, f);
        int b2 = A.add_graph(s);
        ride_adjacent(A, EdgeRef(v, x), EdgeRef(x, y), b2, e, f);
    }
    Graph combined = A.finish();

    ComposedGadget out;
    out.tracked["uv"] = A.image(u, v);
    out.graph = std::move(combined);
    out.provenance = prov("two_level_star", {{"h", write_graph6(h)},
                                             {"s", write_graph6(s)},
                                             {"e", e2s(e)},
                                             {"f", e2s(f)}});
    return out;
}

ComposedGadget tee_star(const Graph& h, const ComposedGadget& t, TeeMode mode) {
    EdgeRef first = mode == TeeMode::Case1 ? t.at("ab") : t.at("pa");
    EdgeRef last = t.at("cd");
    require(t.graph.has_edge(first) && t.graph.has_edge(last), "tee_star: tracked edges missing");
    require(shared_vertex(first, last) < 0, "tee_star: tracked edges must be disjoint");

    Assembly A;
    A.add_graph(h);
    int u = A.add(1), v = A.add(1);
    A.add_edge(u, v);
    for (auto [x, y] : h.edges()) {
        int base = A.add_graph(t.graph);
        A.identify(base + first.u, u);
        A.identify(base + first.v, v);
        A.identify(base + last.lo(), x);
        A.identify(base + last.hi(), y);
    }
    Graph combined = A.finish();

    ComposedGadget out;
    out.tracked["uv"] = A.image(u, v);
    out.graph = std::move(combined);
    out.provenance = prov("tee_star", {{"h", write_graph6(h)},
                                       {"t", write_graph6(t.graph)},
                                       {"first", e2s(first)},
                                       {"last", e2s(last)},
                                       {"mode", mode == TeeMode::Case1 ? "case1" : "case2"}});
    return out;
}

PatternSet forbidden_patterns(const Graph& f, const CliqueTuple& T, int x,
                              const std::vector<int>& order, int cap) {
    T.require_gadget();
    require(x >= 0 && x < f.vertex_count(), "forbidden_patterns: vertex out of range");
    int deg = f.degree(x);
    require(static_cast<int>(order.size()) == deg,
            "forbidden_patterns: order must list the whole neighborhood");
    std::vector<bool> seen(f.vertex_count(), false);
    for (int w : order) {
        require(f.has_edge(x, w), "forbidden_patterns: order entry is not a neighbor");
        require(!seen[w], "forbidden_patterns: duplicate neighbor");
        seen[w] = true;
    }
    require(deg <= cap, "forbidden_patterns: degree exceeds the enumeration cap");

    PatternSet phi;
    phi.q = T.q();
    phi.len = deg;
    std::vector<int> pat(deg, 1);
    while (true) {
        Coloring partial = Coloring::empty(f);
        for (int i = 0; i < deg; ++i)
            partial.color[f.edge_index(x, order[i])] = static_cast<std::uint8_t>(pat[i]);
        auto out = extend(f, T, partial);
        require(out.kind != ExtendOutcome::Kind::InvalidPartial,
                "forbidden_patterns: a star pattern cannot itself be monochromatic-bad");
        if (!out.extended()) phi.members.insert(pat);
        int pos = deg - 1;
        while (pos >= 0 && pat[pos] == T.q()) --pos;
        if (pos < 0) break;
        ++pat[pos];
        for (int i = pos + 1; i < deg; ++i) pat[i] = 1;
    }
    return phi;
}

ComposedGadget assemble_core(const Graph& f, int x, const std::vector<int>& order,
                             const OrientedHypergraph& hyper) {
    hyper.validate();
    require(x >= 0 && x < f.vertex_count(), "assemble_core: vertex out of range");
    require(hyper.uniformity == f.degree(x),
            "assemble_core: hypergraph uniformity must equal the degree of x");
    require(static_cast<int>(order.size()) == f.degree(x),
            "assemble_core: order must list the whole neighborhood");
    for (int w : order) require(f.has_edge(x, w), "assemble_core: order entry is not a neighbor");
    require(hyper.distinguished.has_value(),
            "assemble_core: hypergraph must carry distinguished vertices");

    Assembly A;
    A.add(hyper.n);
    int hub = A.add(1);
    for (const auto& arc : hyper.arcs) {
        int base = A.add_graph(f);
        A.identify(base + x, hub);
        for (int i = 0; i < hyper.uniformity; ++i) A.identify(base + order[i], arc[i]);
    }
    Graph combined = A.finish();

    auto [du, dv] = *hyper.distinguished;
    EdgeRef e(A.label(hub), A.label(du));
    EdgeRef fe(A.label(hub), A.label(dv));
    require(combined.has_edge(e) && combined.has_edge(fe),
            "assemble_core: distinguished vertices are not covered by any arc");

    ComposedGadget out;
    out.tracked["e"] = e;
    out.tracked["f"] = fe;
    out.graph = std::move(combined);
    out.provenance = prov("assemble_core", {{"f", write_graph6(f)},
                                            {"x", std::to_string(x)},
                                            {"hyper", write_hypergraph(hyper)},
                                            {"order", [&] {
                                                 std::string s;
                                                 for (std::size_t i = 0; i < order.size(); ++i)
                                                     s += (i ? "." : "") + std::to_string(order[i]);
                                                 return s;
                                             }()}});
    return out;
}

} // namespace ramsey
