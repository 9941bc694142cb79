#include "ramsey/hyper.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ramsey {

void OrientedHypergraph::validate() const {
    require(n >= 0, "hypergraph: negative vertex count");
    require(uniformity >= 2, "hypergraph: uniformity must be at least 2");
    for (const auto& a : arcs) {
        require(static_cast<int>(a.size()) == uniformity, "hypergraph: arc length mismatch");
        std::vector<int> s = a;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            require(s[i] >= 0 && s[i] < n, "hypergraph: arc vertex out of range");
            require(i == 0 || s[i] != s[i - 1], "hypergraph: arc entries must be distinct");
        }
    }
    if (distinguished) {
        auto [u, v] = *distinguished;
        require(u >= 0 && u < n && v >= 0 && v < n && u != v,
                "hypergraph: invalid distinguished pair");
    }
}

bool PatternSet::has_all_monochromatic() const {
    for (int c = 1; c <= q; ++c)
        if (!contains(std::vector<int>(len, c))) return false;
    return true;
}

namespace {

// Any h-subset of arcs, extending `chosen`, whose final union stays within
// the budget? Union only grows, so overshoot prunes.
bool circuit_rec(const std::vector<std::vector<int>>& sets, std::size_t from,
                 std::set<int>& uni, int picked, int h, int budget) {
    if (picked == h) return static_cast<int>(uni.size()) <= budget;
    if (static_cast<int>(uni.size()) > budget) return false;
    for (std::size_t i = from; i + static_cast<std::size_t>(h - picked) <= sets.size(); ++i) {
        std::vector<int> added;
        for (int v : sets[i])
            if (uni.insert(v).second) added.push_back(v);
        if (circuit_rec(sets, i + 1, uni, picked + 1, h, budget)) return true;
        for (int v : added) uni.erase(v);
    }
    return false;
}

} // namespace

GirthResult hypergraph_girth(const OrientedHypergraph& h, int max_circuit) {
    h.validate();
    int m = static_cast<int>(h.arcs.size());
    int cap = max_circuit < 0 ? m : std::min(max_circuit, m);
    std::vector<std::vector<int>> sets = h.arcs;
    for (int len = 2; len <= cap; ++len) {
        std::set<int> uni;
        if (circuit_rec(sets, 0, uni, 0, len, (h.uniformity - 1) * len))
            return {GirthResult::Kind::Exact, len};
    }
    if (cap >= m) return {GirthResult::Kind::Infinite, 0};
    return {GirthResult::Kind::AtLeast, cap + 1};
}

namespace {

bool avoid_rec(const OrientedHypergraph& h, const PatternSet& phi, int q,
               const std::vector<std::vector<int>>& arcs_closing_at,
               std::vector<int>& color, int v) {
    if (v == h.n) return true;
    for (int c = 1; c <= q; ++c) {
        color[v] = c;
        bool ok = true;
        for (int ai : arcs_closing_at[v]) {
            std::vector<int> pat;
            pat.reserve(h.uniformity);
            for (int w : h.arcs[ai]) pat.push_back(color[w]);
            if (phi.contains(pat)) {
                ok = false;
                break;
            }
        }
        if (ok && avoid_rec(h, phi, q, arcs_closing_at, color, v + 1)) return true;
    }
    color[v] = 0;
    return false;
}

} // namespace

std::optional<std::vector<int>> phi_avoiding_coloring(const OrientedHypergraph& h,
                                                      const PatternSet& phi, int q) {
    h.validate();
    require(phi.len == h.uniformity, "pattern length must match hypergraph uniformity");
    require(q >= 1 && phi.q == q, "palette mismatch");
    std::vector<std::vector<int>> closing(std::max(h.n, 1));
    for (std::size_t i = 0; i < h.arcs.size(); ++i) {
        int mx = *std::max_element(h.arcs[i].begin(), h.arcs[i].end());
        closing[mx].push_back(static_cast<int>(i));
    }
    std::vector<int> color(h.n, 0);
    if (avoid_rec(h, phi, q, closing, color, 0)) return color;
    return std::nullopt;
}

namespace {

// Properties of the target hypergraph: some avoiding coloring exists, and
// every avoiding coloring separates vertices 0 and 1.
bool lemma_properties_hold(const OrientedHypergraph& h, const PatternSet& phi, int q) {
    bool any = false;
    std::vector<int> color(h.n, 1);
    while (true) {
        bool avoiding = true;
        for (const auto& arc : h.arcs) {
            std::vector<int> pat;
            for (int w : arc) pat.push_back(color[w]);
            if (phi.contains(pat)) {
                avoiding = false;
                break;
            }
        }
        if (avoiding) {
            any = true;
            if (color[0] == color[1]) return false;
        }
        int pos = h.n - 1;
        while (pos >= 0 && color[pos] == q) --pos;
        if (pos < 0) break;
        ++color[pos];
        for (int i = pos + 1; i < h.n; ++i) color[i] = 1;
    }
    return any;
}

bool search_rec(OrientedHypergraph& h, const std::vector<std::vector<int>>& universe,
                std::size_t from, int remaining, const PatternSet& phi, int q, int g) {
    if (hypergraph_girth(h).exceeds(g)) {
        if (!h.arcs.empty() && lemma_properties_hold(h, phi, q)) return true;
    } else {
        return false;  // adding arcs cannot restore girth
    }
    if (remaining == 0) return false;
    for (std::size_t i = from; i < universe.size(); ++i) {
        h.arcs.push_back(universe[i]);
        if (search_rec(h, universe, i + 1, remaining - 1, phi, q, g)) return true;
        h.arcs.pop_back();
    }
    return false;
}

} // namespace

std::optional<OrientedHypergraph> toy_hypergraph_search(const PatternSet& phi, int q, int len,
                                                        int g, int max_n, int max_arcs) {
    require(phi.q == q && phi.len == len, "pattern set shape mismatch");
    require(phi.has_all_monochromatic(),
            "the pattern set must contain every monochromatic pattern");
    require(len >= 2 && q >= 2, "need at least two colors and binary arcs");
    for (int n = 2; n <= max_n; ++n) {
        // Arc universe in lexicographic order, skipping arcs that would hold
        // both distinguished vertices 0 and 1.
        std::vector<std::vector<int>> universe;
        std::vector<int> tuple;
        std::vector<bool> used(n, false);
        std::function<void()> gen = [&]() {
            if (static_cast<int>(tuple.size()) == len) {
                bool has0 = std::find(tuple.begin(), tuple.end(), 0) != tuple.end();
                bool has1 = std::find(tuple.begin(), tuple.end(), 1) != tuple.end();
                if (!(has0 && has1)) universe.push_back(tuple);
                return;
            }
            for (int v = 0; v < n; ++v) {
                if (used[v]) continue;
                used[v] = true;
                tuple.push_back(v);
                gen();
                tuple.pop_back();
                used[v] = false;
            }
        };
        gen();
        OrientedHypergraph h;
        h.n = n;
        h.uniformity = len;
        h.distinguished = {0, 1};
        if (search_rec(h, universe, 0, max_arcs, phi, q, g)) return h;
    }
    return std::nullopt;
}

OrientedHypergraph parse_hypergraph(const std::string& text) {
    auto to_int = [](const std::string& tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            require(used == tok.size(), "hypergraph: malformed number '" + tok + "'");
            return v;
        } catch (const std::logic_error&) {
            fail("hypergraph: malformed number '" + tok + "'");
        }
    };
    std::istringstream in(text);
    std::string line;
    OrientedHypergraph h;
    bool header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "distinguished") {
            std::string u, v;
            require(static_cast<bool>(ls >> u >> v), "hypergraph: malformed distinguished line");
            h.distinguished = {to_int(u), to_int(v)};
            continue;
        }
        if (!header) {
            std::string l;
            require(static_cast<bool>(ls >> l), "hypergraph: malformed header");
            h.n = to_int(first);
            h.uniformity = to_int(l);
            header = true;
            continue;
        }
        std::vector<int> arc{to_int(first)};
        std::string tok;
        while (ls >> tok) arc.push_back(to_int(tok));
        h.arcs.push_back(std::move(arc));
    }
    require(header, "hypergraph: missing header");
    h.validate();
    return h;
}

std::string write_hypergraph(const OrientedHypergraph& h) {
    std::ostringstream out;
    out << h.n << ' ' << h.uniformity << '\n';
    for (const auto& arc : h.arcs) {
        for (std::size_t i = 0; i < arc.size(); ++i) out << (i ? " " : "") << arc[i];
        out << '\n';
    }
    if (h.distinguished)
        out << "distinguished " << h.distinguished->first << ' ' << h.distinguished->second << '\n';
    return out.str();
}

} // namespace ramsey
