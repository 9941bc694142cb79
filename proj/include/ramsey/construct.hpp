#pragma once

#include <map>
#include <optional>
#include <string>

#include "ramsey/gadget.hpp"
#include "ramsey/hyper.hpp"

namespace ramsey {

// A composed graph plus its named distinguished edges and a provenance
// record sufficient to replay the construction bit-exactly.
struct ComposedGadget {
    Graph graph;
    std::map<std::string, EdgeRef> tracked;
    std::string provenance;
    std::optional<SurgeryMap> surgery;  // present for the binary surgeries

    EdgeRef at(const std::string& name) const {
        auto it = tracked.find(name);
        require(it != tracked.end(), "no tracked edge named '" + name + "'");
        return it->second;
    }
};

// Fuse the gadget's signal edge onto a host edge (host labels are stable).
ComposedGadget attach(const Graph& host, const EdgeRef& target, const Graph& gadget,
                      const EdgeRef& signal);

// Fuse the gadget's two signal edges onto two host edges. Coincident vertices
// collapse; an identification forcing a self-loop is rejected.
ComposedGadget join(const Graph& host, const EdgeRef& a, const EdgeRef& b, const Graph& gadget,
                    const EdgeRef& e, const EdgeRef& f);

// Identify the paths a1-b1-c1 and a2-b2-c2. Requires a_i b_i and b_i c_i to
// be edges and a_i c_i to be non-edges.
ComposedGadget glue_on_path(const Graph& g1, int a1, int b1, int c1, const Graph& g2, int a2,
                            int b2, int c2);

// Two copies of s glued along the common path of its signal edges with
// opposite orientation. Requires e, f sharing exactly one vertex and no edge
// between their outer endpoints.
ComposedGadget symmetric_double(const Graph& s, const EdgeRef& e, const EdgeRef& f);

// K_h plus a pendant edge xy, with x tied into the first d clique vertices
// through copies of s, plus the bare edge to vertex d+1. Tracked edges "xy"
// and "xz". Requires h > d and signal edges sharing exactly one vertex.
ComposedGadget claw(const Graph& s, const EdgeRef& e, const EdgeRef& f, int h, int d);

// Chains over the path abcd (and pabcd): copies of s and sc riding on
// consecutive path edges. Signal edges of both operands must share a vertex.
ComposedGadget chain_T(const Graph& s, const EdgeRef& se, const EdgeRef& sf, const Graph& sc,
                       const EdgeRef& ce, const EdgeRef& cf);
ComposedGadget chain_Tprime(const Graph& s, const EdgeRef& se, const EdgeRef& sf, const Graph& sc,
                            const EdgeRef& ce, const EdgeRef& cf);

// One copy of r fused onto every edge of f (minus the optional exception).
ComposedGadget star_attach_all(const Graph& f, const Graph& r, const EdgeRef& signal,
                               std::optional<EdgeRef> except = std::nullopt);

// Candidate complement determiner: a certified X-determiner attached to every
// edge of a Ramsey-minimal graph for the restricted tuple, except the signal.
ComposedGadget complement_determiner(const Graph& r, const GadgetCertificate& r_cert,
                                     const CliqueTuple& T, const Graph& g_min, const EdgeRef& e);

// Matching of q+1 edges, all pairs joined by the negative sender except the
// last pair; tracked edges "e" and "f".
ComposedGadget positive_from_negative(const Graph& s, const GadgetCertificate& s_cert,
                                      const CliqueTuple& T);

// K_t plus a disjoint edge joined to every clique edge by the positive
// sender; tracked edge "e".
ComposedGadget determiner_from_positive(const Graph& s, const GadgetCertificate& s_cert,
                                        const CliqueTuple& T, int t);

// Star assembly over a host: vertices u, v, a v-star into all but the last
// host vertex, and two gadget copies per host edge. Tracked edge "uv".
ComposedGadget two_level_star(const Graph& h, const Graph& s, const EdgeRef& e, const EdgeRef& f);

enum class TeeMode { Case1, Case2 };

// Star assembly joining uv and every host edge by a chain gadget: Case1
// consumes tracked edges "ab"/"cd" of a T-chain, Case2 "pa"/"cd" of a
// T'-chain. Endpoint order of the tracked edges is honored.
ComposedGadget tee_star(const Graph& h, const ComposedGadget& t, TeeMode mode);

// Patterns on the star of x that do not extend to a T-free coloring of f.
// order must list the neighborhood of x; enumeration is q^degree, capped.
PatternSet forbidden_patterns(const Graph& f, const CliqueTuple& T, int x,
                              const std::vector<int>& order, int cap = 8);

// One copy of f per arc, neighborhoods identified with arc vertices in
// order, all copies of x fused into a hub. Tracked edges "e" and "f" run
// from the hub to the distinguished vertices.
ComposedGadget assemble_core(const Graph& f, int x, const std::vector<int>& order,
                             const OrientedHypergraph& hyper);

} // namespace ramsey
