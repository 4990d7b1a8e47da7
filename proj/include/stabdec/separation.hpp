#ifndef STABDEC_SEPARATION_HPP
#define STABDEC_SEPARATION_HPP

#include "stabdec/graph.hpp"

namespace stabdec {

enum class SepKind { NodeCut, CliqueCut, OneLin, Amalgam, GenAmalgam, FanBase };

// A typed separation. v1 / u / v2 always carry the node-cutset view used by
// the decomposition engine; the remaining fields refine it per kind.
struct Separation {
    SepKind kind = SepKind::NodeCut;
    NodeSet v1, u, v2;
    Grouping grouping;

    // OneLin / Amalgam refinement (Lemma on 1-linearizable cutsets):
    // u = a1 u k, a2 inside v2, a1 fully adjacent to k u a2.
    NodeSet a1, k, a2;
    // Amalgam view keeps its own sides (v2 above is v2_amalgam u a2).
    NodeSet amalgam_v1, amalgam_v2;

    // FanBase
    int base_u = -1, base_c = -1, base_v = -1;

    // GenAmalgam
    std::vector<NodeSet> wpart;
};

// Re-validates the TYPE invariants for the given kind; throws on violation.
void validate_separation(const Graph& g, const Separation& sep);

bool is_node_cutset_separation(const Graph& g, const NodeSet& v1, const NodeSet& u,
                               const NodeSet& v2, const Grouping& grouping);

// Clique cutset with V2 one connected component of G-U. Deterministic:
// smallest |V2| first, then lexicographic (V2, then U). With a root, only
// separations with Z inside V1 u U are returned.
std::optional<Separation> find_clique_cutset(const Graph& g, const NodeSet& root = {});

// Complete backtracking search over (V1,A1,K,A2,V2) labelings, capped.
std::optional<Separation> find_amalgam(const Graph& g, const Caps& caps = {});

// Exhaustive oracle for tests: tries all 5-part labelings naively.
bool amalgam_exists_naive(const Graph& g);

// Driver over clique cutsets and amalgams following the root-aware branch of
// the amalgam recursion; returns a OneLin separation or nothing.
std::optional<Separation> find_one_linearizable(const Graph& g, const NodeSet& z,
                                                const Caps& caps = {});

// Adjacent twins as a 0-linearizable separation (empty V1, one 2-node block).
std::optional<Separation> twin_separation(const Graph& g, const NodeSet& root = {});

// Fit conditions of a node cutset separation against a template's regions.
bool fits(const Separation& sep, const RootedTemplate& t);

// Triples (u,c,v) whose removal leaves a component W such that
// G_{W u {u,c,v}} is a fan with base (u,c,v); V1 must stay nonempty.
std::optional<Separation> find_fan_base(const Graph& g, const NodeSet& root = {});
std::vector<Separation> all_fan_bases(const Graph& g, const NodeSet& root = {});

}  // namespace stabdec

#endif
