#ifndef STABDEC_GRAPH_HPP
#define STABDEC_GRAPH_HPP

#include "stabdec/nodeset.hpp"
#include "stabdec/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabdec {

struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caps are configuration, not constants: record sizes are bounded in the
// intended graph class but unbounded in general.
struct Caps {
    int enum_nodes = 24;           // enumerate_stable_sets node cap
    std::size_t record_sets = 4096;  // add_record / clique_lift stable-set cap
    int leaf = 8;                  // polytope leaf formulation node cap
    int fm_vars = 14;              // Fourier-Motzkin blow-up guard
    int amalgam_n = 16;            // amalgam search node cap
    int hole_n = 16;               // chordless-cycle search node cap
    int solver_brute = 5;          // solver leaf: brute below this many nodes
    std::size_t solver_count = 1u << 20;  // solver leaf: stable-set count cap
};

enum class LabelKind { Original, Transversal, Record, Lin };

// Node labels track provenance so projection maps in the polytope module are
// recoverable without side tables. (kind, text) is unique within a graph.
struct Label {
    LabelKind kind = LabelKind::Original;
    std::string text;

    bool operator==(const Label&) const = default;
    std::string display() const;
};

struct Graph {
    int n = 0;
    std::vector<NodeSet> adj;
    std::vector<Label> labels;

    static Graph empty(int n);
    // Edges as pairs; labels default to Original("v<i+1>").
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete(int n);
    static Graph cube();

    int add_node(Label label);
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }
    NodeSet nodes() const { return NodeSet::full(n); }
    const NodeSet& neighbors(int v) const { return adj[v]; }
    std::size_t edge_count() const;

    void check_invariants() const;  // symmetric, loop-free, labels unique
    std::string name_of(int v) const { return labels[v].display(); }
};

// N_G(X): nodes outside X adjacent to X.
NodeSet neighbor_set(const Graph& g, const NodeSet& x);
bool fully_adjacent(const Graph& g, const NodeSet& x, const NodeSet& y);
bool sets_adjacent(const Graph& g, const NodeSet& x, const NodeSet& y);
bool is_clique(const Graph& g, const NodeSet& x);
bool is_stable(const Graph& g, const NodeSet& s);

// Node set relabeled densely (in increasing id order); labels preserved.
// old_of_new[i] gives the source id of new node i when requested.
Graph induced_subgraph(const Graph& g, const NodeSet& s,
                       std::vector<int>* old_of_new = nullptr);

std::vector<NodeSet> connected_components(const Graph& g);
std::vector<NodeSet> connected_components_within(const Graph& g, const NodeSet& universe);
bool is_connected(const Graph& g);

// Groups and groupings (\S1 notions).
bool is_group(const Graph& g, const NodeSet& x);
// The unique inclusion-maximal group within u containing v, by the peeling
// loop: drop nodes whose neighborhood outside the current set differs from v's.
NodeSet maximal_group(const Graph& g, const NodeSet& u, int v);

struct Grouping {
    std::vector<NodeSet> blocks;

    NodeSet support() const;
    int block_of(int v) const;  // -1 if not covered
    static Grouping singletons(const NodeSet& u);
};

// Blocks must be groups of `context`, pairwise disjoint, and every adjacent
// pair of blocks fully adjacent.
bool grouping_valid(const Graph& context, const Grouping& grouping);
Grouping coarsest_grouping(const Graph& g, const NodeSet& u);

// Lowest node id per block; the paper leaves the choice free, determinism
// makes tests reproducible.
NodeSet transversal_of(const Grouping& grouping);

// Pattern graph: one node per block (in block order), edges between adjacent
// blocks.
Graph pattern_of(const Graph& g, const Grouping& grouping);

// hom_U(S) as a set of pattern node ids (= block indices).
NodeSet hom(const Grouping& grouping, const NodeSet& s);

struct QuotientResult {
    Graph graph;                 // servant graph on V2 and the transversal
    std::vector<int> old_of_new;  // source ids (transversal nodes map to reps)
    std::vector<int> node_of_block;  // block index -> new node id
};
QuotientResult quotient_by_transversal(const Graph& g, const NodeSet& v2,
                                       const Grouping& grouping);

// All stable sets in mask-ascending order.
std::vector<NodeSet> enumerate_stable_sets(const Graph& g, const Caps& caps = {});
// Enumeration capped by count instead of node count; usable on near-cliques
// and record graphs of any size.
std::optional<std::vector<NodeSet>> enumerate_stable_sets_counted(const Graph& g,
                                                                  std::size_t max_count);

struct RecordResult {
    Graph graph;
    std::vector<NodeSet> record_sets;   // stable set of g_a per record node
    std::vector<int> record_nodes;      // new node ids, aligned with record_sets
};
// Record graph G(A): a clique of new nodes r_T, one per stable set T of G_A,
// with r_T fully adjacent to A\T and nonadjacent to T and to V\A.
RecordResult add_record(const Graph& g, const NodeSet& a, const Caps& caps = {});

struct CliqueLiftResult {
    Graph graph;
    std::vector<NodeSet> lift_sets;  // stable set of g_u per lift node
    std::vector<int> lift_nodes;     // ids in the lifted graph
    std::vector<int> old_of_new;     // kept original nodes: source ids (-1 for lift nodes)
};
// Delete U, add a clique with one node per stable set S of G_U, adjacent to
// N_G(S)\U.
CliqueLiftResult clique_lift(const Graph& g, const NodeSet& u, const Caps& caps = {});

// Backtracking isomorphism test for graphs up to 16 nodes.
bool isomorphic(const Graph& a, const Graph& b);

// Canonical adjacency key (lexicographically minimal adjacency matrix over
// relabelings); used for isomorphism-free filtering of small graphs.
std::vector<std::uint64_t> canonical_form(const Graph& g);

// Rational weight per node. Derived nodes get their weights by construction.
using WeightVector = std::vector<Rat>;
Rat weight_of(const WeightVector& w, const NodeSet& s);
WeightVector unit_weights(int n);

// Map from stable sets of a small root/pattern graph to values, with optional
// witnesses in the enclosing graph.
struct ServiceTable {
    struct Entry {
        Rat value;
        NodeSet witness;
    };
    std::map<NodeSet, Entry> entries;

    bool contains(const NodeSet& key) const { return entries.count(key) > 0; }
    const Entry& at(const NodeSet& key) const;
    Rat value(const NodeSet& key) const { return at(key).value; }
    void put(const NodeSet& key, Rat value, NodeSet witness = {});
    // Nonnegative and inclusion-wise non-increasing on its keys.
    bool monotone_nonincreasing() const;
    bool same_domain(const std::vector<NodeSet>& keys) const;
};

struct Region {
    Grouping grouping;        // blocks as node sets of the enclosing graph
    Graph pattern;            // pattern node i = block i
    ServiceTable sigma;       // on stable sets of the pattern (may be pending)
    bool resolved = false;

    NodeSet support() const { return grouping.support(); }
};

struct RootedTemplate {
    Graph graph;
    NodeSet root;
    std::vector<Region> regions;

    int area() const { return graph.n - root.count(); }
    bool trivial() const { return area() == 0; }
    void check(const Caps& caps = {}) const;
};

}  // namespace stabdec

#endif
