#ifndef STABDEC_DECOMP_HPP
#define STABDEC_DECOMP_HPP

#include "stabdec/separation.hpp"

namespace stabdec {

struct BoundViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ListMode { Template, Linearized01 };

// A region held by an engine node. Blocks, reps and sigma keys live in the
// id space of the pipeline's input graph ("orig ids"), so they survive
// induced-subgraph relabelings.
struct EngineRegion {
    Grouping grouping;               // blocks in orig ids
    std::vector<int> block_rep;      // transversal rep per block (orig id)
    Graph pattern;                   // pattern node i = block i
    ServiceTable sigma;              // keyed by rep subsets (orig ids)
    bool resolved = false;
    int link = -1;                   // servant index when pending
};

// Pending gamma weights of a linearized master, bound to the servant's
// future table by the one-node linearization formula.
struct LinPatch {
    int servant_index = -1;
    Grouping grouping;               // cutset blocks in orig ids
    std::vector<int> block_rep;
    int a_block = -1;                // block playing A (-1 when empty)
    int r_orig = -1;                 // added node r (-1 for 0-linearized)
};

// One in-place master replacement at a given index; drives witness
// reconstruction and value offsets.
struct DecompRecord {
    SepKind kind;
    Grouping grouping;               // orig ids
    std::vector<int> block_rep;
    NodeSet v2;                      // orig ids
    int servant_index = -1;
    int r_orig = -1;
    bool linearized = false;
    Rat sigma = 0;                   // resolved linearization offset
    bool sigma_resolved = false;
};

struct DecompNode {
    Graph graph;
    std::vector<int> orig_ids;       // local node -> orig id
    NodeSet root;                    // orig ids
    WeightVector weights;            // per local node (gamma already applied
                                     // once the patch is resolved)
    std::vector<EngineRegion> regions;
    std::optional<LinPatch> patch;
    std::vector<DecompRecord> applied;

    enum class Origin { Root, Servant } origin = Origin::Root;
    int parent = -1;

    std::optional<ServiceTable> table;  // effective table, orig ids
    bool solved = false;

    NodeSet orig_nodes() const;
    NodeSet local_of_orig(const NodeSet& s) const;
    NodeSet orig_of_local(const NodeSet& s) const;
    int area() const { return graph.n - root.count(); }
    int load() const { return area() - 1; }
};

struct TraceStep {
    int step;
    std::string kind;
    int idx;
    Separation sep_orig;             // in orig ids
    int master_area;
    int servant_area;
    std::string note;
};

struct PotentialState {
    long load_total = 0;
    long pos = 0;
    long rootcount = 0;
    bool special = false;  // of the step that produced this state
};

struct BoundsReport {
    int n = 0;
    ListMode mode;
    long nontrivial = 0;
    long trivial_count = 0;
    long length = 0;
    bool ok = false;
    std::vector<PotentialState> potentials;  // Linearized01: one per step
};

struct DecompList {
    ListMode mode = ListMode::Linearized01;
    int orig_n = 0;  // nodes of the initial rooted graph
    std::vector<DecompNode> nodes;
    std::vector<TraceStep> trace;
    std::vector<PotentialState> potentials;

    static DecompList start(ListMode mode, Graph g, NodeSet root, WeightVector w,
                            std::vector<int> orig_ids);
    int rightmost_unsolved() const;  // -1 when all solved
};

// Replace node idx by the master template (same position) and append the
// servant; the new master region sigma-links to the servant. Requires the
// separation (local ids of nodes[idx].graph) to fit every region and the
// root to lie in V1 u U.
void decompose_template(DecompList& list, int idx, const Separation& sep);

// 0/1-linearized variant: root must be a clique and the graph not a
// near-clique (proper decomposition); the master picks r = min(A2) when A2
// is nonempty and stores a gamma patch bound to the servant.
void decompose_linearized(DecompList& list, int idx, const Separation& sep);

// Resolve pending sigma links / gamma patch of node idx from solved
// servants. Gamma values follow the forced-value formula: sigma = d(A~),
// gamma_r = d(0~) - d(A~), gamma_u = d({u}~) - d(A~) or - d(0~) depending on
// adjacency to r.
void resolve_pending(DecompList& list, int idx);

// Install the leaf table (orig ids) for node idx and unwind the applied
// records into the effective table: values gain the linearization offsets,
// witnesses gain V2 n S_hom(S') from each servant.
void install_solution(DecompList& list, int idx, ServiceTable leaf_table);

BoundsReport assert_bounds(const DecompList& list, bool throw_on_violation = true);

}  // namespace stabdec

#endif
