#include "stabdec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace stabdec {

std::string Label::display() const {
    switch (kind) {
        case LabelKind::Original: return text;
        case LabelKind::Transversal: return "~" + text;
        case LabelKind::Record: return "r" + text;
        case LabelKind::Lin: return "lin:" + text;
    }
    return text;
}

Graph Graph::empty(int n) {
    Graph g;
    g.n = n;
    g.adj.resize(n);
    g.labels.resize(n);
    for (int v = 0; v < n; ++v) g.labels[v] = {LabelKind::Original, "v" + std::to_string(v + 1)};
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = empty(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g = empty(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::complete(int n) {
    Graph g = empty(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cube() {
    Graph g = empty(8);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (__builtin_popcount(u ^ v) == 1) g.add_edge(u, v);
    return g;
}

int Graph::add_node(Label label) {
    adj.emplace_back();
    labels.push_back(std::move(label));
    return n++;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw InvalidArgument("self-loop");
    adj[u].set(v);
    adj[v].set(u);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n; ++v) twice += adj[v].count();
    return twice / 2;
}

void Graph::check_invariants() const {
    std::set<std::pair<int, std::string>> seen;
    for (int v = 0; v < n; ++v) {
        if (adj[v].test(v)) throw InvalidArgument("self-loop at " + std::to_string(v));
        adj[v].for_each([&](int u) {
            if (u >= n || !adj[u].test(v)) throw InvalidArgument("asymmetric adjacency");
        });
        if (!seen.insert({static_cast<int>(labels[v].kind), labels[v].text}).second)
            throw InvalidArgument("duplicate label " + labels[v].display());
    }
}

NodeSet neighbor_set(const Graph& g, const NodeSet& x) {
    NodeSet out;
    x.for_each([&](int v) { out |= g.adj[v]; });
    out -= x;
    return out;
}

bool fully_adjacent(const Graph& g, const NodeSet& x, const NodeSet& y) {
    bool ok = true;
    x.for_each([&](int v) {
        if (!y.is_subset_of(g.adj[v])) ok = false;
    });
    return ok;
}

bool sets_adjacent(const Graph& g, const NodeSet& x, const NodeSet& y) {
    bool adj = false;
    x.for_each([&](int v) {
        if (g.adj[v].intersects(y)) adj = true;
    });
    return adj;
}

bool is_clique(const Graph& g, const NodeSet& x) {
    bool ok = true;
    x.for_each([&](int v) {
        NodeSet rest = x;
        rest.reset(v);
        if (!rest.is_subset_of(g.adj[v])) ok = false;
    });
    return ok;
}

bool is_stable(const Graph& g, const NodeSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (g.adj[v].intersects(s)) ok = false;
    });
    return ok;
}

Graph induced_subgraph(const Graph& g, const NodeSet& s, std::vector<int>* old_of_new) {
    std::vector<int> keep = s.to_vector();
    std::vector<int> new_of_old(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) new_of_old[keep[i]] = static_cast<int>(i);

    Graph out;
    out.n = static_cast<int>(keep.size());
    out.adj.resize(out.n);
    out.labels.resize(out.n);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.labels[i] = g.labels[keep[i]];
        g.adj[keep[i]].for_each([&](int u) {
            if (new_of_old[u] >= 0) out.adj[i].set(new_of_old[u]);
        });
    }
    if (old_of_new) *old_of_new = keep;
    return out;
}

std::vector<NodeSet> connected_components_within(const Graph& g, const NodeSet& universe) {
    std::vector<NodeSet> comps;
    NodeSet left = universe;
    while (left.any()) {
        int start = left.lowest();
        NodeSet comp = NodeSet::single(start);
        NodeSet frontier = comp;
        while (frontier.any()) {
            NodeSet next;
            frontier.for_each([&](int v) { next |= g.adj[v]; });
            next &= universe;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        left -= comp;
    }
    return comps;
}

std::vector<NodeSet> connected_components(const Graph& g) {
    return connected_components_within(g, g.nodes());
}

bool is_connected(const Graph& g) {
    return g.n <= 1 || connected_components(g).size() == 1;
}

bool is_group(const Graph& g, const NodeSet& x) {
    if (!x.any()) return false;
    return fully_adjacent(g, x, neighbor_set(g, x));
}

NodeSet maximal_group(const Graph& g, const NodeSet& u, int v) {
    if (!u.test(v)) throw InvalidArgument("maximal_group: v not in u");
    NodeSet x = u;
    bool changed = true;
    while (changed) {
        changed = false;
        NodeSet outside_v = g.adj[v];
        outside_v -= x;
        x.for_each([&](int w) {
            if (w == v) return;
            NodeSet outside_w = g.adj[w];
            outside_w -= x;
            if (!(outside_w == outside_v)) {
                x.reset(w);
                changed = true;
            }
        });
    }
    return x;
}

NodeSet Grouping::support() const {
    NodeSet s;
    for (const auto& b : blocks) s |= b;
    return s;
}

int Grouping::block_of(int v) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].test(v)) return static_cast<int>(i);
    return -1;
}

Grouping Grouping::singletons(const NodeSet& u) {
    Grouping gr;
    u.for_each([&](int v) { gr.blocks.push_back(NodeSet::single(v)); });
    return gr;
}

bool grouping_valid(const Graph& context, const Grouping& grouping) {
    NodeSet seen;
    for (const auto& b : grouping.blocks) {
        if (!b.any()) return false;
        if (seen.intersects(b)) return false;
        seen |= b;
        if (!is_group(context, b)) return false;
    }
    for (std::size_t i = 0; i < grouping.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < grouping.blocks.size(); ++j) {
            const auto& x = grouping.blocks[i];
            const auto& y = grouping.blocks[j];
            if (sets_adjacent(context, x, y) && !fully_adjacent(context, x, y)) return false;
        }
    return true;
}

Grouping coarsest_grouping(const Graph& g, const NodeSet& u) {
    if (!u.any()) throw InvalidArgument("coarsest_grouping: empty set");
    Grouping out;
    NodeSet left = u;
    while (left.any()) {
        int v = left.lowest();
        NodeSet block = maximal_group(g, u, v);
        out.blocks.push_back(block);
        left -= block;
    }
    return out;
}

NodeSet transversal_of(const Grouping& grouping) {
    NodeSet t;
    for (const auto& b : grouping.blocks) t.set(b.lowest());
    return t;
}

Graph pattern_of(const Graph& g, const Grouping& grouping) {
    int k = static_cast<int>(grouping.blocks.size());
    Graph p;
    p.n = k;
    p.adj.resize(k);
    p.labels.resize(k);
    for (int i = 0; i < k; ++i) {
        p.labels[i] = {LabelKind::Transversal, g.labels[grouping.blocks[i].lowest()].text};
        for (int j = i + 1; j < k; ++j)
            if (sets_adjacent(g, grouping.blocks[i], grouping.blocks[j])) {
                p.adj[i].set(j);
                p.adj[j].set(i);
            }
    }
    return p;
}

NodeSet hom(const Grouping& grouping, const NodeSet& s) {
    NodeSet out;
    for (std::size_t i = 0; i < grouping.blocks.size(); ++i)
        if (grouping.blocks[i].intersects(s)) out.set(static_cast<int>(i));
    return out;
}

QuotientResult quotient_by_transversal(const Graph& g, const NodeSet& v2,
                                       const Grouping& grouping) {
    NodeSet u = grouping.support();
    {
        // Grouping must hold in G_{V2 u U}; rebuild block ids for the check.
        std::vector<int> old_of_new;
        Graph context = induced_subgraph(g, v2 | u, &old_of_new);
        std::vector<int> new_of_old(g.n, -1);
        for (std::size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = (int)i;
        Grouping local;
        for (const auto& b : grouping.blocks) {
            NodeSet nb;
            b.for_each([&](int v) { nb.set(new_of_old[v]); });
            local.blocks.push_back(nb);
        }
        if (!grouping_valid(context, local)) throw InvalidArgument("quotient: invalid grouping");
    }

    NodeSet reps = transversal_of(grouping);
    QuotientResult res;
    res.graph = induced_subgraph(g, v2 | reps, &res.old_of_new);
    std::vector<int> new_of_old(g.n, -1);
    for (std::size_t i = 0; i < res.old_of_new.size(); ++i)
        new_of_old[res.old_of_new[i]] = static_cast<int>(i);

    res.node_of_block.resize(grouping.blocks.size());
    for (std::size_t i = 0; i < grouping.blocks.size(); ++i) {
        int rep = grouping.blocks[i].lowest();
        int node = new_of_old[rep];
        res.node_of_block[i] = node;
        if (grouping.blocks[i].count() > 1)
            res.graph.labels[node] = {LabelKind::Transversal, g.labels[rep].text};
    }
    return res;
}

std::vector<NodeSet> enumerate_stable_sets(const Graph& g, const Caps& caps) {
    if (g.n > caps.enum_nodes || g.n > 48)
        throw CapError("enumerate_stable_sets: " + std::to_string(g.n) + " nodes exceeds cap");
    std::vector<std::uint64_t> adj(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        g.adj[v].for_each([&](int u) { adj[v] |= std::uint64_t(1) << u; });

    std::vector<NodeSet> out;
    std::uint64_t top = std::uint64_t(1) << g.n;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        bool stable = true;
        std::uint64_t bits = mask;
        while (bits) {
            int v = __builtin_ctzll(bits);
            if (adj[v] & mask) {
                stable = false;
                break;
            }
            bits &= bits - 1;
        }
        if (stable) out.push_back(NodeSet::from_mask(mask));
    }
    return out;
}

namespace {
void enum_counted_rec(const Graph& g, int v, NodeSet& cur, NodeSet forbidden,
                      std::vector<NodeSet>& out, std::size_t max_count, bool& overflow) {
    if (overflow) return;
    if (v == g.n) {
        if (out.size() >= max_count) {
            overflow = true;
            return;
        }
        out.push_back(cur);
        return;
    }
    enum_counted_rec(g, v + 1, cur, forbidden, out, max_count, overflow);
    if (!forbidden.test(v)) {
        cur.set(v);
        enum_counted_rec(g, v + 1, cur, forbidden | g.adj[v], out, max_count, overflow);
        cur.reset(v);
    }
}
}  // namespace

std::optional<std::vector<NodeSet>> enumerate_stable_sets_counted(const Graph& g,
                                                                  std::size_t max_count) {
    std::vector<NodeSet> out;
    NodeSet cur;
    bool overflow = false;
    enum_counted_rec(g, 0, cur, NodeSet{}, out, max_count, overflow);
    if (overflow) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
std::string names_key(const Graph& g, const NodeSet& s) {
    std::ostringstream ss;
    ss << '{';
    bool first = true;
    s.for_each([&](int v) {
        if (!first) ss << ',';
        ss << g.labels[v].display();
        first = false;
    });
    ss << '}';
    return ss.str();
}
}  // namespace

RecordResult add_record(const Graph& g, const NodeSet& a, const Caps& caps) {
    Graph ga = induced_subgraph(g, a);
    auto stable = enumerate_stable_sets_counted(ga, caps.record_sets);
    if (!stable) throw CapError("add_record: stable-set count exceeds cap");

    std::vector<int> a_nodes = a.to_vector();
    RecordResult res;
    res.graph = g;
    std::string ukey = names_key(g, a);
    for (const auto& t_local : *stable) {
        NodeSet t;  // back to g's ids
        t_local.for_each([&](int i) { t.set(a_nodes[i]); });
        int rnode = res.graph.add_node(
            {LabelKind::Record, "[" + ukey + "]" + names_key(g, t)});
        for (int other : res.record_nodes) res.graph.add_edge(rnode, other);
        NodeSet attach = a - t;
        attach.for_each([&](int v) { res.graph.add_edge(rnode, v); });
        res.record_sets.push_back(t);
        res.record_nodes.push_back(rnode);
    }
    return res;
}

CliqueLiftResult clique_lift(const Graph& g, const NodeSet& u, const Caps& caps) {
    Graph gu = induced_subgraph(g, u);
    auto stable = enumerate_stable_sets_counted(gu, caps.record_sets);
    if (!stable) throw CapError("clique_lift: stable-set count exceeds cap");

    std::vector<int> u_nodes = u.to_vector();
    NodeSet keep = g.nodes() - u;
    CliqueLiftResult res;
    res.graph = induced_subgraph(g, keep, &res.old_of_new);
    std::vector<int> new_of_old(g.n, -1);
    for (std::size_t i = 0; i < res.old_of_new.size(); ++i)
        new_of_old[res.old_of_new[i]] = static_cast<int>(i);

    std::string ukey = names_key(g, u);
    for (const auto& s_local : *stable) {
        NodeSet s;
        s_local.for_each([&](int i) { s.set(u_nodes[i]); });
        int lnode = res.graph.add_node(
            {LabelKind::Lin, "lift[" + ukey + "]" + names_key(g, s)});
        for (int other : res.lift_nodes) res.graph.add_edge(lnode, other);
        NodeSet outside = neighbor_set(g, s) - u;
        outside.for_each([&](int v) { res.graph.add_edge(lnode, new_of_old[v]); });
        res.lift_sets.push_back(s);
        res.lift_nodes.push_back(lnode);
        res.old_of_new.push_back(-1);
    }
    return res;
}

namespace {
bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<bool>& used,
                int v) {
    if (v == a.n) return true;
    for (int w = 0; w < b.n; ++w) {
        if (used[w] || a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int prev = 0; prev < v && ok; ++prev)
            if (a.adjacent(v, prev) != b.adjacent(w, map[prev])) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (iso_extend(a, b, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}
}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    if (a.n > 16) throw CapError("isomorphic: cap is 16 nodes");
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.n, -1);
    std::vector<bool> used(b.n, false);
    return iso_extend(a, b, map, used, 0);
}

namespace {
// Lexicographically minimal upper-triangular adjacency bits under relabeling.
// `tight` means the current prefix equals best's prefix; once strictly below,
// no comparison can prune any deeper.
void canon_rec(const Graph& g, std::vector<int>& perm, std::vector<bool>& used, int depth,
               std::vector<std::uint64_t>& bits, int bitpos, bool tight,
               std::vector<std::uint64_t>& best) {
    int n = g.n;
    if (depth == n) {
        if (bits < best) best = bits;
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        auto save_bits = bits;
        int pos = bitpos;
        bool t = tight;
        bool prune = false;
        for (int i = 0; i < depth; ++i, ++pos) {
            if (g.adjacent(perm[i], v)) bits[pos >> 6] |= std::uint64_t(1) << (pos & 63);
            if (t) {
                bool cb = (bits[pos >> 6] >> (pos & 63)) & 1;
                bool bb = (best[pos >> 6] >> (pos & 63)) & 1;
                if (cb != bb) {
                    if (cb) prune = true;
                    else t = false;
                    if (prune) break;
                }
            }
        }
        if (!prune) {
            perm[depth] = v;
            used[v] = true;
            canon_rec(g, perm, used, depth + 1, bits, pos, t, best);
            used[v] = false;
        }
        bits = save_bits;
    }
}
}  // namespace

std::vector<std::uint64_t> canonical_form(const Graph& g) {
    int n = g.n;
    int nbits = std::max(1, n * (n - 1) / 2);
    std::vector<std::uint64_t> bits((nbits + 63) / 64, 0);
    std::vector<std::uint64_t> best(bits.size(), ~std::uint64_t(0));
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    canon_rec(g, perm, used, 0, bits, 0, true, best);
    best.push_back(static_cast<std::uint64_t>(n));
    return best;
}

Rat weight_of(const WeightVector& w, const NodeSet& s) {
    Rat total = 0;
    s.for_each([&](int v) { total += w[v]; });
    return total;
}

WeightVector unit_weights(int n) {
    return WeightVector(n, Rat(1));
}

const ServiceTable::Entry& ServiceTable::at(const NodeSet& key) const {
    auto it = entries.find(key);
    if (it == entries.end())
        throw InvalidArgument("ServiceTable: missing key " + key.to_string());
    return it->second;
}

void ServiceTable::put(const NodeSet& key, Rat value, NodeSet witness) {
    entries[key] = {std::move(value), std::move(witness)};
}

bool ServiceTable::monotone_nonincreasing() const {
    for (const auto& [key, entry] : entries) {
        if (entry.value < 0) return false;
        for (const auto& [key2, entry2] : entries)
            if (key.is_subset_of(key2) && entry.value < entry2.value) return false;
    }
    return true;
}

bool ServiceTable::same_domain(const std::vector<NodeSet>& keys) const {
    if (keys.size() != entries.size()) return false;
    for (const auto& k : keys)
        if (!entries.count(k)) return false;
    return true;
}

void RootedTemplate::check(const Caps& caps) const {
    graph.check_invariants();
    if (!root.is_subset_of(graph.nodes())) throw InvalidArgument("root outside graph");
    for (const auto& region : regions) {
        if (!region.support().is_subset_of(graph.nodes()))
            throw InvalidArgument("region outside graph");
        Graph quotient = pattern_of(graph, region.grouping);
        if (!isomorphic(quotient, region.pattern))
            throw InvalidArgument("region pattern mismatch");
        if (region.resolved) {
            auto keys = enumerate_stable_sets(region.pattern, caps);
            if (!region.sigma.same_domain(keys))
                throw InvalidArgument("sigma domain mismatch");
        }
    }
}

}  // namespace stabdec
