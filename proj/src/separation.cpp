#include "stabdec/separation.hpp"

#include "stabdec/recognition.hpp"

#include <algorithm>
#include <set>

namespace stabdec {

bool is_node_cutset_separation(const Graph& g, const NodeSet& v1, const NodeSet& u,
                               const NodeSet& v2, const Grouping& grouping) {
    if (v1.intersects(u) || v1.intersects(v2) || u.intersects(v2)) return false;
    if (!((v1 | u | v2) == g.nodes())) return false;
    if (!v2.any()) return false;
    if (sets_adjacent(g, v1, v2)) return false;
    if (!(grouping.support() == u)) return false;
    if ((v1 | u).count() <= static_cast<int>(grouping.blocks.size())) return false;
    Graph context;
    {
        std::vector<int> old_of_new;
        context = induced_subgraph(g, v2 | u, &old_of_new);
        std::vector<int> new_of_old(g.n, -1);
        for (std::size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = (int)i;
        Grouping local;
        for (const auto& b : grouping.blocks) {
            NodeSet nb;
            b.for_each([&](int v) { nb.set(new_of_old[v]); });
            local.blocks.push_back(nb);
        }
        if (!grouping_valid(context, local)) return false;
    }
    return true;
}

void validate_separation(const Graph& g, const Separation& sep) {
    auto fail = [](const std::string& what) { throw InvalidArgument("separation: " + what); };
    switch (sep.kind) {
        case SepKind::NodeCut:
        case SepKind::CliqueCut:
        case SepKind::OneLin:
        case SepKind::FanBase:
            if (!is_node_cutset_separation(g, sep.v1, sep.u, sep.v2, sep.grouping))
                fail("node cutset conditions");
            break;
        default:
            break;
    }
    switch (sep.kind) {
        case SepKind::CliqueCut:
            if (!is_clique(g, sep.u)) fail("cutset not a clique");
            break;
        case SepKind::OneLin: {
            if (!is_clique(g, sep.k)) fail("K not a clique");
            if (!((sep.a1 | sep.k) == sep.u) || sep.a1.intersects(sep.k)) fail("A1 != U\\K");
            if (!sep.a2.is_subset_of(sep.v2)) fail("A2 outside V2");
            if (!fully_adjacent(g, sep.a1, sep.k | sep.a2)) fail("A1 not fully adjacent to K u A2");
            if (sets_adjacent(g, sep.a1, sep.v2 - sep.a2)) fail("A1 adjacent to V2\\A2");
            break;
        }
        case SepKind::Amalgam: {
            if (!sep.a1.any() || !sep.a2.any()) fail("A1/A2 empty");
            if (!fully_adjacent(g, sep.a1, sep.a2)) fail("A1,A2 not fully adjacent");
            if (!is_clique(g, sep.k)) fail("K not a clique");
            if (!fully_adjacent(g, sep.k, sep.a1 | sep.a2)) fail("K not fully adjacent to A1 u A2");
            if (sets_adjacent(g, sep.amalgam_v1, sep.amalgam_v2 | sep.a2)) fail("V1 ~ V2 u A2");
            if (sets_adjacent(g, sep.amalgam_v2, sep.amalgam_v1 | sep.a1)) fail("V2 ~ V1 u A1");
            if ((sep.amalgam_v1 | sep.a1).count() < 2) fail("|V1 u A1| < 2");
            if ((sep.amalgam_v2 | sep.a2).count() < 2) fail("|V2 u A2| < 2");
            NodeSet all = sep.amalgam_v1 | sep.a1 | sep.k | sep.a2 | sep.amalgam_v2;
            if (!(all == g.nodes())) fail("parts do not cover V");
            int total = sep.amalgam_v1.count() + sep.a1.count() + sep.k.count() + sep.a2.count() +
                        sep.amalgam_v2.count();
            if (total != g.n) fail("parts overlap");
            break;
        }
        case SepKind::GenAmalgam: {
            NodeSet rest = g.nodes() - sep.u;
            NodeSet seen;
            for (const auto& w : sep.wpart) {
                if (!w.any() || seen.intersects(w)) fail("W-part not a partition");
                seen |= w;
                w.for_each([&](int v) {
                    NodeSet outside = g.adj[v] - w - sep.u;
                    if (outside.any() && !sep.u.is_subset_of(g.adj[v]))
                        fail("boundary node not fully adjacent to U");
                });
            }
            if (!(seen == rest)) fail("W-parts do not cover V\\U");
            break;
        }
        case SepKind::FanBase: {
            if (!NodeSet::of({sep.base_u, sep.base_c, sep.base_v}).is_subset_of(sep.u) ||
                sep.u.count() != 3)
                fail("base triple mismatch");
            std::vector<int> old_of_new;
            Graph servant = induced_subgraph(g, sep.v2 | sep.u, &old_of_new);
            std::vector<int> new_of_old(g.n, -1);
            for (std::size_t i = 0; i < old_of_new.size(); ++i)
                new_of_old[old_of_new[i]] = (int)i;
            if (!is_fan_with_base(servant, new_of_old[sep.base_u], new_of_old[sep.base_c],
                                  new_of_old[sep.base_v]))
                fail("servant side is not a fan with this base");
            break;
        }
        default:
            break;
    }
}

namespace {

// Berry-Bordat style closure over minimal separators.
std::vector<NodeSet> minimal_separators(const Graph& g) {
    std::set<NodeSet> seen;
    std::vector<NodeSet> queue;
    auto push = [&](const NodeSet& s) {
        if (s.any() && seen.insert(s).second) queue.push_back(s);
    };
    for (int v = 0; v < g.n; ++v) {
        NodeSet rest = g.nodes() - g.adj[v];
        rest.reset(v);
        for (const auto& comp : connected_components_within(g, rest))
            push(neighbor_set(g, comp));
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        NodeSet s = queue[i];
        s.for_each([&](int x) {
            NodeSet rest = g.nodes() - s - g.adj[x];
            rest.reset(x);
            for (const auto& comp : connected_components_within(g, rest))
                push(neighbor_set(g, comp));
        });
    }
    return {seen.begin(), seen.end()};
}

struct CandidateOrder {
    int v2_size;
    NodeSet v2, u;
    bool operator<(const CandidateOrder& o) const {
        if (v2_size != o.v2_size) return v2_size < o.v2_size;
        if (!(v2 == o.v2)) return v2 < o.v2;
        return u < o.u;
    }
};

}  // namespace

std::optional<Separation> find_clique_cutset(const Graph& g, const NodeSet& root) {
    std::vector<NodeSet> candidates;
    if (!is_connected(g) && g.n > 1) candidates.push_back(NodeSet{});
    for (const auto& s : minimal_separators(g))
        if (is_clique(g, s)) candidates.push_back(s);

    std::optional<CandidateOrder> best;
    for (const auto& u : candidates) {
        auto comps = connected_components_within(g, g.nodes() - u);
        if (comps.size() < 2) continue;
        NodeSet root_rest = root - u;
        for (const auto& v2 : comps) {
            if (root_rest.intersects(v2)) continue;
            CandidateOrder cand{v2.count(), v2, u};
            if (!best || cand < *best) best = cand;
        }
    }
    if (!best) return std::nullopt;

    Separation sep;
    sep.kind = SepKind::CliqueCut;
    sep.u = best->u;
    sep.v2 = best->v2;
    sep.v1 = g.nodes() - sep.u - sep.v2;
    sep.k = sep.u;
    sep.grouping = Grouping::singletons(sep.u);
    validate_separation(g, sep);
    return sep;
}

namespace {

enum AmState : int { UNSET = 0, S_V1, S_A1, S_K, S_A2, S_V2 };

struct AmalgamSearch {
    const Graph& g;
    std::vector<int> state;
    int a1_seed, a2_seed;
    std::optional<Separation> found;

    bool compatible(int v, int s) const {
        for (int w = 0; w < g.n; ++w) {
            if (w == v || state[w] == UNSET) continue;
            bool adj = g.adjacent(v, w);
            int sw = state[w];
            int a = std::min(s, sw), b = std::max(s, sw);
            // required adjacency
            if ((a == S_A1 && b == S_A2) || (a == S_K && b == S_K) ||
                (a == S_A1 && b == S_K) || (a == S_K && b == S_A2)) {
                if (!adj) return false;
            }
            // required non-adjacency
            if ((a == S_V1 && b == S_A2) || (a == S_V1 && b == S_V2) ||
                (a == S_A1 && b == S_V2)) {
                if (adj) return false;
            }
        }
        return true;
    }

    void run(int v) {
        if (found) return;
        while (v < g.n && state[v] != UNSET) ++v;
        if (v == g.n) {
            finish();
            return;
        }
        for (int s : {S_K, S_A1, S_A2, S_V1, S_V2}) {
            if (s == S_A1 && v < a1_seed) continue;  // a1_seed = min(A1)
            if (s == S_A2 && v < a2_seed) continue;  // a2_seed = min(A2)
            if (!compatible(v, s)) continue;
            state[v] = s;
            run(v + 1);
            state[v] = UNSET;
            if (found) return;
        }
    }

    void finish() {
        NodeSet v1, a1, k, a2, v2;
        for (int v = 0; v < g.n; ++v) switch (state[v]) {
                case S_V1: v1.set(v); break;
                case S_A1: a1.set(v); break;
                case S_K: k.set(v); break;
                case S_A2: a2.set(v); break;
                case S_V2: v2.set(v); break;
            }
        if ((v1 | a1).count() < 2 || (v2 | a2).count() < 2) return;
        Separation sep;
        sep.kind = SepKind::Amalgam;
        sep.amalgam_v1 = v1;
        sep.amalgam_v2 = v2;
        sep.a1 = a1;
        sep.k = k;
        sep.a2 = a2;
        sep.v1 = v1;
        sep.u = a1 | k;
        sep.v2 = v2 | a2;
        sep.grouping.blocks.push_back(a1);
        k.for_each([&](int x) { sep.grouping.blocks.push_back(NodeSet::single(x)); });
        validate_separation(g, sep);
        found = sep;
    }
};

}  // namespace

std::optional<Separation> find_amalgam(const Graph& g, const Caps& caps) {
    if (g.n > caps.amalgam_n) throw CapError("find_amalgam: node cap exceeded");
    // Canonical seeds: a1 = min(A1), a2 = min(A2), a1 < a2 (sides may swap).
    for (int a1 = 0; a1 < g.n; ++a1) {
        std::vector<int> nbrs;
        g.adj[a1].for_each([&](int a2) {
            if (a2 > a1) nbrs.push_back(a2);
        });
        for (int a2 : nbrs) {
            AmalgamSearch search{g, std::vector<int>(g.n, UNSET), a1, a2, std::nullopt};
            search.state[a1] = S_A1;
            search.state[a2] = S_A2;
            search.run(0);
            if (search.found) return search.found;
        }
    }
    return std::nullopt;
}

bool amalgam_exists_naive(const Graph& g) {
    if (g.n > 9) throw CapError("amalgam_exists_naive: too large");
    std::vector<int> state(g.n, S_V1);
    std::uint64_t total = 1;
    for (int i = 0; i < g.n; ++i) total *= 5;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        NodeSet parts[6];
        for (int v = 0; v < g.n; ++v) {
            parts[S_V1 + c % 5].set(v);
            c /= 5;
        }
        const NodeSet &v1 = parts[S_V1], &a1 = parts[S_A1], &k = parts[S_K], &a2 = parts[S_A2],
                      &v2 = parts[S_V2];
        if (!a1.any() || !a2.any()) continue;
        if ((v1 | a1).count() < 2 || (v2 | a2).count() < 2) continue;
        if (!fully_adjacent(g, a1, a2)) continue;
        if (!is_clique(g, k) || !fully_adjacent(g, k, a1 | a2)) continue;
        if (sets_adjacent(g, v1, v2 | a2)) continue;
        if (sets_adjacent(g, v2, v1 | a1)) continue;
        return true;
    }
    return false;
}

std::optional<Separation> find_one_linearizable(const Graph& g, const NodeSet& z,
                                                const Caps& caps) {
    if (near_clique(g)) return std::nullopt;
    if (auto cc = find_clique_cutset(g, z)) {
        Separation sep = *cc;
        sep.kind = SepKind::OneLin;
        sep.a1 = NodeSet{};
        sep.k = sep.u;
        sep.a2 = NodeSet{};
        validate_separation(g, sep);
        return sep;
    }
    auto am = find_amalgam(g, caps);
    if (!am) return std::nullopt;

    auto build = [&](const NodeSet& v1, const NodeSet& a1, const NodeSet& k, const NodeSet& a2,
                     const NodeSet& v2) -> Separation {
        Separation sep;
        sep.kind = SepKind::OneLin;
        sep.v1 = v1;
        sep.a1 = a1;
        sep.k = k;
        sep.a2 = a2;
        sep.v2 = v2;
        sep.u = a1 | k;
        if (a1.any()) sep.grouping.blocks.push_back(a1);
        k.for_each([&](int x) { sep.grouping.blocks.push_back(NodeSet::single(x)); });
        validate_separation(g, sep);
        return sep;
    };

    NodeSet V1 = am->amalgam_v1, A1 = am->a1, K = am->k, A2 = am->a2, V2 = am->amalgam_v2;
    // Root meets an amalgam side: it cannot meet both (V1 and V2 u A2 are
    // nonadjacent while the root is a clique), so the cutset on the other
    // side keeps the root in the master.
    if (z.intersects(V1 | V2)) {
        if (z.intersects(V2)) std::swap(V1, V2), std::swap(A1, A2);
        return build(V1, A1, K, A2, V2 | A2);
    }
    // Root inside A1 u K u A2: fold Z n A2 into the clique part.
    int side2 = ((A2 | V2) - z).count();
    int side1 = ((A1 | V1) - z).count();
    if (side2 < 2 && side1 >= 2) std::swap(V1, V2), std::swap(A1, A2);
    NodeSet folded = z & A2;
    NodeSet k2 = K | folded;
    NodeSet a2rest = A2 - z;
    return build(V1, A1, k2, a2rest, V2 | a2rest);
}

std::optional<Separation> twin_separation(const Graph& g, const NodeSet& root) {
    auto twins = find_adjacent_twins(g);
    if (!twins || g.n < 3) return std::nullopt;
    NodeSet u = NodeSet::of({twins->first, twins->second});
    if (!root.is_subset_of(u)) return std::nullopt;
    Separation sep;
    sep.kind = SepKind::OneLin;
    sep.v1 = NodeSet{};
    sep.u = u;
    sep.v2 = g.nodes() - u;
    sep.a1 = NodeSet{};
    sep.k = u;
    sep.a2 = NodeSet{};
    sep.grouping.blocks.push_back(u);
    validate_separation(g, sep);
    return sep;
}

bool fits(const Separation& sep, const RootedTemplate& t) {
    for (const auto& region : t.regions) {
        NodeSet support = region.support();
        bool left = support.is_subset_of(sep.v1 | sep.u);
        bool right = support.is_subset_of(sep.v2 | sep.u);
        if (!left && !right) return false;
        if (support.intersects(sep.v2)) {
            for (const auto& x : region.grouping.blocks) {
                NodeSet xu = x & sep.u;
                if (!xu.any()) continue;
                NodeSet covered;
                for (const auto& b : sep.grouping.blocks) {
                    NodeSet common = b & xu;
                    if (!common.any()) continue;
                    if (!(common == b)) return false;  // block split across X
                    covered |= b;
                }
                if (!(covered == xu)) return false;
            }
        }
    }
    return true;
}

std::vector<Separation> all_fan_bases(const Graph& g, const NodeSet& root) {
    std::vector<std::pair<CandidateOrder, Separation>> found;
    for (int c = 0; c < g.n; ++c) {
        std::vector<int> nb = g.adj[c].to_vector();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], v = nb[j];
                NodeSet triple = NodeSet::of({u, c, v});
                for (const auto& w : connected_components_within(g, g.nodes() - triple)) {
                    NodeSet v1 = g.nodes() - triple - w;
                    if (!v1.any()) continue;
                    if ((root - triple).intersects(w)) continue;
                    std::vector<int> old_of_new;
                    Graph servant = induced_subgraph(g, w | triple, &old_of_new);
                    std::vector<int> new_of_old(g.n, -1);
                    for (std::size_t t = 0; t < old_of_new.size(); ++t)
                        new_of_old[old_of_new[t]] = (int)t;
                    if (!is_fan_with_base(servant, new_of_old[u], new_of_old[c], new_of_old[v]))
                        continue;
                    Separation sep;
                    sep.kind = SepKind::FanBase;
                    sep.v1 = v1;
                    sep.u = triple;
                    sep.v2 = w;
                    sep.base_u = u;
                    sep.base_c = c;
                    sep.base_v = v;
                    sep.grouping = Grouping::singletons(triple);
                    if (!is_node_cutset_separation(g, sep.v1, sep.u, sep.v2, sep.grouping))
                        continue;
                    found.push_back({CandidateOrder{w.count(), w, triple}, sep});
                }
            }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Separation> out;
    for (auto& [ord, sep] : found) out.push_back(std::move(sep));
    return out;
}

std::optional<Separation> find_fan_base(const Graph& g, const NodeSet& root) {
    auto all = all_fan_bases(g, root);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace stabdec
