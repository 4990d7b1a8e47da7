#include "stabdec/recognition.hpp"

#include <algorithm>

namespace stabdec {

bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.n; ++u) {
        bool found = false;
        g.adj[u].for_each([&](int v) {
            if (v > u && (g.adj[u] & g.adj[v]).any()) found = true;
        });
        if (found) return true;
    }
    return false;
}

namespace {
// Chordless cycle enumeration by DFS with chord pruning. Paths start at the
// cycle's minimum node; direction fixed by first step < last step.
struct HoleSearch {
    const Graph& g;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> path;
    NodeSet on_path;
    bool stop = false;

    bool extend() {
        int last = path.back();
        int first = path[0];
        NodeSet cands = g.adj[last];
        cands.for_each([&](int u) {
            if (stop || u <= first || on_path.test(u)) return;
            // u may touch the current chordless path only at `last`; touching
            // `first` as well closes a cycle and forbids further extension.
            NodeSet touched = g.adj[u] & on_path;
            touched.reset(last);
            if (touched == NodeSet::single(first)) {
                if (path.size() >= 3 && path[1] < u) {
                    path.push_back(u);
                    if (!visit(path)) stop = true;
                    path.pop_back();
                }
                return;
            }
            if (touched.any()) return;
            path.push_back(u);
            on_path.set(u);
            extend();
            on_path.reset(u);
            path.pop_back();
        });
        return !stop;
    }
};
}  // namespace

void for_each_hole(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit,
                   const Caps& caps) {
    if (g.n > caps.hole_n) throw CapError("hole search: node cap exceeded");
    for (int start = 0; start < g.n; ++start) {
        HoleSearch hs{g, visit};
        hs.path = {start};
        hs.on_path = NodeSet::single(start);
        if (!hs.extend()) return;
    }
}

std::optional<std::vector<int>> find_even_hole(const Graph& g, const Caps& caps) {
    std::optional<std::vector<int>> res;
    for_each_hole(
        g,
        [&](const std::vector<int>& cycle) {
            if (cycle.size() % 2 == 0) {
                res = cycle;
                return false;
            }
            return true;
        },
        caps);
    return res;
}

std::optional<std::pair<std::vector<int>, int>> find_cap(const Graph& g, const Caps& caps) {
    std::optional<std::pair<std::vector<int>, int>> res;
    for_each_hole(
        g,
        [&](const std::vector<int>& cycle) {
            NodeSet hole;
            for (int v : cycle) hole.set(v);
            for (int c = 0; c < g.n; ++c) {
                if (hole.test(c)) continue;
                NodeSet nb = g.adj[c] & hole;
                if (nb.count() != 2) continue;
                int a = nb.lowest(), b = nb.highest();
                if (g.adjacent(a, b)) {
                    res = {cycle, c};
                    return false;
                }
            }
            return true;
        },
        caps);
    return res;
}

bool is_cube(const Graph& g) {
    if (g.n != 8 || g.edge_count() != 12) return false;
    for (int v = 0; v < 8; ++v)
        if (g.degree(v) != 3) return false;
    // 2-coloring; with 3-regularity and 8 nodes, bipartite forces the cube.
    std::vector<int> color(8, -1);
    color[0] = 0;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        bool bad = false;
        g.adj[v].for_each([&](int u) {
            if (color[u] == -1) {
                color[u] = 1 - color[v];
                queue.push_back(u);
            } else if (color[u] == color[v]) {
                bad = true;
            }
        });
        if (bad) return false;
    }
    for (int v = 0; v < 8; ++v)
        if (color[v] == -1) return false;  // disconnected
    return !has_triangle(g);
}

bool is_fan_with_base(const Graph& g, int u, int c, int v) {
    if (u == v || u == c || v == c) return false;
    if (!g.adjacent(c, u) || !g.adjacent(c, v)) return false;
    // G - c must be a path with endpoints u and v covering all other nodes.
    NodeSet rest = g.nodes();
    rest.reset(c);
    if (rest.count() < 2) return false;
    int cur = u, prev = -1;
    int seen = 1;
    while (cur != v) {
        NodeSet nb = g.adj[cur] & rest;
        if (prev >= 0) nb.reset(prev);
        if (nb.count() != 1) return false;
        prev = cur;
        cur = nb.lowest();
        ++seen;
        if (seen > rest.count()) return false;
    }
    if (seen != rest.count()) return false;
    // v must be a path endpoint.
    NodeSet nb_v = g.adj[v] & rest;
    if (nb_v.count() != 1) return false;
    NodeSet nb_u = g.adj[u] & rest;
    if (rest.count() >= 2 && nb_u.count() != 1) return false;
    return true;
}

std::optional<FanBaseTriple> is_fan(const Graph& g) {
    for (int c = 0; c < g.n; ++c) {
        // candidate path = everything except c; find its endpoints
        NodeSet rest = g.nodes();
        rest.reset(c);
        std::vector<int> ends;
        bool shape_ok = true;
        rest.for_each([&](int v) {
            int d = (g.adj[v] & rest).count();
            if (d > 2 || d == 0) shape_ok = false;
            if (d <= 1) ends.push_back(v);
        });
        if (rest.count() == 2) {
            // two-node path: both are endpoints even when adjacent
            ends = rest.to_vector();
            shape_ok = true;
            if (!g.adjacent(ends[0], ends[1])) shape_ok = false;
        }
        if (!shape_ok || ends.size() != 2) continue;
        int u = std::min(ends[0], ends[1]);
        int v = std::max(ends[0], ends[1]);
        if (is_fan_with_base(g, u, c, v)) return FanBaseTriple{u, c, v};
    }
    return std::nullopt;
}

bool near_clique(const Graph& g) {
    if (g.n <= 2) return true;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            NodeSet rest = g.nodes();
            rest.reset(a);
            rest.reset(b);
            if (is_clique(g, rest)) return true;
        }
    return false;
}

std::optional<int> universal_node(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == g.n - 1 && g.n > 1) return v;
    return std::nullopt;
}

std::optional<std::pair<int, int>> find_adjacent_twins(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (!g.adjacent(u, v)) continue;
            NodeSet nu = g.adj[u], nv = g.adj[v];
            nu.reset(v);
            nv.reset(u);
            if (nu == nv) return std::pair{u, v};
        }
    return std::nullopt;
}

ClassReport classify(const Graph& g, const Caps& caps) {
    ClassReport r;
    r.has_triangle = has_triangle(g);
    r.even_hole = find_even_hole(g, caps);
    r.cap = find_cap(g, caps);
    r.is_cube = is_cube(g);
    r.universal_node = universal_node(g);
    r.is_near_clique = near_clique(g);
    return r;
}

bool in_target_class(const Graph& g, const Caps& caps) {
    return !find_even_hole(g, caps).has_value() && !find_cap(g, caps).has_value();
}

}  // namespace stabdec
