#include "stabdec/oracle.hpp"

namespace stabdec {

OracleSolution mwss_brute(const Graph& g, const WeightVector& w, const Caps& caps) {
    OracleSolution best{Rat(0), NodeSet{}};
    for (const auto& s : enumerate_stable_sets(g, caps)) {
        Rat val = weight_of(w, s);
        if (val > best.value) best = {val, s};
    }
    return best;
}

ServiceTable rooted_mwss_brute(const Graph& g, const NodeSet& z, const WeightVector& w,
                               const Caps& caps) {
    ServiceTable table;
    for (const auto& s : enumerate_stable_sets(g, caps)) {
        NodeSet r = s & z;
        Rat val = weight_of(w, s);
        auto it = table.entries.find(r);
        if (it == table.entries.end() || val > it->second.value) table.put(r, val, s);
    }
    return table;
}

ServiceTable template_mwss_brute(const RootedTemplate& t, const WeightVector& w,
                                 const Caps& caps) {
    for (const auto& region : t.regions)
        if (!region.resolved) throw InvalidArgument("template_mwss_brute: unresolved sigma");
    ServiceTable table;
    for (const auto& s : enumerate_stable_sets(t.graph, caps)) {
        NodeSet r = s & t.root;
        Rat val = weight_of(w, s);
        for (const auto& region : t.regions) val += region.sigma.value(hom(region.grouping, s));
        auto it = table.entries.find(r);
        if (it == table.entries.end() || val > it->second.value) table.put(r, val, s);
    }
    return table;
}

std::vector<std::vector<Rat>> polytope_vertices(const Graph& g, const Caps& caps) {
    if (g.n > 20) throw CapError("polytope_vertices: cap is 20 nodes");
    std::vector<std::vector<Rat>> out;
    for (const auto& s : enumerate_stable_sets(g, caps)) {
        std::vector<Rat> x(g.n, Rat(0));
        s.for_each([&](int v) { x[v] = 1; });
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace stabdec
