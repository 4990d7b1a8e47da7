#ifndef STABDEC_ORACLE_HPP
#define STABDEC_ORACLE_HPP

#include "stabdec/graph.hpp"

namespace stabdec {

// Brute-force ground truth. Kept deliberately simple: everything else in the
// project is validated against these functions.

struct OracleSolution {
    Rat value;
    NodeSet witness;  // lexicographically least optimum (mask order)
};

OracleSolution mwss_brute(const Graph& g, const WeightVector& w, const Caps& caps = {});

// One optimum per stable set R of the root: max w(S) over stable S with
// S n Z = R.
ServiceTable rooted_mwss_brute(const Graph& g, const NodeSet& z, const WeightVector& w,
                               const Caps& caps = {});

// Adds the region terms sigma(hom(S)) to the objective. Every region sigma
// must be resolved.
ServiceTable template_mwss_brute(const RootedTemplate& t, const WeightVector& w,
                                 const Caps& caps = {});

// Characteristic vectors of all stable sets; exactly the vertices of pol(G).
std::vector<std::vector<Rat>> polytope_vertices(const Graph& g, const Caps& caps = {});

}  // namespace stabdec

#endif
