#ifndef STABDEC_RECOGNITION_HPP
#define STABDEC_RECOGNITION_HPP

#include "stabdec/graph.hpp"

#include <functional>

namespace stabdec {

struct FanBaseTriple {
    int u = -1, c = -1, v = -1;
};

struct ClassReport {
    bool has_triangle = false;
    std::optional<std::vector<int>> even_hole;                 // cycle order
    std::optional<std::pair<std::vector<int>, int>> cap;       // (hole, cap node)
    bool is_cube = false;
    std::optional<int> universal_node;
    bool is_near_clique = false;
};

bool has_triangle(const Graph& g);

// Visits each chordless cycle of length >= 4 once (deterministic order);
// return false from the callback to stop early.
void for_each_hole(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit,
                   const Caps& caps = {});

std::optional<std::vector<int>> find_even_hole(const Graph& g, const Caps& caps = {});
std::optional<std::pair<std::vector<int>, int>> find_cap(const Graph& g, const Caps& caps = {});

bool is_cube(const Graph& g);

// A fan is a u-v path plus one node c whose neighborhood lies on the path and
// includes both ends. Returns a base when the whole graph is a fan.
std::optional<FanBaseTriple> is_fan(const Graph& g);
// Fan test for a prescribed base.
bool is_fan_with_base(const Graph& g, int u, int c, int v);

bool near_clique(const Graph& g);
std::optional<int> universal_node(const Graph& g);

// Adjacent pair with identical neighborhoods elsewhere.
std::optional<std::pair<int, int>> find_adjacent_twins(const Graph& g);

ClassReport classify(const Graph& g, const Caps& caps = {});

// Cap-free and even-hole-free (the class the pipeline targets).
bool in_target_class(const Graph& g, const Caps& caps = {});

}  // namespace stabdec

#endif
