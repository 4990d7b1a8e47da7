#include "doctest.h"

#include "stabdec/graph.hpp"
#include "stabdec/oracle.hpp"

#include <random>

using namespace stabdec;

TEST_CASE("nodeset basics") {
    NodeSet s = NodeSet::of({1, 4, 70});
    CHECK(s.test(4));
    CHECK(!s.test(5));
    CHECK(s.count() == 3);
    CHECK(s.lowest() == 1);
    CHECK(s.highest() == 70);
    NodeSet t = NodeSet::of({4, 5});
    CHECK((s & t) == NodeSet::single(4));
    CHECK((s - t) == NodeSet::of({1, 70}));
    CHECK((s | t).count() == 4);
    CHECK(NodeSet::of({1}).is_subset_of(s));
    CHECK(!s.is_subset_of(t));
    CHECK(NodeSet::of({2}) < NodeSet::of({0, 2}));
    CHECK(NodeSet::of({3}) > NodeSet::of({0, 2}));
    s.reset(70);
    CHECK(s.highest() == 4);
    CHECK(s.to_string() == "{1,4}");
}

TEST_CASE("induced subgraph relabels densely and preserves labels") {
    Graph c5 = Graph::cycle(5);
    Graph p3 = induced_subgraph(c5, NodeSet::of({1, 2, 3}));
    CHECK(p3.n == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK(!p3.adjacent(0, 2));
    CHECK(p3.labels[0].text == "v2");

    Graph copy = induced_subgraph(c5, c5.nodes());
    CHECK(isomorphic(copy, c5));

    // cube minus one node: degree sequence (3,3,3,2,2,2,2)
    Graph q = Graph::cube();
    NodeSet keep = q.nodes();
    keep.reset(0);
    Graph q7 = induced_subgraph(q, keep);
    std::vector<int> degs;
    for (int v = 0; v < q7.n; ++v) degs.push_back(q7.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{2, 2, 2, 2, 3, 3, 3});
}

TEST_CASE("groups") {
    Graph g = Graph::from_edges(4, {{0, 2}, {1, 2}});  //  1-3,2-3 in spec's 1-based ids
    CHECK(is_group(g, NodeSet::of({0, 1})));
    CHECK(!is_group(g, NodeSet{}));

    Graph p4 = Graph::path(4);
    CHECK(!is_group(p4, NodeSet::of({0, 2})));

    CHECK(maximal_group(g, NodeSet::of({0, 1}), 0) == NodeSet::of({0, 1}));
    CHECK(maximal_group(p4, NodeSet::of({0, 1}), 0) == NodeSet::of({0}));
    CHECK(maximal_group(p4, NodeSet::single(2), 2) == NodeSet::single(2));
}

TEST_CASE("maximal_group agrees with subset brute force") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = Graph::empty(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        NodeSet u;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) u.set(v);
        if (!u.any()) u.set(0);
        int v = u.lowest();

        // brute: maximal group within u containing v
        std::vector<int> members = u.to_vector();
        NodeSet best;
        for (std::uint64_t mask = 0; mask < (1ull << members.size()); ++mask) {
            NodeSet cand;
            for (std::size_t i = 0; i < members.size(); ++i)
                if (mask >> i & 1) cand.set(members[i]);
            if (!cand.test(v) || !is_group(g, cand)) continue;
            if (cand.count() > best.count()) best = cand;
        }
        NodeSet got = maximal_group(g, u, v);
        CHECK(is_group(g, got));
        CHECK(got.count() == best.count());
    }
}

TEST_CASE("coarsest grouping") {
    Graph k3 = Graph::complete(3);
    auto gr = coarsest_grouping(k3, k3.nodes());
    CHECK(gr.blocks.size() == 1);

    Graph p4 = Graph::path(4);
    auto gr2 = coarsest_grouping(p4, NodeSet::of({1, 2}));
    CHECK(gr2.blocks.size() == 2);

    Graph g = Graph::from_edges(4, {{0, 2}, {1, 2}, {2, 3}});
    auto gr3 = coarsest_grouping(g, NodeSet::of({0, 1}));
    REQUIRE(gr3.blocks.size() == 1);
    CHECK(gr3.blocks[0] == NodeSet::of({0, 1}));
}

TEST_CASE("quotient by transversal") {
    // K2,3 with U = the 3-side as one group, V2 = 2-side
    Graph k23 = Graph::empty(5);  // 0,1 on one side; 2,3,4 other
    for (int a : {0, 1})
        for (int b : {2, 3, 4}) k23.add_edge(a, b);
    Grouping gr;
    gr.blocks = {NodeSet::of({2, 3, 4})};
    auto q = quotient_by_transversal(k23, NodeSet::of({0, 1}), gr);
    CHECK(q.graph.n == 3);
    CHECK(q.graph.edge_count() == 2);  // star K2,1
    CHECK(q.graph.labels[q.node_of_block[0]].kind == LabelKind::Transversal);

    // all singletons: isomorphic copy
    Grouping singles = Grouping::singletons(NodeSet::of({2, 3, 4}));
    auto q2 = quotient_by_transversal(k23, NodeSet::of({0, 1}), singles);
    CHECK(isomorphic(q2.graph, k23));
}

TEST_CASE("quotient independent of transversal choice up to isomorphism") {
    std::mt19937_64 rng(21);
    int done = 0;
    for (int trial = 0; trial < 400 && done < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = Graph::empty(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        NodeSet u;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) u.set(v);
        if (!u.any()) continue;
        NodeSet v2 = g.nodes() - u;
        // v2 | u covers all nodes here, so grouping ids match g's ids
        auto gr = coarsest_grouping(g, u);
        if (!grouping_valid(g, gr)) continue;
        bool has_big_block = false;
        for (auto& b : gr.blocks) has_big_block |= b.count() > 1;
        if (!has_big_block) continue;
        ++done;

        auto q1 = quotient_by_transversal(g, v2, gr);
        // alternate transversal: highest id per block
        NodeSet alt_reps;
        for (auto& b : gr.blocks) alt_reps.set(b.highest());
        Graph q2 = induced_subgraph(g, v2 | alt_reps);
        CHECK(isomorphic(q1.graph, q2));
    }
    CHECK(done > 0);
}

TEST_CASE("hom") {
    Graph g = Graph::from_edges(5, {{0, 2}, {1, 2}, {3, 4}});
    Grouping gr;
    gr.blocks = {NodeSet::of({0, 1}), NodeSet::of({3})};
    CHECK(hom(gr, NodeSet::single(2)) == NodeSet{});
    CHECK(hom(gr, NodeSet::of({0})) == NodeSet::single(0));
    CHECK(hom(gr, NodeSet::of({1, 3})) == NodeSet::of({0, 1}));
}

TEST_CASE("records") {
    Graph p3 = Graph::path(3);
    auto rec = add_record(p3, p3.nodes());
    CHECK(rec.record_nodes.size() == 5);  // 3-node path has 5 stable sets
    CHECK(rec.graph.n == 8);
    // record nodes pairwise adjacent
    for (std::size_t i = 0; i < rec.record_nodes.size(); ++i)
        for (std::size_t j = i + 1; j < rec.record_nodes.size(); ++j)
            CHECK(rec.graph.adjacent(rec.record_nodes[i], rec.record_nodes[j]));

    // A = empty: one record node adjacent to nothing outside the record
    Graph g2 = Graph::path(2);
    auto rec2 = add_record(g2, NodeSet{});
    CHECK(rec2.record_nodes.size() == 1);
    CHECK(rec2.graph.degree(rec2.record_nodes[0]) == 0);

    // A = single edge
    auto rec3 = add_record(g2, g2.nodes());
    CHECK(rec3.record_nodes.size() == 3);
    for (std::size_t i = 0; i < rec3.record_sets.size(); ++i) {
        if (rec3.record_sets[i] == NodeSet::single(0)) {
            NodeSet nb = rec3.graph.adj[rec3.record_nodes[i]];
            NodeSet outside = nb - NodeSet::of({rec3.record_nodes[0], rec3.record_nodes[1],
                                                rec3.record_nodes[2]});
            CHECK(outside == NodeSet::single(1));
        }
    }
}

TEST_CASE("unique tight extension into the record (lifting)") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = Graph::empty(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        NodeSet a;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) a.set(v);
        auto rec = add_record(g, a);
        // cliques of L(A): the record clique, and {v} u {r_T : v not in T}
        auto in_cliques = [&](const NodeSet& s) {
            NodeSet record_all;
            for (int r : rec.record_nodes) record_all.set(r);
            if ((s & record_all).count() != 1) return false;
            bool ok = true;
            a.for_each([&](int v) {
                NodeSet cl = NodeSet::single(v);
                for (std::size_t i = 0; i < rec.record_nodes.size(); ++i)
                    if (!rec.record_sets[i].test(v)) cl.set(rec.record_nodes[i]);
                if (!cl.intersects(s)) ok = false;
            });
            return ok;
        };
        for (const auto& s : enumerate_stable_sets(g)) {
            // count extensions of s to stable sets of G(A) meeting all cliques
            int count = 0;
            NodeSet expected;
            for (std::size_t i = 0; i < rec.record_nodes.size(); ++i) {
                NodeSet ext = s;
                ext.set(rec.record_nodes[i]);
                if (is_stable(rec.graph, ext) && in_cliques(ext)) {
                    ++count;
                    if (rec.record_sets[i] == (s & a)) expected = ext;
                }
            }
            CHECK(count == 1);
            CHECK(expected.any());
        }
    }
}

TEST_CASE("clique lift") {
    // u a clique of size k: lift has k+1 nodes
    Graph k3 = Graph::complete(3);
    auto lift = clique_lift(k3, NodeSet::of({0, 1}));
    CHECK(lift.lift_nodes.size() == 3);  // empty set and two singletons
    CHECK(lift.graph.n == 4);

    // u = empty: graph plus one isolated lift node
    auto lift2 = clique_lift(k3, NodeSet{});
    CHECK(lift2.graph.n == 4);
    CHECK(lift2.graph.degree(lift2.lift_nodes[0]) == 0);

    // u = nonadjacent pair in C4
    Graph c4 = Graph::cycle(4);
    auto lift3 = clique_lift(c4, NodeSet::of({0, 2}));
    CHECK(lift3.lift_nodes.size() == 4);
    CHECK(lift3.graph.n == 6);
}

TEST_CASE("stable set enumeration") {
    CHECK(enumerate_stable_sets(Graph::empty(2)).size() == 4);
    CHECK(enumerate_stable_sets(Graph::complete(3)).size() == 4);
    CHECK(enumerate_stable_sets(Graph::cycle(5)).size() == 11);

    // order is mask-ascending
    auto sets = enumerate_stable_sets(Graph::path(3));
    CHECK(sets.front() == NodeSet{});
    for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1] < sets[i]);

    Caps tight;
    tight.enum_nodes = 4;
    CHECK_THROWS_AS(enumerate_stable_sets(Graph::empty(5), tight), CapError);
}

TEST_CASE("cube stable set structure") {
    Graph q = Graph::cube();
    auto sets = enumerate_stable_sets(q);
    int alpha = 0, max_count = 0;
    for (const auto& s : sets) alpha = std::max(alpha, s.count());
    for (const auto& s : sets)
        if (s.count() == alpha) ++max_count;
    CHECK(alpha == 4);
    CHECK(max_count == 2);  // exactly the two bipartition sides
}

TEST_CASE("master-to-servant stability transfer") {
    // For stable s in G_{V1 u U} and s'' in V2:
    // s u s'' stable in G  <=>  hom(s) u image(s'') stable in servant graph.
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 5);
        Graph g = Graph::empty(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        // random split V1 | U | V2 with V1, V2 nonadjacent
        NodeSet u, v1, v2;
        for (int v = 0; v < n; ++v) {
            int roll = static_cast<int>(rng() % 3);
            if (roll == 0) v1.set(v);
            else if (roll == 1) u.set(v);
            else v2.set(v);
        }
        if (!u.any() || !v2.any() || sets_adjacent(g, v1, v2)) continue;
        Grouping gr;
        {
            std::vector<int> old_of_new;
            Graph ctx = induced_subgraph(g, v2 | u, &old_of_new);
            auto local = coarsest_grouping(ctx, [&] {
                NodeSet lu;
                for (std::size_t i = 0; i < old_of_new.size(); ++i)
                    if (u.test(old_of_new[i])) lu.set(static_cast<int>(i));
                return lu;
            }());
            for (auto& b : local.blocks) {
                NodeSet bb;
                b.for_each([&](int i) { bb.set(old_of_new[i]); });
                gr.blocks.push_back(bb);
            }
        }
        ++checked;
        auto q = quotient_by_transversal(g, v2, gr);
        std::vector<int> new_of_old(g.n, -1);
        for (std::size_t i = 0; i < q.old_of_new.size(); ++i) new_of_old[q.old_of_new[i]] = (int)i;

        std::vector<int> m_old;
        Graph master = induced_subgraph(g, v1 | u, &m_old);
        for (const auto& s_local : enumerate_stable_sets(master)) {
            NodeSet s;
            s_local.for_each([&](int i) { s.set(m_old[i]); });
            for (std::uint64_t mask = 0; mask < 16; ++mask) {
                // a few subsets of V2
                NodeSet s2;
                int bit = 0;
                v2.for_each([&](int v) {
                    if (bit < 4 && (mask >> bit & 1)) s2.set(v);
                    ++bit;
                });
                bool lhs = is_stable(g, s | s2);
                NodeSet rhs_set;
                NodeSet h = hom(gr, s);
                h.for_each([&](int b) { rhs_set.set(q.node_of_block[b]); });
                s2.for_each([&](int v) {
                    if (new_of_old[v] >= 0) rhs_set.set(new_of_old[v]);
                });
                bool rhs = is_stable(q.graph, rhs_set);
                CHECK(lhs == rhs);
            }
        }
    }
    CHECK(checked == 25);
}

TEST_CASE("canonical form separates and identifies") {
    CHECK(canonical_form(Graph::cycle(5)) == canonical_form([] {
              Graph g = Graph::empty(5);
              g.add_edge(0, 2);
              g.add_edge(2, 4);
              g.add_edge(4, 1);
              g.add_edge(1, 3);
              g.add_edge(3, 0);
              return g;
          }()));
    CHECK(canonical_form(Graph::path(4)) != canonical_form(Graph::cycle(4)));
    CHECK(canonical_form(Graph::cube()) == canonical_form(Graph::cube()));
}
