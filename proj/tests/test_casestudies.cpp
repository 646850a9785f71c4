#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "acl_lab/builder.hpp"
#include "acl_lab/casestudies.hpp"
#include "acl_lab/constructions.hpp"
#include "acl_lab/enumerate.hpp"
#include "brute.hpp"

using namespace acl_lab;

namespace {

// two complete bipartite fans K_{2,5} sharing one hub, hubs u=0, w=1, v=2
Graph double_fan() {
    Graph g(13);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, 3 + i);      // u side
        g.add_edge(1, 3 + i);
        g.add_edge(1, 8 + i);      // v side
        g.add_edge(2, 8 + i);
    }
    return g;
}

}  // namespace

TEST_CASE("special edges") {
    CHECK(special_edges(complete_graph(4)).size() == 6);
    CHECK(special_edges(bowtie()).empty());
    CHECK(special_edges(cycle_graph(5)).empty());
}

TEST_CASE("bow-tie closure reports") {
    // inside a complete K_4 every edge is special and the closure of a
    // vertex is the whole clique, meeting the bound exactly
    Graph k4 = complete_graph(4);
    BowtieReport rep = bowtie_closure(k4, {0});
    CHECK(rep.a_star == std::vector<int>{0, 1, 2, 3});
    CHECK(rep.bound_ok);
    CHECK(rep.claim1);
    CHECK(rep.claim2);
    CHECK(rep.claim3);
    CHECK(rep.a_star_stable);

    // triangle-free hosts leave the input untouched
    BowtieReport none = bowtie_closure(cycle_graph(5), {1, 3});
    CHECK(none.a_star == std::vector<int>{1, 3});
    CHECK(none.claim1);

    // a lone triangle has no special edge: claim 1 is reported false
    BowtieReport lone = bowtie_closure(complete_graph(3), {0});
    CHECK_FALSE(lone.claim1);
    CHECK(lone.claim2);

    CHECK_THROWS_AS(bowtie_closure(bowtie(), {0}), std::invalid_argument);
}

TEST_CASE("clique analysis for the complete-plus-triangle constraint") {
    // K_5 with n=4: every 3-subset is special via its two common
    // neighbors, so the star of a vertex is the whole clique
    Graph k5 = complete_graph(5);
    KnK3Context ctx(k5, 4);
    CHECK(ctx.cliques_ok());
    CHECK(ctx.star(0) == std::vector<int>{0, 1, 2, 3, 4});
    KnK3Report rep = ctx.closure({0});
    CHECK(rep.closure == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(rep.closure.size() == 5);  // n + 1
    CHECK(rep.bound_ok);
    CHECK_FALSE(rep.closed);

    // no 3-clique anywhere: no special sets, everything closed
    Graph c6 = cycle_graph(6);
    KnK3Context empty(c6, 4);
    CHECK(empty.special_n().empty());
    CHECK(empty.special_n1().empty());
    CHECK(empty.closure({0, 3}).closed);

    // two K_4s sharing a triangle respect the intersection law
    Graph shared(5);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) shared.add_edge(u, v);
    for (int u = 1; u < 4; ++u) shared.add_edge(u, 4);
    KnK3Context two(shared, 4);
    CHECK(two.cliques_ok());

    CHECK_THROWS_AS(KnK3Context(complete_triangle(4), 4), std::invalid_argument);
    CHECK_THROWS_AS(KnK3Context(c6, 2), std::invalid_argument);
}

TEST_CASE("clique intersection law holds in every small constraint-free host") {
    Graph constraint = complete_triangle(4);
    for (int n = 1; n <= 8; ++n)
        for_each_graph(n, [&](const Graph& g) {
            if (!omits(g, constraint)) return;
            KnK3Context ctx(g, 4);
            CHECK(ctx.cliques_ok());
        });
}

TEST_CASE("uniqueness and clique claims hold in every small bow-tie-free host") {
    // the second and third special-edge claims are forced by bow-tie
    // freeness alone; only the first needs a saturated host
    Graph bow = bowtie();
    for (int n = 1; n <= 8; ++n)
        for_each_graph(n, [&](const Graph& g) {
            if (!omits(g, bow)) return;
            BowtieContext ctx(g);
            CHECK(ctx.claim2());
            CHECK(ctx.claim3());
        });
}

TEST_CASE("closure growth bounds on path-free approximants") {
    // the recorded bounds are far from tight; a violation would flag an
    // implementation bug, not a sharp estimate
    for (int k : {3, 4}) {
        ConstraintSet cs = ConstraintSet::from({path_graph(k)});
        BuildConfig cfg = BuildConfig::defaults(cs);
        cfg.vertex_cap = 40;
        auto [g, trace] = build_approximant(cfg);
        double level1_bound = std::pow(double(k), 3.0 * k);
        double full_bound = std::pow(double(k), 3.0 * k * k);
        for (int v = 0; v < std::min(6, g.order()); ++v) {
            ClosureReport level1 = cl_family(g, {v}, path_basis(k - 1), cs, false);
            CHECK(double(level1.final_set.size()) < level1_bound);
            ClosureReport full = cl_family(g, {v}, path_basis(k - 1), cs, true);
            CHECK(double(full.final_set.size()) < full_bound);
        }
    }
}

TEST_CASE("omega") {
    // the two hubs of K_{2,5} are linked by five disjoint 2-edge paths
    // and nothing longer
    Graph fan(7);
    for (int i = 0; i < 5; ++i) {
        fan.add_edge(0, 2 + i);
        fan.add_edge(1, 2 + i);
    }
    CHECK(omega(fan, 0, 1, 5) == 2);

    // adjacency holds degenerately at length one
    CHECK(omega(complete_graph(2), 0, 1, 99) == 1);

    // nonadjacent cycle vertices have only two connecting paths
    CHECK(omega(cycle_graph(5), 0, 2, 2) == 0);

    // raising the threshold never raises omega
    for (int t = 1; t <= 6; ++t)
        CHECK(omega(fan, 0, 1, t) >= omega(fan, 0, 1, t + 1));

    // one-ended variant: five rays of length one, the longer ones collide
    CHECK(omega(fan, 0, omega_infinity, 5) == 1);
    CHECK(omega(fan, 0, omega_infinity, 2) == 1);  // longer rays all collide in the other hub

    CHECK_THROWS_AS(omega(fan, 0, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(omega(fan, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("chain classification") {
    Graph g = double_fan();

    // two vertices alone are never a chain
    ChainReport two = chain_classify(g, {0, 1}, false, 5);
    CHECK(two.kind == ChainKind::neither);

    // hub-to-hub-to-hub is a chain of virtual length four: omega is 2 on
    // each hop and 0 across (all long routes share the middle hub)
    ChainReport chain = chain_classify(g, {0, 1, 2}, false, 5);
    CHECK(chain.kind == ChainKind::chain);
    CHECK(chain.omega_values == std::vector<int>{2, 2});
    CHECK(chain.virtual_length == 4);
    CHECK(omega(g, 0, 2, 5) == 0);

    // a single vertex with the open tail is below the length floor
    ChainReport lone = chain_classify(g, {0}, true, 5);
    CHECK(lone.kind == ChainKind::neither);

    // hub pair with the open tail qualifies
    ChainReport open = chain_classify(g, {0, 1}, true, 5);
    CHECK(open.kind == ChainKind::open_chain);
    CHECK(open.virtual_length == 3);

    CHECK_THROWS_AS(chain_classify(g, {}, false, 5), std::invalid_argument);
}

TEST_CASE("path-count audit") {
    ErdosGallaiAudit c5 = erdos_gallai_audit(cycle_graph(5));
    CHECK(c5.longest_path == 4);
    CHECK(c5.edge_count == 5);
    CHECK(c5.bound_ok);

    ErdosGallaiAudit k4 = erdos_gallai_audit(complete_graph(4));
    CHECK(k4.longest_path == 3);
    CHECK(k4.edge_count == 6);
    CHECK(k4.bound_ok);  // 12 <= 12, tight

    ErdosGallaiAudit empty = erdos_gallai_audit(Graph(0));
    CHECK(empty.longest_path == 0);
    CHECK(empty.bound_ok);
}

TEST_CASE("chain covers") {
    // inside the 4-cycle the maximum path from the seed covers everything
    Graph c4 = cycle_graph(4);
    ChainCoverReport rep = chain_cover(c4, {0}, 4);
    CHECK(rep.cover.size() <= 4);
    CHECK(static_cast<int>(rep.cover.size()) - 1 <= 3);
    CHECK(rep.bound_ok);
    CHECK(rep.covers_ok);

    ChainCoverReport none = chain_cover(c4, {}, 4);
    CHECK(none.cover.empty());
    CHECK(none.bound_ok);
    CHECK(none.covers_ok);

    // a bare path seeded at its endpoint: one maximum path, no chains
    Graph p3 = path_graph(3);
    ChainCoverReport path = chain_cover(p3, {0}, 4);
    CHECK(path.max_paths.size() == 1);
    CHECK(path.max_paths[0].size() == 4);
    CHECK(path.chains.empty());

    CHECK_THROWS_AS(chain_cover(path_graph(4), {0}, 4), std::invalid_argument);
}
