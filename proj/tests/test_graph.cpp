#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <set>

#include "acl_lab/caps.hpp"
#include "acl_lab/constructions.hpp"
#include "acl_lab/enumerate.hpp"
#include "acl_lab/graph.hpp"
#include "brute.hpp"

using namespace acl_lab;

TEST_CASE("graph construction and validation") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == complete_graph(3));

    Graph k1 = Graph::from_edges(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(canonical_code(c5) == canonical_code(cycle_graph(5)));

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);

    // duplicate edges collapse
    Graph dup = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("standard families") {
    Graph p4 = path_graph(4);
    CHECK(p4.order() == 5);
    CHECK(p4.edge_count() == 4);

    Graph s3 = star_graph(3);
    CHECK(s3.order() == 4);
    int max_deg = 0;
    for (int v = 0; v < s3.order(); ++v) max_deg = std::max(max_deg, s3.degree(v));
    CHECK(max_deg == 3);

    Graph two_k2 = complete_graph(2).disjoint_union(complete_graph(2));
    CHECK(two_k2.order() == 4);
    CHECK(two_k2.edge_count() == 2);
    CHECK_FALSE(is_connected(two_k2));

    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(star_graph(-1), std::invalid_argument);
}

TEST_CASE("join") {
    Graph wheel5 = join_graphs(complete_graph(1), cycle_graph(5));
    CHECK(wheel5.order() == 6);
    CHECK(wheel5.edge_count() == 10);

    CHECK(canonical_code(join_graphs(complete_graph(2), complete_graph(3))) ==
          canonical_code(complete_graph(5)));

    Graph g = cycle_graph(4);
    CHECK(join_graphs(Graph(0), g) == g);

    // order symmetry up to isomorphism
    Graph a = path_graph(2), b = cycle_graph(3);
    CHECK(canonical_code(join_graphs(a, b)) == canonical_code(join_graphs(b, a)));
}

TEST_CASE("vertex amalgam") {
    Graph bow = vertex_amalgam(complete_graph(3), 0, complete_graph(3), 0);
    CHECK(bow.order() == 5);
    CHECK(bow.edge_count() == 6);
    CHECK(canonical_code(bow) == canonical_code(bowtie()));

    Graph g = cycle_graph(4);
    CHECK(canonical_code(vertex_amalgam(complete_graph(1), 0, g, 2)) == canonical_code(g));

    // gluing two 2-edge paths end to end gives the 4-edge path
    Graph p2 = path_graph(2);
    CHECK(canonical_code(vertex_amalgam(p2, 2, p2, 0)) == canonical_code(path_graph(4)));

    CHECK_THROWS_AS(vertex_amalgam(p2, 9, p2, 0), std::invalid_argument);
}

TEST_CASE("free amalgam") {
    // two triangles over a common point make the bow-tie
    Graph base = complete_graph(1);
    Graph tri = complete_graph(3);
    std::vector<int> base_anchor{0}, pat_anchor{0};
    Graph bow = free_amalgam(base, base_anchor, tri, pat_anchor, 2);
    CHECK(canonical_code(bow) == canonical_code(bowtie()));

    // zero copies change nothing
    Graph c4 = cycle_graph(4);
    CHECK(free_amalgam(c4, base_anchor, tri, pat_anchor, 0) == c4);

    // vertex counting: |base| + copies * (|pattern| - |anchor|)
    Graph glued = free_amalgam(c4, std::vector<int>{0, 1}, path_graph(2), std::vector<int>{0, 1}, 3);
    CHECK(glued.order() == 4 + 3 * 1);
    // pendants only attach at the anchor vertex carrying the pattern edge
    CHECK(glued.degree(0) == 2);
    CHECK(glued.degree(1) == 5);
    CHECK(brute::longest_path_edges(glued) == longest_path_edges(glued));
    CHECK(longest_path_edges(glued) == 4);

    // anchor must be a weak embedding of the pattern's anchor part
    Graph nonedge(2);
    CHECK_THROWS_AS(
        free_amalgam(nonedge, std::vector<int>{0, 1}, tri, std::vector<int>{0, 1}, 1),
        std::invalid_argument);
}

TEST_CASE("embeddings against the injection scan") {
    CHECK(embeddings(complete_graph(2), complete_graph(3), EmbedMode::weak).size() == 6);
    CHECK(embeddings(complete_graph(3), cycle_graph(5), EmbedMode::weak).empty());
    CHECK(embeddings(path_graph(2), cycle_graph(4), EmbedMode::induced).size() == 8);

    // partial assignments restrict and stay consistent
    EmbedOptions opts;
    opts.partial = {{0, 2}};
    auto ems = embeddings(path_graph(2), cycle_graph(4), EmbedMode::induced, opts);
    CHECK(ems.size() == 2);
    for (const auto& em : ems) CHECK(em.assignment[0] == 2);

    EmbedOptions bad;
    bad.partial = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS(embeddings(path_graph(2), cycle_graph(4), EmbedMode::weak, bad),
                    std::invalid_argument);

    // exhaustive cross-check on all graph pairs up to 4 vertices
    std::vector<Graph> small;
    for (int n = 1; n <= 4; ++n)
        for_each_graph(n, [&](const Graph& g) { small.push_back(g); });
    for (const Graph& p : small)
        for (const Graph& h : small) {
            CHECK(static_cast<int>(embeddings(p, h, EmbedMode::weak).size()) ==
                  brute::count_embeddings(p, h, false));
            CHECK(static_cast<int>(embeddings(p, h, EmbedMode::induced).size()) ==
                  brute::count_embeddings(p, h, true));
        }
}

TEST_CASE("omits") {
    std::vector<Graph> k3{complete_graph(3)};
    CHECK(omits(cycle_graph(5), k3));
    std::vector<Graph> bow{bowtie()};
    CHECK_FALSE(omits(bowtie(), bow));
    CHECK(omits(complete_graph(4), bow));

    // embeds(C, G, weak) nonempty <=> omits(G, {C}) false, for everything small
    std::vector<Graph> small;
    for (int n = 1; n <= 5; ++n)
        for_each_graph(n, [&](const Graph& g) { small.push_back(g); });
    for (const Graph& c : small)
        for (const Graph& g : small)
            CHECK(brute::embeds(c, g, false) == !omits(g, c));
}

TEST_CASE("blocks") {
    BlockDecomposition bow = blocks(bowtie());
    CHECK(bow.blocks.size() == 2);
    CHECK(bow.cut_vertices == std::vector<int>{2});
    CHECK(bow.tree.size() == 1);

    BlockDecomposition k5 = blocks(complete_graph(5));
    CHECK(k5.blocks.size() == 1);
    CHECK(k5.cut_vertices.empty());

    BlockDecomposition p3 = blocks(path_graph(3));
    CHECK(p3.blocks.size() == 3);
    CHECK(p3.cut_vertices.size() == 2);

    // isolated vertices are singleton blocks
    Graph lonely(3);
    lonely.add_edge(0, 1);
    CHECK(blocks(lonely).blocks.size() == 2);

    // the blocks partition the edge set, checked over everything small
    for (int n = 1; n <= 5; ++n)
        for_each_graph(n, [&](const Graph& g) {
            int covered = 0;
            for (const auto& blk : blocks(g).blocks) covered += g.induced(blk).edge_count();
            CHECK(covered == g.edge_count());
        });
}

namespace {

bool brute_colorable(const Graph& g, int k) {
    int n = g.order();
    std::vector<int> color(n, 0);
    while (true) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (color[u] == color[v]) { proper = false; break; }
        if (proper) return true;
        int i = 0;
        while (i < n && color[i] == k - 1) color[i++] = 0;
        if (i == n) return false;
        ++color[i];
    }
}

}  // namespace

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(mycielski_sub(3)) == 4);
    CHECK(chromatic_number(bouquet_star(1, 2, 1)) == 3);
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(Graph(3)) == 1);

    // exact against full assignment enumeration up to 7 vertices
    for (int n = 1; n <= 7; ++n)
        for_each_graph(n, [&](const Graph& g) {
            int chi = chromatic_number(g);
            CHECK(brute_colorable(g, chi));
            if (chi > 1) CHECK_FALSE(brute_colorable(g, chi - 1));
        });
}

TEST_CASE("k-connectivity") {
    CHECK(is_k_connected(cycle_graph(5), 2));
    Graph k33 = join_graphs(Graph(3), Graph(3));
    CHECK(is_k_connected(k33, 3));
    CHECK_FALSE(is_k_connected(k33, 4));
    CHECK_FALSE(is_k_connected(bowtie(), 2));
    CHECK(is_k_connected(bowtie(), 1));
    // the complete-graph convention: K_n is (n-1)-connected
    CHECK(is_k_connected(complete_graph(4), 3));
    CHECK_FALSE(is_k_connected(complete_graph(4), 4));
    CHECK_THROWS_AS(is_k_connected(complete_graph(3), 0), std::invalid_argument);
}

TEST_CASE("longest path") {
    for (int k = 3; k <= 6; ++k) CHECK(longest_path_edges(cycle_graph(k)) == k - 1);
    CHECK(longest_path_edges(complete_graph(4)) == 3);
    CHECK(longest_path_edges(bowtie()) == 4);
    CHECK(longest_path_edges(Graph(0)) == 0);
    CHECK(longest_path_edges(Graph(4)) == 0);

    for (int n = 1; n <= 6; ++n)
        for_each_graph(n, [&](const Graph& g) {
            CHECK(longest_path_edges(g) == brute::longest_path_edges(g));
        });
}

TEST_CASE("canonical codes") {
    Graph c5 = cycle_graph(5);
    Graph relabeled = Graph::from_edges(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
    CHECK(canonical_code(c5) == canonical_code(relabeled));
    CHECK(canonical_code(complete_graph(3)) != canonical_code(path_graph(2)));
    CHECK(canonical_code(mycielski_sub(2)) == canonical_code(c5));

    // invariance under random relabelings
    brute::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + rng.below(7);
        Graph g = brute::random_graph(rng, n, 40);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        Graph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        CHECK(canonical_code(g) == canonical_code(h));
    }

    // codes separate all classes on up to 6 vertices (known counts)
    const int expected[] = {0, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> codes;
        for_each_graph(n, [&](const Graph& g) { codes.insert(canonical_code(g)); });
        CHECK(static_cast<int>(codes.size()) == expected[n]);
    }

    CHECK_THROWS_AS(canonical_code(Graph(caps().code_cap + 1)), cap_error);

    // anchored codes distinguish anchor placements but not orderings
    Graph p2 = path_graph(2);
    CHECK(canonical_code_anchored(p2, std::vector<int>{0}) ==
          canonical_code_anchored(p2, std::vector<int>{2}));
    CHECK(canonical_code_anchored(p2, std::vector<int>{0}) !=
          canonical_code_anchored(p2, std::vector<int>{1}));
}

TEST_CASE("solidity") {
    CHECK(is_solid(bowtie()));
    CHECK_FALSE(is_solid(cycle_graph(5)));
    CHECK(is_solid(complete_triangle(5)));
    CHECK(is_solid(complete_graph(4)));
    CHECK(is_solid(path_graph(3)));
    CHECK_FALSE(is_solid(cycle_graph(4)));
}

TEST_CASE("triangle listing") {
    CHECK(triangles(complete_graph(4)).size() == 4);
    CHECK(triangles(bowtie()).size() == 2);
    CHECK(triangles(cycle_graph(5)).empty());
}
