#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "acl_lab/constructions.hpp"
#include "acl_lab/graph.hpp"
#include "acl_lab/homlib.hpp"

using namespace acl_lab;

TEST_CASE("mycielski substitution") {
    CHECK(canonical_code(mycielski_sub(0)) == canonical_code(complete_graph(1)));
    CHECK(canonical_code(mycielski_sub(2)) == canonical_code(cycle_graph(5)));
    CHECK(chromatic_number(mycielski_sub(3)) == 4);

    Graph m4 = mycielski_sub(4);
    CHECK(m4.order() == 9);
    CHECK(m4.edge_count() == 6 + 4 + 4 * 3);

    // the literal definition leaves M_1 disconnected
    CHECK_FALSE(is_connected(mycielski_sub(1)));

    // no clique of size n+1
    for (int n = 2; n <= 4; ++n)
        CHECK(omits(mycielski_sub(n), complete_graph(n + 1)));
}

TEST_CASE("socketed clique bouquets") {
    Graph g121 = bouquet_star(1, 2, 1);
    CHECK(g121.order() == 5);
    CHECK(canonical_code(g121) == canonical_code(cycle_graph(5)));

    Graph g221 = bouquet_star(2, 2, 1);
    CHECK(g221.order() == 2 * 2 + 1 + 4);
    CHECK(chromatic_number(g221) == 3);

    Graph g132 = bouquet_star(1, 3, 2);
    CHECK(g132.order() == 3 + 2 + 3);

    // the added sockets form an independent set adjacent exactly to their
    // selection
    for (int v = 5; v < g221.order(); ++v)
        for (int w = v + 1; w < g221.order(); ++w) CHECK_FALSE(g221.has_edge(v, w));

    CHECK_THROWS_AS(bouquet_star(1, 3, 1), std::invalid_argument);  // r=1, m < n-1
    CHECK_THROWS_AS(bouquet_star(2, 1, 2), std::invalid_argument);  // m > n
    CHECK_THROWS_AS(bouquet_star(0, 2, 1), std::invalid_argument);
}

TEST_CASE("named examples") {
    Graph bow = bowtie();
    CHECK(bow.order() == 5);
    CHECK(bow.edge_count() == 6);
    CHECK(blocks(bow).blocks.size() == 2);

    Graph ttp2 = two_triangles_path(2);
    CHECK(ttp2.order() == 7);
    CHECK(ttp2.edge_count() == 8);

    CHECK(canonical_code(complete_triangle(3)) == canonical_code(bow));

    Graph w2 = wheel(2);
    CHECK(w2.order() == 6);
    CHECK(w2.edge_count() == 10);

    Graph oj = odd_cycle_join(1, 1);
    CHECK(oj.order() == 6);
    CHECK(oj.edge_count() == 3 + 3 + 9);

    Graph kp = complete_path(4, 3);
    CHECK(kp.order() == 7);
    CHECK(kp.edge_count() == 6 + 3);

    CHECK_THROWS_AS(complete_triangle(2), std::invalid_argument);
    CHECK_THROWS_AS(wheel(0), std::invalid_argument);
    CHECK_THROWS_AS(two_triangles_path(-1), std::invalid_argument);
}

TEST_CASE("path attachment corner does not matter up to isomorphism") {
    // attach the path at vertex 4 instead of vertex 3
    int n = 2;
    Graph alt(5 + n);
    for (auto [u, v] : bowtie().edges()) alt.add_edge(u, v);
    int prev = 4;
    for (int i = 0; i < n; ++i) {
        alt.add_edge(prev, 5 + i);
        prev = 5 + i;
    }
    CHECK(canonical_code(alt) == canonical_code(two_triangles_path(n)));
}

TEST_CASE("minimal images of the constructions") {
    // spot checks; the full instance table lives in the acceptance suite
    auto codes = [](const ImageSet& images) {
        return std::set<std::string>(images.codes.begin(), images.codes.end());
    };
    Graph gs = bouquet_star(1, 2, 1);
    std::set<std::string> expected{canonical_code(gs), canonical_code(complete_graph(3))};
    CHECK(codes(minimal_hom_images(gs)) == expected);

    std::set<std::string> m2_expected{canonical_code(mycielski_sub(2)),
                                      canonical_code(complete_graph(3))};
    CHECK(codes(minimal_hom_images(mycielski_sub(2))) == m2_expected);
}
