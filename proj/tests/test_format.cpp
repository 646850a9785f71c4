#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "acl_lab/constructions.hpp"
#include "acl_lab/format.hpp"

using namespace acl_lab;

TEST_CASE("edge list round trip is bit-exact") {
    Graph g = bowtie();
    std::string text = write_edge_list(g);
    Graph back = read_edge_list_string(text);
    CHECK(back == g);
    CHECK(write_edge_list(back) == text);

    Graph empty(0);
    CHECK(read_edge_list_string(write_edge_list(empty)) == empty);

    Graph isolated(3);
    CHECK(read_edge_list_string(write_edge_list(isolated)) == isolated);

    CHECK_THROWS_AS(read_edge_list_string("2 1\n0 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_edge_list_string("not a header"), std::invalid_argument);
    CHECK_THROWS_AS(read_edge_list_string("3 2\n0 1\n"), std::invalid_argument);
}

TEST_CASE("dot round trip") {
    Graph g = wheel(2);
    std::string dot = write_dot(g);
    Graph back = read_dot_string(dot);
    CHECK(back == g);
    CHECK(write_dot(back) == dot);
}

TEST_CASE("grammar tokens") {
    CHECK(parse_graph("K5") == complete_graph(5));
    CHECK(parse_graph("C7") == cycle_graph(7));
    CHECK(parse_graph("P4") == path_graph(4));
    CHECK(parse_graph("S3") == star_graph(3));
    CHECK(parse_graph("M3") == mycielski_sub(3));
    CHECK(parse_graph("bowtie") == bowtie());
    CHECK(parse_graph("Gstar(2,2,1)") == bouquet_star(2, 2, 1));
    CHECK(parse_graph("TTP(2)") == two_triangles_path(2));
    CHECK(parse_graph("KnK3(4)") == complete_triangle(4));
    CHECK(parse_graph("KnPk(4,3)") == complete_path(4, 3));
    CHECK(parse_graph("wheel(2)") == wheel(2));
    CHECK(parse_graph("join(K1, C5)") == join_graphs(complete_graph(1), cycle_graph(5)));
    CHECK(parse_graph("sum(K2, K2)") == complete_graph(2).disjoint_union(complete_graph(2)));
    CHECK(parse_graph("amalgam(K3, 0, K3, 0)") == vertex_amalgam(complete_graph(3), 0,
                                                                 complete_graph(3), 0));
    CHECK(parse_graph(" join( K2 , sum(K1, K1) ) ").order() == 4);
}

TEST_CASE("grammar errors") {
    CHECK_THROWS_AS(parse_graph("C2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("wheel(0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("Q7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("K5 extra"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("join(K2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("Gstar(1,2)"), std::invalid_argument);
}
