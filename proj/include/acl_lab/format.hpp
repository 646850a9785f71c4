#ifndef ACL_LAB_FORMAT_HPP
#define ACL_LAB_FORMAT_HPP

#include <iosfwd>
#include <string>

#include "acl_lab/graph.hpp"

namespace acl_lab {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0-based ids. Writing emits edges sorted with u < v, so write/read
// round-trips are bit-exact.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_string(const std::string& text);
Graph load_edge_list_file(const std::string& path);
void save_edge_list_file(const Graph& g, const std::string& path);

// DOT export (deterministic layout-free form) and a reader for exactly
// that form.
std::string write_dot(const Graph& g, const std::string& name = "g");
Graph read_dot_string(const std::string& text);

// Named-graph grammar: K5, C7, P4, S3, bowtie, M3, Gstar(2,2,1), TTP(2),
// KnK3(4), KnPk(4,3), wheel(2), join(a,b,...), amalgam(a,va,b,vb),
// sum(a,b,...). Whitespace is ignored. Throws std::invalid_argument on
// malformed input.
Graph parse_graph(const std::string& spec);

// Accepts either a grammar expression or (when the token names a readable
// file) an edge-list file path.
Graph load_graph_arg(const std::string& arg);

}  // namespace acl_lab

#endif
