#ifndef ACL_LAB_ENUMERATE_HPP
#define ACL_LAB_ENUMERATE_HPP

#include <functional>

#include "acl_lab/graph.hpp"

namespace acl_lab {

// Streams one representative per isomorphism class of graphs with
// exactly `order` vertices, in canonical-code order. Built level by
// level: each (n-1)-vertex class is extended by every neighborhood of a
// new vertex and deduplicated by canonical code.
void for_each_graph(int order, const std::function<void(const Graph&)>& fn,
                    bool connected_only = false);

// Classes for all orders 1..max_order (in order).
void for_each_graph_up_to(int max_order, const std::function<void(const Graph&)>& fn,
                          bool connected_only = false);

std::vector<Graph> all_graphs(int order, bool connected_only = false);

}  // namespace acl_lab

#endif
