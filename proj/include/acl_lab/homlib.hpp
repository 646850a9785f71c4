#ifndef ACL_LAB_HOMLIB_HPP
#define ACL_LAB_HOMLIB_HPP

#include <optional>
#include <string>
#include <vector>

#include "acl_lab/graph.hpp"

namespace acl_lab {

// Partition of a graph's vertices into independent classes; the quotient
// identifies each class to a point.
struct QuotientPartition {
    const Graph* source = nullptr;
    std::vector<std::vector<int>> classes;  // nonempty, disjoint, covering
};

// Quotient graph on the classes: two classes are adjacent iff the source
// has an edge between them. Throws if a class contains an adjacent pair
// (that would be a loop) or the partition is malformed.
Graph quotient_graph(const QuotientPartition& p);

struct ImageSet {
    Graph source;
    std::vector<Graph> images;        // deduplicated, sorted by canonical code
    std::vector<std::string> codes;   // canonical code per image
    std::vector<bool> proper;         // image of a non-discrete partition
    std::vector<bool> minimal;        // no other image weakly embeds into it
};

// All homomorphic images of g (quotients by partitions into independent
// sets), up to isomorphism. Includes g itself via the discrete
// partition. Throws cap_error above the image cap.
ImageSet hom_images(const Graph& g);

// The minimal images under weak-subgraph embedding.
ImageSet minimal_hom_images(const Graph& g);

struct HomClosureWitness {
    int constraint_index = -1;
    std::vector<std::vector<int>> partition;
    Graph image;
};

// True iff every proper homomorphic image of every constraint weakly
// contains some constraint; otherwise the first failing (constraint,
// partition, image) in canonical order.
std::pair<bool, std::optional<HomClosureWitness>> is_hom_closed(std::span<const Graph> constraints);

// Enumerates partitions of g into independent classes in canonical
// (restricted-growth) order; fn returns false to stop early.
void for_each_independent_partition(const Graph& g,
                                    const std::function<bool(const std::vector<std::vector<int>>&)>& fn);

}  // namespace acl_lab

#endif
