#ifndef ACL_LAB_CONSTRUCTIONS_HPP
#define ACL_LAB_CONSTRUCTIONS_HPP

#include "acl_lab/graph.hpp"

namespace acl_lab {

// Mycielski step applied to K_n. Vertex numbering: 0 first, then the
// independent layer a_1..a_n (ids 1..n), then the clique layer b_1..b_n
// (ids n+1..2n). 0 is adjacent exactly to the a_i; the b_i form a
// complete graph; a_i ~ b_j iff i != j. Order 2n+1.
// M_1 is disconnected (b_1 is isolated); taken as-is.
Graph mycielski_sub(int n);

// Bouquet-with-sockets construction. Start from r disjoint copies of K_n
// (ids block by block) plus one K_m (next m ids). With m0 = min(m, n-1),
// for every S consisting of n-1 vertices from each K_n block and m0
// vertices of the K_m block, add one vertex adjacent exactly to S; these
// added vertices form an independent set and are appended in
// lexicographic S order. Requires n >= m >= 1 and (r >= 2 or m >= n-1).
Graph bouquet_star(int r, int n, int m);

// Two triangles with exactly one common vertex. Ids: 0,1,2 first
// triangle; 2,3,4 second (2 is the common vertex).
Graph bowtie();

// bowtie plus a path of n edges attached at vertex 3 (a non-common
// vertex of the second triangle). Order 5+n.
Graph two_triangles_path(int n);

// K_n and K_3 sharing exactly one vertex (vertex n-1). n >= 3.
Graph complete_triangle(int n);

// K_n with a path of k edges attached at vertex n-1. n >= 1, k >= 1.
Graph complete_path(int n, int k);

// join(K_1, C_{2n+1}); hub is vertex 0. n >= 1.
Graph wheel(int n);

// join(C_{2m+1}, C_{2n+1}). m, n >= 1.
Graph odd_cycle_join(int m, int n);

}  // namespace acl_lab

#endif
