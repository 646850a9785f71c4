#ifndef ACL_LAB_GRAPH_HPP
#define ACL_LAB_GRAPH_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace acl_lab {

// Finite simple undirected graph over dense 0-based vertex ids.
// Adjacency is kept symmetric and irreflexive; storage is one bitset row
// per vertex so neighborhood intersections are cheap.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    // Builds a graph from an edge list; edges are symmetrized and
    // deduplicated. Rejects loops and out-of-range endpoints.
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void add_vertex() { resize(n_ + 1); }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    bool adjacent_to_all(int v, std::span<const int> vs) const;

    // Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Induced subgraph on vs; vertex i of the result is vs[i].
    Graph induced(const std::vector<int>& vs) const;
    Graph disjoint_union(const Graph& other) const;

    bool operator==(const Graph& other) const = default;

    // Number of 64-bit words per adjacency row.
    int row_words() const { return words_; }
    const uint64_t* row(int v) const { return adj_.data() + static_cast<size_t>(v) * words_; }

private:
    void resize(int n);
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> adj_;
};

enum class EmbedMode { weak, induced };

// Injective vertex map witnessing a weak or induced embedding;
// assignment[p] is the host vertex carrying pattern vertex p.
struct EmbeddingMap {
    std::vector<int> assignment;
    EmbedMode mode = EmbedMode::weak;
};

struct EmbedOptions {
    // Partial assignment (pattern vertex, host vertex); must be injective
    // and consistent with the mode.
    std::vector<std::pair<int, int>> partial;
    // Optional per-pattern-vertex candidate restriction. Empty = no
    // restriction. allowed[p] lists permitted host vertices for p.
    std::vector<std::vector<int>> allowed;
    // Require the image to touch at least one of these host vertices.
    std::vector<int> must_touch;
    // Stop after this many embeddings (0 = unlimited).
    size_t limit = 0;
};

// All embeddings of pattern into host, sorted lexicographically by
// assignment vector. Throws std::invalid_argument on an inconsistent
// partial assignment.
std::vector<EmbeddingMap> embeddings(const Graph& pattern, const Graph& host, EmbedMode mode,
                                     const EmbedOptions& opts = {});
bool embeds(const Graph& pattern, const Graph& host, EmbedMode mode,
            const EmbedOptions& opts = {});

// True iff no constraint has a weak embedding into g.
bool omits(const Graph& g, std::span<const Graph> constraints);
bool omits(const Graph& g, const Graph& constraint);

// Weak embedding whose image meets `required`; searched by pinning each
// pattern vertex to each required host vertex, so it stays local when
// the required set is small.
bool embeds_touching(const Graph& pattern, const Graph& host, std::span<const int> required);

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // sorted vertex sets
    std::vector<int> cut_vertices;         // sorted
    std::vector<std::pair<int, int>> tree; // block indices sharing a cut vertex
};

// Biconnected components; bridge edges are 2-vertex blocks and isolated
// vertices are singleton blocks.
BlockDecomposition blocks(const Graph& g);

bool is_connected(const Graph& g);
int chromatic_number(const Graph& g);

// k >= 1. True iff g has more than k vertices and stays connected after
// deleting any k-1 of them (so K_n counts as (n-1)-connected).
bool is_k_connected(const Graph& g, int k);

// Maximum number of edges over all simple paths, by backtracking.
int longest_path_edges(const Graph& g);

// Canonical byte string: equal codes iff isomorphic. First byte is the
// order, then the upper-triangle adjacency bits of the minimizing vertex
// order. Throws cap_error above the configured order cap.
std::string canonical_code(const Graph& g);

// Canonical code of (g, anchor): minimization ranges over permutations
// that keep anchor vertices in the leading positions. Equal codes iff
// there is an isomorphism matching anchors to anchors.
std::string canonical_code_anchored(const Graph& g, std::span<const int> anchor);

std::string code_to_hex(const std::string& code);

// Every induced 2-connected subgraph is complete; equivalently every
// block is complete.
bool is_solid(const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);   // n >= 3
Graph path_graph(int k);    // k edges, k+1 vertices
Graph star_graph(int n);    // center 0, degree n

// Disjoint union plus all cross edges; a's vertices keep their ids.
Graph join_graphs(const Graph& a, const Graph& b);

// Disjoint union with va and vb merged. a's vertices keep their ids and
// the merged vertex keeps id va; b's other vertices follow in order.
Graph vertex_amalgam(const Graph& a, int va, const Graph& b, int vb);

// base plus `copies` fresh copies of pattern minus its anchor, each glued
// only along the anchor: copy vertices carry the pattern's edges to the
// anchor image and to each other, nothing more. base vertices keep their
// ids; copies are appended in copy-major order.
// pattern_anchor[i] is glued onto base_anchor[i]; pattern edges inside the
// anchor must already exist in base (weak embedding), else
// std::invalid_argument.
Graph free_amalgam(const Graph& base, std::span<const int> base_anchor, const Graph& pattern,
                   std::span<const int> pattern_anchor, int copies);

// All triangles of g as sorted triples, lexicographic order.
std::vector<std::array<int, 3>> triangles(const Graph& g);

}  // namespace acl_lab

#endif
