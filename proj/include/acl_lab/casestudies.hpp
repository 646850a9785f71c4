#ifndef ACL_LAB_CASESTUDIES_HPP
#define ACL_LAB_CASESTUDIES_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "acl_lab/closure.hpp"
#include "acl_lab/graph.hpp"

namespace acl_lab {

// Edges contained in at least two distinct triangles.
std::vector<std::pair<int, int>> special_edges(const Graph& g);

struct BowtieReport {
    std::vector<int> input;
    std::vector<int> a_star;
    bool claim1 = false;  // every triangle contains a special edge
    bool claim2 = false;  // triangle point off its special edges lies on a unique triangle
    bool claim3 = false;  // point on two special edges lies on a K_4 holding all its triangles
    bool a_star_stable = false;  // applying the closure step to a_star adds nothing
    bool bound_ok = false;       // |a_star| <= 4 |input|
};

// Precomputed bow-tie analysis of one host; the host must omit the
// bow-tie. Claims are evaluated once, closures are cheap per query.
class BowtieContext {
public:
    explicit BowtieContext(const Graph& g);
    BowtieReport closure(const std::vector<int>& a) const;
    bool claim1() const { return claim1_; }
    bool claim2() const { return claim2_; }
    bool claim3() const { return claim3_; }

private:
    std::vector<int> star_step(const std::vector<int>& a) const;
    const Graph& g_;
    std::vector<std::array<int, 3>> tris_;
    std::set<std::pair<int, int>> special_;
    std::vector<std::vector<int>> tri_at_;
    bool claim1_ = false, claim2_ = false, claim3_ = false;
};

BowtieReport bowtie_closure(const Graph& g, const std::vector<int>& a);

struct KnK3Report {
    int n = 0;
    std::vector<std::pair<int, std::vector<int>>> a_star;  // per input vertex
    bool closed = false;        // a* subset of input for every input vertex
    std::vector<int> closure;   // fixed point of adding a*
    bool bound_ok = false;      // |closure| <= (n+1)|input|
};

// Precomputed clique analysis for the complete-graph-plus-triangle
// constraint; the host must omit complete_triangle(n). n >= 3.
class KnK3Context {
public:
    KnK3Context(const Graph& g, int n);
    const std::vector<std::vector<int>>& special_n() const { return special_n_; }
    const std::vector<std::vector<int>>& special_n1() const { return special_n1_; }
    bool cliques_ok() const { return cliques_ok_; }
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& clique_violations() const {
        return violations_;
    }
    // union of special sets forming a complete graph with a
    const std::vector<int>& star(int a) const;
    KnK3Report closure(const std::vector<int>& a) const;
    int n() const { return n_; }

private:
    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> n_cliques_, n1_cliques_;
    std::vector<std::vector<int>> special_n_, special_n1_;
    bool cliques_ok_ = true;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> violations_;
    mutable std::map<int, std::vector<int>> star_memo_;
};

KnK3Report knk3_closure(const Graph& g, const std::vector<int>& a, int n);

inline constexpr int omega_infinity = -1;

// Largest m such that g holds at least `threshold` pairwise
// internally-disjoint u-v paths of m edges (v = omega_infinity: paths
// from u disjoint apart from u). Adjacent endpoints count as m = 1.
int omega(const Graph& g, int u, int v, int threshold);

enum class ChainKind { chain, open_chain, neither };

struct ChainReport {
    std::vector<int> sequence;  // without the infinity tail
    bool open_ended = false;
    ChainKind kind = ChainKind::neither;
    int virtual_length = 0;
    std::vector<int> omega_values;  // consecutive pairs, tail included when open
};

// seq entries are vertices; open_ended appends the infinity tail.
// A chain needs at least 3 finite vertices, an open chain at least 2
// before the tail, every consecutive omega >= 1, and strict
// subadditivity of omega over gaps.
ChainReport chain_classify(const Graph& g, const std::vector<int>& seq, bool open_ended,
                           int threshold);

struct ErdosGallaiAudit {
    int longest_path = 0;  // edges
    int edge_count = 0;
    bool bound_ok = false;  // e <= n * longest_path / 2
};

ErdosGallaiAudit erdos_gallai_audit(const Graph& g);

struct ChainCoverReport {
    std::vector<int> cover;                   // A'
    std::vector<std::vector<int>> max_paths;  // one per input vertex
    std::vector<std::vector<int>> chains;     // greedy chain family
    bool bound_ok = false;   // |A' - A| < (k^3/4)|A|
    bool covers_ok = false;  // every escaping chain/open chain meets A' - A
};

// Requires g to omit the path with k edges.
ChainCoverReport chain_cover(const Graph& g, const std::vector<int>& a, int k);

}  // namespace acl_lab

#endif
