#ifndef ACL_LAB_CLOSURE_HPP
#define ACL_LAB_CLOSURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acl_lab/graph.hpp"
#include "acl_lab/homlib.hpp"

namespace acl_lab {

// Ordered list of finite connected forbidden subgraphs, with the derived
// bound k = max order over the members.
struct ConstraintSet {
    std::vector<Graph> members;
    int k = 0;

    // Validates: nonempty, every member connected with at least one
    // vertex.
    static ConstraintSet from(std::vector<Graph> members);
};

bool omits(const Graph& g, const ConstraintSet& cs);

// b_0 = k, b_{n+1} = k + k^2 * b_n. Overflow raises std::overflow_error
// rather than wrapping.
uint64_t quantifier_bound(uint64_t k, int n);

// A pattern with a distinguished anchor subset.
struct AnchoredPattern {
    Graph pattern;
    std::vector<int> anchor;
};

struct PairFamily {
    std::string label;
    std::vector<AnchoredPattern> pairs;

    // Adds unless an anchored-isomorphic pair is already present.
    void add(AnchoredPattern p);
};

// Pairs ({endpoint}, P_len) for len = 1..max_len.
PairFamily path_basis(int max_len);

// Pairs ({a}, H) with H a connected proper weak subgraph of some member,
// a in H, and H - {a} connected and nonempty; deduplicated up to
// anchored isomorphism. Every member must be solid.
PairFamily solidity_basis(const ConstraintSet& cs);

// All pairs (A, H) with H a proper weak subgraph of some member and
// A a subset of H with |A| <= member order - 1, up to anchored
// isomorphism.
PairFamily proper_subgraph_basis(const ConstraintSet& cs);

// A placed weak occurrence: pattern vertex i sits on host vertex
// assignment[i], and the pattern's edges are present there.
struct Occurrence {
    Graph pattern;
    std::vector<int> assignment;
};

// Freeness at desk scale: gluing `copies` fresh copies of the pattern
// over the anchor onto g leaves every constraint absent. copies < 0
// means cs.k. Requires g itself to omit cs.
bool is_free(const Graph& g, const Graph& pattern, std::span<const int> pattern_anchor,
             std::span<const int> anchor_image, const ConstraintSet& cs, int copies = -1);

// All inclusion-minimal B inside the occurrence (disjoint from the
// anchor) such that the occurrence is free over anchor + B. Returned as
// sorted host-vertex sets in canonical order.
std::vector<std::vector<int>> minimal_free_sets(const Graph& g, const Occurrence& occ,
                                                std::span<const int> anchor_pattern_vertices,
                                                const ConstraintSet& cs, int copies = -1);

// Anchor image plus the union of all minimal free-making sets.
std::vector<int> cl_pair(const Graph& g, const Occurrence& occ,
                         std::span<const int> anchor_pattern_vertices, const ConstraintSet& cs,
                         int copies = -1);

struct ClosureStep {
    int round = 0;
    std::string pattern_code;  // hex canonical code of the matched pattern
    std::vector<int> anchor;   // anchor image in the host
    std::vector<int> added;    // vertices newly contributed by this step
};

struct ClosureReport {
    std::vector<int> input;
    std::vector<int> final_set;
    std::vector<ClosureStep> steps;
    bool fixed_point = false;
    bool budget_exhausted = false;
};

// Single pass: union over all weak occurrences of family patterns whose
// anchor lands inside x of the pair closure. With iterate, repeats to a
// fixed point or until the round budget (default |V(g)|) runs out.
// The host must omit cs.
ClosureReport cl_family(const Graph& g, const std::vector<int>& x, const PairFamily& fam,
                        const ConstraintSet& cs, bool iterate, int round_budget = -1);

// Witness that a set is not algebraically closed: a constraint C, a
// quotient of C, and a placement of the quotient in g such that C embeds
// back into the amalgam of |C| copies of the placed image over the set.
struct AclWitness {
    int constraint_index = -1;
    std::vector<std::vector<int>> partition;
    std::vector<int> image_assignment;
};

// Precomputed occurrence lists for bulk witness queries against one host.
class AclContext {
public:
    AclContext(const Graph& g, ConstraintSet cs);
    std::optional<AclWitness> witness(std::span<const int> a) const;
    const ConstraintSet& constraints() const { return cs_; }

private:
    struct Candidate {
        int constraint_index;
        std::vector<std::vector<int>> partition;
        Graph quotient;
        std::vector<std::vector<int>> placements;      // lexicographic
        std::vector<std::vector<int>> by_vertex;       // host vertex -> placement indices
    };
    const Graph& g_;
    ConstraintSet cs_;
    std::vector<Candidate> candidates_;
};

// Requires g to omit cs. None means no Lemma-5-style evidence against
// "a is algebraically closed in g".
std::optional<AclWitness> acl_witness(const Graph& g, std::span<const int> a,
                                      const ConstraintSet& cs);

enum class VerdictStatus { universal_exists_acl_trivial, inconclusive };

struct Verdict {
    VerdictStatus status = VerdictStatus::inconclusive;
    std::string reason;
    std::optional<HomClosureWitness> witness;
};

// Without hom_part: universal-exists-acl-trivial iff the set is closed
// under homomorphic image (every proper image of a member contains a
// member). With hom_part: checks closure of hom_part and upgrades to
// universal-exists only when the base set is itself closed; otherwise
// reports the conditional augmentation verdict.
Verdict homclosure_verdict(const ConstraintSet& cs,
                           const std::optional<ConstraintSet>& hom_part = std::nullopt);

// Closure tuned to the two-triangles-plus-path constraint: path-basis
// closure augmented with the triangle-plus-path clauses. Requires g to
// omit two_triangles_path(n). Iterates to a fixed point.
ClosureReport cl_star(const Graph& g, const std::vector<int>& x, int n);

}  // namespace acl_lab

#endif
