#ifndef ACL_LAB_BUILDER_HPP
#define ACL_LAB_BUILDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acl_lab/closure.hpp"
#include "acl_lab/graph.hpp"

namespace acl_lab {

struct BuildConfig {
    ConstraintSet constraints;
    int rounds = 2;
    int anchor_budget = 2;
    int extension_budget = 4;       // max pattern order including the anchor
    int vertex_cap = 300;
    // Growth allowance per round; spreading capacity across rounds keeps
    // one divergent pattern family from exhausting the cap before later
    // rounds pose their problems. < 0 means an even split of the cap.
    int round_quota = -1;
    // Within each round, capacity reserved for clique/doubled-edge
    // patterns, whose inserts never leave a triangle without a doubled
    // edge; other patterns stop earlier so late triangle creators cannot
    // starve their specializing follow-ups. < 0 means half the quota.
    int insert_reserve = -1;
    uint64_t seed = 0;              // recorded in the trace; results are order-independent
    std::optional<Graph> start;     // default K_1

    static BuildConfig defaults(ConstraintSet cs);
};

struct RealizedProblem {
    std::vector<int> anchor;
    std::string pattern_code;  // hex anchored canonical code
    std::vector<int> placed;   // fresh vertex ids
};

struct SkippedProblem {
    std::vector<int> anchor;
    std::string pattern_code;
    std::string reason;  // "amalgam-violates-constraints" or "cap"
};

struct RoundTrace {
    std::vector<RealizedProblem> realized;
    std::vector<SkippedProblem> skipped;  // violations in full, first few cap skips
    uint64_t cap_skips = 0;               // total problems blocked by the cap
    bool cap_hit = false;                 // insertions stopped; scanning still completed
};

struct ApproximantTrace {
    std::vector<RoundTrace> rounds;
};

// Extension pattern over an anchor occupying the leading vertices.
struct ExtensionPattern {
    Graph pattern;
    int anchor_size = 0;
};

// All constraint-free anchored extension patterns within the budgets, up
// to anchored isomorphism, ordered by (anchor size, order desc, edges
// desc, code).
std::vector<ExtensionPattern> extension_catalog(const ConstraintSet& cs, int anchor_budget,
                                                int extension_budget);

// One saturation round: every anchor within budget (over the growing
// graph) and every extension pattern over it is realized by a free
// amalgam when the result stays constraint-free, skipped otherwise.
// Once the vertex cap blocks insertion, remaining problems are recorded
// as cap skips while the scan still completes.
std::pair<Graph, RoundTrace> saturate_round(const Graph& g, const BuildConfig& cfg);

// Iterates saturate_round from the start graph. Deterministic for a
// fixed config; the result omits the constraints by construction.
std::pair<Graph, ApproximantTrace> build_approximant(const BuildConfig& cfg);

}  // namespace acl_lab

#endif
