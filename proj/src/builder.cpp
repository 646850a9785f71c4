#include "acl_lab/builder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "acl_lab/enumerate.hpp"

namespace acl_lab {

BuildConfig BuildConfig::defaults(ConstraintSet cs) {
    BuildConfig cfg;
    cfg.constraints = std::move(cs);
    return cfg;
}

namespace {

bool is_complete(const Graph& g) {
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

// Round schedule rank. Triangle-carrying patterns run first (cliques,
// then sparse-to-dense so the two-triangles-on-an-edge specializer comes
// after every other triangle creator), triangle-free patterns last. The
// vertex cap then starves only the tail, which cannot spoil the triangle
// structure of the result.
struct RankedPattern {
    ExtensionPattern ext;
    std::string code;
    bool has_triangle = false;
    bool complete = false;
    bool doubled = false;  // every pattern triangle has an edge in >= 2 pattern triangles
};

bool all_triangles_doubled(const Graph& g) {
    auto tris = triangles(g);
    if (tris.empty()) return false;
    std::map<std::pair<int, int>, int> count;
    for (const auto& t : tris) {
        count[{t[0], t[1]}]++;
        count[{t[0], t[2]}]++;
        count[{t[1], t[2]}]++;
    }
    for (const auto& t : tris) {
        bool ok = count[{t[0], t[1]}] >= 2 || count[{t[0], t[2]}] >= 2 || count[{t[1], t[2]}] >= 2;
        if (!ok) return false;
    }
    return true;
}

bool rank_less(const RankedPattern& a, const RankedPattern& b) {
    if (a.has_triangle != b.has_triangle) return a.has_triangle;
    if (a.has_triangle) {
        if (a.complete != b.complete) return a.complete;
        if (a.complete) {
            if (a.ext.pattern.order() != b.ext.pattern.order())
                return a.ext.pattern.order() > b.ext.pattern.order();
        } else {
            if (a.ext.pattern.edge_count() != b.ext.pattern.edge_count())
                return a.ext.pattern.edge_count() < b.ext.pattern.edge_count();
            if (a.ext.pattern.order() != b.ext.pattern.order())
                return a.ext.pattern.order() < b.ext.pattern.order();
        }
    } else {
        if (a.ext.pattern.order() != b.ext.pattern.order())
            return a.ext.pattern.order() > b.ext.pattern.order();
        if (a.ext.pattern.edge_count() != b.ext.pattern.edge_count())
            return a.ext.pattern.edge_count() > b.ext.pattern.edge_count();
    }
    // wide anchors first: pair problems must not wait behind the
    // divergent single-vertex cascades
    if (a.ext.anchor_size != b.ext.anchor_size) return a.ext.anchor_size > b.ext.anchor_size;
    return a.code < b.code;
}

std::vector<RankedPattern> ranked_catalog(const ConstraintSet& cs, int anchor_budget,
                                          int extension_budget) {
    std::vector<RankedPattern> ranked;
    for (const ExtensionPattern& ext : extension_catalog(cs, anchor_budget, extension_budget)) {
        RankedPattern rp;
        std::vector<int> anchor(ext.anchor_size);
        for (int i = 0; i < ext.anchor_size; ++i) anchor[i] = i;
        rp.code = code_to_hex(canonical_code_anchored(ext.pattern, anchor));
        rp.has_triangle = !triangles(ext.pattern).empty();
        rp.complete = is_complete(ext.pattern);
        rp.doubled = rp.has_triangle && all_triangles_doubled(ext.pattern);
        rp.ext = ext;
        ranked.push_back(std::move(rp));
    }
    std::sort(ranked.begin(), ranked.end(), rank_less);
    return ranked;
}

// next tuple of the given size in lexicographic order over 0..n-1
bool next_tuple(std::vector<int>& t, int n) {
    int s = static_cast<int>(t.size());
    for (int i = s - 1; i >= 0; --i) {
        if (t[i] < n - (s - i)) {
            ++t[i];
            for (int j = i + 1; j < s; ++j) t[j] = t[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool anchor_structure_matches(const Graph& g, const std::vector<int>& anchor, const Graph& pattern,
                              const std::vector<int>& pat_anchor) {
    for (size_t i = 0; i < anchor.size(); ++i)
        for (size_t j = i + 1; j < anchor.size(); ++j)
            if (g.has_edge(anchor[i], anchor[j]) != pattern.has_edge(pat_anchor[i], pat_anchor[j]))
                return false;
    return true;
}

}  // namespace

std::vector<ExtensionPattern> extension_catalog(const ConstraintSet& cs, int anchor_budget,
                                                int extension_budget) {
    if (anchor_budget < 0 || extension_budget < 1)
        throw std::invalid_argument("builder budgets must be positive");
    std::vector<ExtensionPattern> catalog;
    for (int s = 0; s <= anchor_budget; ++s) {
        std::map<std::string, ExtensionPattern> seen;
        for (int n = std::max(s + 1, 1); n <= extension_budget; ++n) {
            for_each_graph(n, [&](const Graph& g) {
                if (!omits(g, cs)) return;
                std::vector<int> pick;
                std::function<void(int)> choose = [&](int start) {
                    if (static_cast<int>(pick.size()) == s) {
                        std::vector<int> relabel = pick;
                        for (int v = 0; v < n; ++v)
                            if (std::find(pick.begin(), pick.end(), v) == pick.end())
                                relabel.push_back(v);
                        std::vector<int> pos(n);
                        for (int i = 0; i < n; ++i) pos[relabel[i]] = i;
                        Graph p(n);
                        for (auto [u, v] : g.edges()) p.add_edge(pos[u], pos[v]);
                        std::vector<int> anchor(s);
                        for (int i = 0; i < s; ++i) anchor[i] = i;
                        std::string code = canonical_code_anchored(p, anchor);
                        seen.try_emplace(std::move(code), ExtensionPattern{std::move(p), s});
                        return;
                    }
                    for (int v = start; v < n; ++v) {
                        pick.push_back(v);
                        choose(v + 1);
                        pick.pop_back();
                    }
                };
                choose(0);
            });
        }
        for (auto& [code, p] : seen) catalog.push_back(std::move(p));
    }
    return catalog;
}

std::pair<Graph, RoundTrace> saturate_round(const Graph& start, const BuildConfig& cfg) {
    const ConstraintSet& cs = cfg.constraints;
    if (!omits(start, cs)) throw std::invalid_argument("start graph violates the constraints");
    if (start.order() > cfg.vertex_cap)
        throw std::invalid_argument("start graph larger than the vertex cap");

    std::vector<RankedPattern> catalog =
        ranked_catalog(cs, cfg.anchor_budget, cfg.extension_budget);

    Graph g = start;
    RoundTrace trace;
    bool any_doubled = false;
    for (const RankedPattern& rp : catalog) any_doubled = any_doubled || rp.doubled;
    int quota = cfg.round_quota >= 0 ? cfg.round_quota
                                     : std::max(1, cfg.vertex_cap / std::max(1, cfg.rounds));
    int hard_cap = std::min(cfg.vertex_cap, start.order() + quota);
    int reserve = cfg.insert_reserve >= 0 ? cfg.insert_reserve : quota / 2;
    if (!any_doubled) reserve = 0;  // nothing to reserve capacity for
    int soft_cap = std::max(start.order(), hard_cap - reserve);

    // pattern-major sweep; anchors walk the graph as it grows, so
    // problems raised by fresh vertices are handled in the same pass.
    // Once the cap blocks insertion the sweep keeps scanning and records
    // cap skips, so every anchor still gets its realized/blocked verdict.
    for (const RankedPattern& rp : catalog) {
        const Graph& pat = rp.ext.pattern;
        int s = rp.ext.anchor_size;
        if (g.order() < s) continue;
        std::vector<int> pat_anchor(s);
        for (int i = 0; i < s; ++i) pat_anchor[i] = i;
        int limit = rp.doubled ? hard_cap : soft_cap;

        std::vector<int> anchor(s);
        for (int i = 0; i < s; ++i) anchor[i] = i;
        bool more = true;
        while (more) {
            std::vector<int> perm = anchor;
            do {
                if (!anchor_structure_matches(g, perm, pat, pat_anchor)) continue;
                EmbedOptions opts;
                for (int i = 0; i < s; ++i) opts.partial.emplace_back(i, perm[i]);
                if (embeds(pat, g, EmbedMode::induced, opts)) continue;  // realized

                int fresh_count = pat.order() - s;
                if (g.order() + fresh_count > limit) {
                    if (trace.cap_skips < 20)
                        trace.skipped.push_back({perm, rp.code, "cap"});
                    ++trace.cap_skips;
                    trace.cap_hit = true;
                    continue;
                }
                Graph amalgam = free_amalgam(g, perm, pat, pat_anchor, 1);
                std::vector<int> placed;
                for (int v = g.order(); v < amalgam.order(); ++v) placed.push_back(v);
                bool violates = false;
                for (const Graph& c : cs.members)
                    if (embeds_touching(c, amalgam, placed)) { violates = true; break; }
                if (violates) {
                    trace.skipped.push_back({perm, rp.code, "amalgam-violates-constraints"});
                } else {
                    g = std::move(amalgam);
                    trace.realized.push_back({perm, rp.code, placed});
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            more = s > 0 && next_tuple(anchor, g.order());
        }
    }
    return {g, trace};
}

std::pair<Graph, ApproximantTrace> build_approximant(const BuildConfig& cfg) {
    Graph g = cfg.start.value_or(complete_graph(1));
    ApproximantTrace trace;
    for (int r = 0; r < cfg.rounds; ++r) {
        auto [next, round_trace] = saturate_round(g, cfg);
        bool grew = next.order() > g.order();
        g = std::move(next);
        trace.rounds.push_back(std::move(round_trace));
        if (!grew && r > 0) break;  // fixed point; later rounds repeat verbatim
    }
    return {g, trace};
}

}  // namespace acl_lab
