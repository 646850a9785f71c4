#include "acl_lab/closure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "acl_lab/caps.hpp"
#include "acl_lab/constructions.hpp"
#include "acl_lab/enumerate.hpp"

namespace acl_lab {

ConstraintSet ConstraintSet::from(std::vector<Graph> members) {
    if (members.empty()) throw std::invalid_argument("constraint set must be nonempty");
    int k = 0;
    for (const Graph& c : members) {
        if (c.order() == 0) throw std::invalid_argument("constraint must have at least one vertex");
        if (!is_connected(c)) throw std::invalid_argument("constraint must be connected");
        k = std::max(k, c.order());
    }
    return ConstraintSet{std::move(members), k};
}

bool omits(const Graph& g, const ConstraintSet& cs) {
    return omits(g, std::span<const Graph>(cs.members));
}

uint64_t quantifier_bound(uint64_t k, int n) {
    if (k < 1) throw std::invalid_argument("quantifier_bound needs k >= 1");
    if (n < 0) throw std::invalid_argument("quantifier_bound needs n >= 0");
    uint64_t b = k;
    uint64_t k2 = 0;
    if (__builtin_mul_overflow(k, k, &k2)) throw std::overflow_error("quantifier bound overflow");
    for (int i = 0; i < n; ++i) {
        uint64_t t = 0;
        if (__builtin_mul_overflow(k2, b, &t) || __builtin_add_overflow(t, k, &b))
            throw std::overflow_error("quantifier bound overflow");
    }
    return b;
}

void PairFamily::add(AnchoredPattern p) {
    std::string code = canonical_code_anchored(p.pattern, p.anchor);
    for (const auto& q : pairs)
        if (canonical_code_anchored(q.pattern, q.anchor) == code) return;
    pairs.push_back(std::move(p));
}

PairFamily path_basis(int max_len) {
    if (max_len < 1) throw std::invalid_argument("path basis needs max length >= 1");
    PairFamily fam;
    fam.label = "path-basis";
    for (int len = 1; len <= max_len; ++len) fam.pairs.push_back({path_graph(len), {0}});
    return fam;
}

namespace {

// connected proper weak subgraphs of c, up to isomorphism
std::vector<Graph> proper_weak_subgraphs(const Graph& c, bool connected_only) {
    std::vector<Graph> out;
    for (int n = 1; n <= c.order(); ++n)
        for_each_graph(n, [&](const Graph& h) {
            if (n == c.order() && h.edge_count() >= c.edge_count()) return;
            if (!embeds(h, c, EmbedMode::weak)) return;
            out.push_back(h);
        }, connected_only);
    return out;
}

}  // namespace

PairFamily solidity_basis(const ConstraintSet& cs) {
    for (const Graph& c : cs.members)
        if (!is_solid(c)) throw std::invalid_argument("solidity basis needs solid constraints");
    PairFamily fam;
    fam.label = "solidity-basis";
    for (const Graph& c : cs.members) {
        for (const Graph& h : proper_weak_subgraphs(c, true)) {
            if (h.order() < 2) continue;
            for (int a = 0; a < h.order(); ++a) {
                std::vector<int> rest;
                for (int v = 0; v < h.order(); ++v)
                    if (v != a) rest.push_back(v);
                if (!is_connected(h.induced(rest))) continue;
                fam.add({h, {a}});
            }
        }
    }
    return fam;
}

PairFamily proper_subgraph_basis(const ConstraintSet& cs) {
    PairFamily fam;
    fam.label = "proper-subgraph-basis";
    for (const Graph& c : cs.members) {
        int max_anchor = c.order() - 1;
        for (const Graph& h : proper_weak_subgraphs(c, false)) {
            std::vector<int> sel;
            std::function<void(int)> anchors = [&](int start) {
                if (static_cast<int>(sel.size()) <= max_anchor) fam.add({h, sel});
                if (static_cast<int>(sel.size()) == max_anchor) return;
                for (int v = start; v < h.order(); ++v) {
                    sel.push_back(v);
                    anchors(v + 1);
                    sel.pop_back();
                }
            };
            anchors(0);
        }
    }
    return fam;
}

bool is_free(const Graph& g, const Graph& pattern, std::span<const int> pattern_anchor,
             std::span<const int> anchor_image, const ConstraintSet& cs, int copies) {
    if (copies < 0) copies = cs.k;
    Graph amalgam = free_amalgam(g, anchor_image, pattern, pattern_anchor, copies);
    // g omits cs by precondition, so a violation must touch a fresh vertex
    std::vector<int> fresh;
    for (int v = g.order(); v < amalgam.order(); ++v) fresh.push_back(v);
    if (fresh.empty()) return true;
    for (const Graph& c : cs.members)
        if (embeds_touching(c, amalgam, fresh)) return false;
    return true;
}

std::vector<std::vector<int>> minimal_free_sets(const Graph& g, const Occurrence& occ,
                                                std::span<const int> anchor_pattern_vertices,
                                                const ConstraintSet& cs, int copies) {
    const Graph& h = occ.pattern;
    std::vector<char> in_anchor(h.order(), 0);
    for (int p : anchor_pattern_vertices) in_anchor[p] = 1;
    std::vector<int> rest;
    for (int p = 0; p < h.order(); ++p)
        if (!in_anchor[p]) rest.push_back(p);

    int r = static_cast<int>(rest.size());
    std::vector<uint32_t> masks;
    for (uint32_t m = 0; m < (uint32_t(1) << r); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<uint32_t> minimal_masks;
    for (uint32_t m : masks) {
        bool dominated = false;
        for (uint32_t mm : minimal_masks)
            if ((mm & m) == mm) { dominated = true; break; }
        if (dominated) continue;
        std::vector<int> pat_anchor(anchor_pattern_vertices.begin(), anchor_pattern_vertices.end());
        for (int i = 0; i < r; ++i)
            if ((m >> i) & 1) pat_anchor.push_back(rest[i]);
        std::vector<int> image;
        for (int p : pat_anchor) image.push_back(occ.assignment[p]);
        if (is_free(g, h, pat_anchor, image, cs, copies)) minimal_masks.push_back(m);
    }

    std::vector<std::vector<int>> out;
    for (uint32_t m : minimal_masks) {
        std::vector<int> b;
        for (int i = 0; i < r; ++i)
            if ((m >> i) & 1) b.push_back(occ.assignment[rest[i]]);
        std::sort(b.begin(), b.end());
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> cl_pair(const Graph& g, const Occurrence& occ,
                         std::span<const int> anchor_pattern_vertices, const ConstraintSet& cs,
                         int copies) {
    std::set<int> result;
    for (int p : anchor_pattern_vertices) result.insert(occ.assignment[p]);
    for (const auto& b : minimal_free_sets(g, occ, anchor_pattern_vertices, cs, copies))
        result.insert(b.begin(), b.end());
    return {result.begin(), result.end()};
}

namespace {

// one closure pass over x; returns contributions in canonical order
struct PassStep {
    std::string pattern_code;
    std::vector<int> anchor;
    std::vector<int> contributed;  // full cl(A;H) minus A
};

// placed edge set of an occurrence, sorted; distinguishes embeddings
// that cover the same vertices with different pattern edges
std::vector<std::pair<int, int>> placed_edges(const Graph& pattern, const std::vector<int>& asg) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : pattern.edges()) {
        int a = asg[u], b = asg[v];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

using OccKey = std::pair<std::vector<int>, std::vector<std::pair<int, int>>>;

std::vector<PassStep> closure_pass(const Graph& g, const std::set<int>& x, const PairFamily& fam,
                                   const ConstraintSet& cs) {
    std::vector<PassStep> steps;
    std::set<OccKey> seen;  // (sorted anchor image, placed edges)
    std::vector<int> xs(x.begin(), x.end());
    for (const AnchoredPattern& pair : fam.pairs) {
        if (xs.empty() && !pair.anchor.empty()) continue;
        std::string code = code_to_hex(canonical_code_anchored(pair.pattern, pair.anchor));
        EmbedOptions opts;
        if (!pair.anchor.empty()) {
            opts.allowed.assign(pair.pattern.order(), {});
            for (int p : pair.anchor) opts.allowed[p] = xs;
        }
        for (const EmbeddingMap& em : embeddings(pair.pattern, g, EmbedMode::weak, opts)) {
            std::vector<int> anchor_image;
            for (int p : pair.anchor) anchor_image.push_back(em.assignment[p]);
            std::sort(anchor_image.begin(), anchor_image.end());
            if (!seen.insert({anchor_image, placed_edges(pair.pattern, em.assignment)}).second)
                continue;
            Occurrence occ{pair.pattern, em.assignment};
            std::vector<int> closed = cl_pair(g, occ, pair.anchor, cs);
            std::vector<int> contributed;
            for (int v : closed)
                if (!std::binary_search(anchor_image.begin(), anchor_image.end(), v))
                    contributed.push_back(v);
            if (!contributed.empty()) steps.push_back({code, anchor_image, contributed});
        }
    }
    return steps;
}

ClosureReport run_closure(const Graph& g, const std::vector<int>& x, const ConstraintSet& cs,
                          bool iterate, int round_budget,
                          const std::function<std::vector<PassStep>(const std::set<int>&)>& pass) {
    ClosureReport report;
    report.input = x;
    std::sort(report.input.begin(), report.input.end());
    report.input.erase(std::unique(report.input.begin(), report.input.end()), report.input.end());
    for (int v : report.input)
        if (v < 0 || v >= g.order()) throw std::invalid_argument("closure input vertex out of range");

    std::set<int> current(report.input.begin(), report.input.end());
    if (round_budget < 0) round_budget = std::max(1, g.order());
    int round = 0;
    while (true) {
        ++round;
        std::vector<PassStep> steps = pass(current);
        bool grew = false;
        for (auto& s : steps) {
            std::vector<int> added;
            for (int v : s.contributed)
                if (current.insert(v).second) added.push_back(v);
            if (!added.empty()) {
                report.steps.push_back({round, s.pattern_code, s.anchor, added});
                grew = true;
            }
        }
        if (!grew) {
            report.fixed_point = true;
            break;
        }
        if (!iterate) break;
        if (round >= round_budget) {
            // one more probe to see whether we stopped at a fixed point
            std::vector<PassStep> probe = pass(current);
            bool more = false;
            for (auto& s : probe)
                for (int v : s.contributed)
                    if (!current.count(v)) more = true;
            report.fixed_point = !more;
            report.budget_exhausted = more;
            break;
        }
    }
    report.final_set.assign(current.begin(), current.end());
    return report;
}

}  // namespace

ClosureReport cl_family(const Graph& g, const std::vector<int>& x, const PairFamily& fam,
                        const ConstraintSet& cs, bool iterate, int round_budget) {
    if (!omits(g, cs)) throw std::invalid_argument("host violates the constraint set");
    return run_closure(g, x, cs, iterate, round_budget,
                       [&](const std::set<int>& cur) { return closure_pass(g, cur, fam, cs); });
}

AclContext::AclContext(const Graph& g, ConstraintSet cs) : g_(g), cs_(std::move(cs)) {
    if (!omits(g_, cs_)) throw std::invalid_argument("host violates the constraint set");
    for (size_t ci = 0; ci < cs_.members.size(); ++ci) {
        const Graph& c = cs_.members[ci];
        std::map<std::string, std::pair<std::vector<std::vector<int>>, Graph>> quotients;
        for_each_independent_partition(c, [&](const std::vector<std::vector<int>>& classes) {
            Graph q = quotient_graph({&c, classes});
            std::string code = canonical_code(q);
            quotients.try_emplace(std::move(code), classes, std::move(q));
            return true;
        });
        for (auto& [code, pq] : quotients) {
            Candidate cand;
            cand.constraint_index = static_cast<int>(ci);
            cand.partition = pq.first;
            cand.quotient = pq.second;
            for (const EmbeddingMap& em : embeddings(cand.quotient, g_, EmbedMode::weak))
                cand.placements.push_back(em.assignment);
            if (cand.placements.empty()) continue;
            cand.by_vertex.assign(g_.order(), {});
            for (size_t i = 0; i < cand.placements.size(); ++i)
                for (int h : cand.placements[i]) cand.by_vertex[h].push_back(static_cast<int>(i));
            candidates_.push_back(std::move(cand));
        }
    }
}

std::optional<AclWitness> AclContext::witness(std::span<const int> a) const {
    std::vector<int> aset(a.begin(), a.end());
    std::sort(aset.begin(), aset.end());
    aset.erase(std::unique(aset.begin(), aset.end()), aset.end());
    Graph base = g_.induced(aset);
    auto base_pos = [&](int v) {
        return static_cast<int>(std::lower_bound(aset.begin(), aset.end(), v) - aset.begin());
    };
    std::set<std::pair<const void*, std::vector<std::pair<int, int>>>> tested;
    for (const Candidate& cand : candidates_) {
        const Graph& c = cs_.members[cand.constraint_index];
        // placements not touching the set glue into disjoint copies and
        // cannot recover a connected constraint
        std::vector<int> touching;
        for (int v : aset)
            if (v < static_cast<int>(cand.by_vertex.size()))
                touching.insert(touching.end(), cand.by_vertex[v].begin(), cand.by_vertex[v].end());
        std::sort(touching.begin(), touching.end());
        touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
        for (int pi : touching) {
            const auto& placement = cand.placements[pi];
            std::vector<std::pair<int, int>> anchored;  // (quotient vertex, host vertex)
            for (int q = 0; q < cand.quotient.order(); ++q) {
                int h = placement[q];
                if (std::binary_search(aset.begin(), aset.end(), h)) anchored.push_back({q, h});
            }
            if (!tested.insert({&cand, anchored}).second) continue;
            std::vector<int> pat_anchor, base_anchor;
            for (auto [q, h] : anchored) {
                pat_anchor.push_back(q);
                base_anchor.push_back(base_pos(h));
            }
            Graph amalgam = free_amalgam(base, base_anchor, cand.quotient, pat_anchor, c.order());
            if (embeds(c, amalgam, EmbedMode::weak))
                return AclWitness{cand.constraint_index, cand.partition, placement};
        }
    }
    return std::nullopt;
}

std::optional<AclWitness> acl_witness(const Graph& g, std::span<const int> a,
                                      const ConstraintSet& cs) {
    AclContext ctx(g, cs);
    return ctx.witness(a);
}

Verdict homclosure_verdict(const ConstraintSet& cs, const std::optional<ConstraintSet>& hom_part) {
    if (!hom_part) {
        auto [closed, witness] = is_hom_closed(std::span<const Graph>(cs.members));
        if (closed)
            return {VerdictStatus::universal_exists_acl_trivial,
                    "constraints closed under homomorphic image; closure is trivial", std::nullopt};
        return {VerdictStatus::inconclusive, "proper homomorphic image escapes the set",
                std::move(witness)};
    }
    auto [ext_closed, ext_witness] = is_hom_closed(std::span<const Graph>(hom_part->members));
    if (!ext_closed)
        return {VerdictStatus::inconclusive, "extension set not closed under homomorphic image",
                std::move(ext_witness)};
    auto [base_closed, base_witness] = is_hom_closed(std::span<const Graph>(cs.members));
    if (base_closed)
        return {VerdictStatus::universal_exists_acl_trivial,
                "base and extension both closed under homomorphic image", std::nullopt};
    return {VerdictStatus::inconclusive,
            "conditional: extension closed under homomorphic image; the combined class is "
            "categorical whenever the base class is",
            std::move(base_witness)};
}

namespace {

// vertices sitting non-centrally on a pair of triangles sharing exactly
// one vertex
std::vector<char> noncentral_double_triangle(const Graph& g) {
    std::vector<char> out(g.order(), 0);
    auto tris = triangles(g);
    for (size_t i = 0; i < tris.size(); ++i)
        for (size_t j = i + 1; j < tris.size(); ++j) {
            int shared = -1, count = 0;
            for (int u : tris[i])
                for (int v : tris[j])
                    if (u == v) { shared = u; ++count; }
            if (count != 1) continue;
            for (int u : tris[i])
                if (u != shared) out[u] = 1;
            for (int v : tris[j])
                if (v != shared) out[v] = 1;
        }
    return out;
}

// vertices lying non-centrally on a copy of two shared-vertex triangles
// with a path of length <= n attached at a non-common vertex
std::vector<char> noncentral_ttp(const Graph& g, int n) {
    std::vector<char> out(g.order(), 0);
    for (int len = 0; len <= n; ++len) {
        Graph pattern = two_triangles_path(len);
        for (const EmbeddingMap& em : embeddings(pattern, g, EmbedMode::weak)) {
            for (int p = 0; p < pattern.order(); ++p)
                if (p != 2) out[em.assignment[p]] = 1;  // 2 is the common vertex
        }
    }
    return out;
}

}  // namespace

ClosureReport cl_star(const Graph& g, const std::vector<int>& x, int n) {
    ConstraintSet cs = ConstraintSet::from({two_triangles_path(n)});
    if (!omits(g, cs)) throw std::invalid_argument("host violates two_triangles_path constraint");
    PairFamily paths = path_basis(n);

    std::vector<char> on_tt = noncentral_double_triangle(g);
    std::vector<char> on_ttp = noncentral_ttp(g, n);
    auto tris = triangles(g);
    auto cotriangular = [&](int a, int b) {
        for (const auto& t : tris) {
            bool ha = false, hb = false;
            for (int v : t) {
                ha |= v == a;
                hb |= v == b;
            }
            if (ha && hb) return true;
        }
        return false;
    };

    // triangle with a path of length 0..n hanging off corner 2; the
    // anchor is a corner away from the path
    std::vector<Graph> tp_patterns;
    for (int len = 0; len <= n; ++len) {
        Graph tp(3 + len);
        tp.add_edge(0, 1);
        tp.add_edge(0, 2);
        tp.add_edge(1, 2);
        int prev = 2;
        for (int i = 0; i < len; ++i) {
            tp.add_edge(prev, 3 + i);
            prev = 3 + i;
        }
        tp_patterns.push_back(std::move(tp));
    }

    auto pass = [&](const std::set<int>& cur) {
        std::vector<PassStep> steps = closure_pass(g, cur, paths, cs);
        std::vector<int> xs(cur.begin(), cur.end());
        if (xs.empty()) return steps;
        std::set<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> seen;
        for (const Graph& tp : tp_patterns) {
            std::string code = code_to_hex(canonical_code_anchored(tp, std::vector<int>{0}));
            EmbedOptions opts;
            opts.allowed.assign(tp.order(), {});
            opts.allowed[0] = xs;  // corner 1 reached via the symmetric embedding
            for (const EmbeddingMap& em : embeddings(tp, g, EmbedMode::weak, opts)) {
                int a = em.assignment[0];
                if (!seen.insert({{a}, placed_edges(tp, em.assignment)}).second) continue;
                Occurrence occ{tp, em.assignment};
                std::vector<int> anchor_vs{0};
                std::vector<int> closed = cl_pair(g, occ, anchor_vs, cs);
                std::vector<int> contributed;
                for (int b : closed) {
                    if (b == a) continue;
                    bool clause1 = on_tt[a];
                    bool clause2 = cotriangular(a, b) || on_ttp[b];
                    if (clause1 || clause2) contributed.push_back(b);
                }
                if (!contributed.empty()) steps.push_back({code, {a}, contributed});
            }
        }
        return steps;
    };

    return run_closure(g, x, cs, true, -1, pass);
}

}  // namespace acl_lab
