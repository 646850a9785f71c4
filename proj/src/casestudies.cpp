#include "acl_lab/casestudies.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "acl_lab/constructions.hpp"

namespace acl_lab {

std::vector<std::pair<int, int>> special_edges(const Graph& g) {
    std::map<std::pair<int, int>, int> count;
    for (const auto& t : triangles(g)) {
        count[{t[0], t[1]}]++;
        count[{t[0], t[2]}]++;
        count[{t[1], t[2]}]++;
    }
    std::vector<std::pair<int, int>> out;
    for (auto& [e, c] : count)
        if (c >= 2) out.push_back(e);
    return out;
}

BowtieContext::BowtieContext(const Graph& g) : g_(g) {
    if (!omits(g, bowtie())) throw std::invalid_argument("host contains a bow-tie");
    tris_ = triangles(g);
    for (auto& e : special_edges(g)) special_.insert(e);
    tri_at_.assign(g.order(), {});
    for (size_t i = 0; i < tris_.size(); ++i)
        for (int v : tris_[i]) tri_at_[v].push_back(static_cast<int>(i));

    claim1_ = true;
    for (const auto& t : tris_) {
        bool has_special = special_.count({t[0], t[1]}) || special_.count({t[0], t[2]}) ||
                           special_.count({t[1], t[2]});
        if (!has_special) { claim1_ = false; break; }
    }

    claim2_ = true;
    for (int v = 0; v < g.order() && claim2_; ++v)
        for (int ti : tri_at_[v]) {
            const auto& t = tris_[ti];
            bool on_special = false;
            for (int u : t) {
                if (u == v) continue;
                if (special_.count({std::min(u, v), std::max(u, v)})) on_special = true;
            }
            if (!on_special && tri_at_[v].size() != 1) { claim2_ = false; break; }
        }

    claim3_ = true;
    for (int v = 0; v < g.order() && claim3_; ++v) {
        int special_at_v = 0;
        for (auto& e : special_)
            if (e.first == v || e.second == v) ++special_at_v;
        if (special_at_v < 2) continue;
        std::set<int> hull{v};
        for (int ti : tri_at_[v])
            for (int u : tris_[ti]) hull.insert(u);
        if (hull.size() > 4) { claim3_ = false; break; }
        std::vector<int> hv(hull.begin(), hull.end());
        bool clique = true;
        for (size_t i = 0; i < hv.size() && clique; ++i)
            for (size_t j = i + 1; j < hv.size(); ++j)
                if (!g_.has_edge(hv[i], hv[j])) { clique = false; break; }
        if (!clique) { claim3_ = false; break; }
        if (hull.size() < 4) {
            bool extended = false;
            for (int w = 0; w < g_.order() && !extended; ++w) {
                if (hull.count(w)) continue;
                if (g_.adjacent_to_all(w, hv)) extended = true;
            }
            if (!extended) { claim3_ = false; break; }
        }
    }
}

std::vector<int> BowtieContext::star_step(const std::vector<int>& a) const {
    std::set<int> result(a.begin(), a.end());
    std::set<int> tri_ids;
    for (int v : a) {
        if (v < 0 || v >= g_.order()) throw std::invalid_argument("vertex out of range");
        tri_ids.insert(tri_at_[v].begin(), tri_at_[v].end());
    }
    for (int ti : tri_ids) {
        const auto& t = tris_[ti];
        std::pair<int, int> es[3] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
        for (auto& e : es)
            if (special_.count(e)) {
                result.insert(e.first);
                result.insert(e.second);
            }
    }
    return {result.begin(), result.end()};
}

BowtieReport BowtieContext::closure(const std::vector<int>& a) const {
    BowtieReport rep;
    rep.input = a;
    std::sort(rep.input.begin(), rep.input.end());
    rep.input.erase(std::unique(rep.input.begin(), rep.input.end()), rep.input.end());
    rep.a_star = star_step(rep.input);
    rep.a_star_stable = star_step(rep.a_star) == rep.a_star;
    rep.bound_ok = rep.a_star.size() <= 4 * rep.input.size();
    rep.claim1 = claim1_;
    rep.claim2 = claim2_;
    rep.claim3 = claim3_;
    return rep;
}

BowtieReport bowtie_closure(const Graph& g, const std::vector<int>& a) {
    return BowtieContext(g).closure(a);
}

namespace {

void list_cliques(const Graph& g, int size, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> go = [&](int start) {
        if (static_cast<int>(cur.size()) == size) { out.push_back(cur); return; }
        for (int v = start; v < g.order(); ++v) {
            if (!g.adjacent_to_all(v, cur)) continue;
            cur.push_back(v);
            go(v + 1);
            cur.pop_back();
        }
    };
    go(0);
}

}  // namespace

KnK3Context::KnK3Context(const Graph& g, int n) : g_(g), n_(n) {
    if (n < 3) throw std::invalid_argument("analysis needs n >= 3");
    if (!omits(g, complete_triangle(n)))
        throw std::invalid_argument("host contains the complete-plus-triangle constraint");
    list_cliques(g, n, n_cliques_);
    list_cliques(g, n - 1, n1_cliques_);

    std::vector<char> touched(g.order(), 0);
    for (const auto& A : n_cliques_) {
        bool overlapped = false;
        for (const auto& B : n_cliques_) {
            if (B == A) continue;
            for (int v : B)
                if (std::binary_search(A.begin(), A.end(), v)) { overlapped = true; break; }
            if (overlapped) break;
        }
        if (!overlapped) special_n_.push_back(A);
    }
    for (const auto& B : n1_cliques_) {
        int common = 0;
        for (int w = 0; w < g.order(); ++w) {
            if (std::binary_search(B.begin(), B.end(), w)) continue;
            if (g.adjacent_to_all(w, B)) ++common;
            if (common >= 2) break;
        }
        if (common >= 2) special_n1_.push_back(B);
    }

    for (size_t i = 0; i < n_cliques_.size(); ++i)
        for (size_t j = i + 1; j < n_cliques_.size(); ++j) {
            int inter = 0;
            for (int v : n_cliques_[j])
                if (std::binary_search(n_cliques_[i].begin(), n_cliques_[i].end(), v)) ++inter;
            if (inter != 0 && inter != n - 1) {
                cliques_ok_ = false;
                violations_.push_back({n_cliques_[i], n_cliques_[j]});
            }
        }
}

const std::vector<int>& KnK3Context::star(int a) const {
    auto it = star_memo_.find(a);
    if (it != star_memo_.end()) return it->second;
    std::set<int> star;
    auto complete_with_a = [&](const std::vector<int>& B) {
        for (int v : B) {
            if (v == a) continue;
            if (!g_.has_edge(a, v)) return false;
        }
        return true;
    };
    for (const auto& B : special_n_)
        if (complete_with_a(B)) star.insert(B.begin(), B.end());
    for (const auto& B : special_n1_)
        if (complete_with_a(B)) star.insert(B.begin(), B.end());
    return star_memo_.emplace(a, std::vector<int>(star.begin(), star.end())).first->second;
}

KnK3Report KnK3Context::closure(const std::vector<int>& a) const {
    KnK3Report rep;
    rep.n = n_;
    std::vector<int> input = a;
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());

    rep.closed = true;
    for (int v : input) {
        const auto& st = star(v);
        rep.a_star.push_back({v, st});
        for (int u : st)
            if (!std::binary_search(input.begin(), input.end(), u)) rep.closed = false;
    }

    std::set<int> closure(input.begin(), input.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> snapshot(closure.begin(), closure.end());
        for (int v : snapshot)
            for (int u : star(v))
                if (closure.insert(u).second) grew = true;
    }
    rep.closure.assign(closure.begin(), closure.end());
    rep.bound_ok = rep.closure.size() <= static_cast<size_t>(n_ + 1) * input.size();
    return rep;
}

KnK3Report knk3_closure(const Graph& g, const std::vector<int>& a, int n) {
    return KnK3Context(g, n).closure(a);
}

namespace {

// search for `need` pairwise internally-disjoint u-v paths of exactly m
// edges; banned vertices cannot serve as interior points
bool disjoint_paths(const Graph& g, int u, int v, int m, int need, std::vector<char>& banned) {
    if (need == 0) return true;
    std::vector<int> path{u};
    std::vector<char> used(g.order(), 0);
    used[u] = 1;
    std::function<bool(int, int)> extend = [&](int at, int left) -> bool {
        if (left == 0) {
            for (size_t i = 1; i + 1 < path.size(); ++i) banned[path[i]] = 1;
            bool ok = disjoint_paths(g, u, v, m, need - 1, banned);
            for (size_t i = 1; i + 1 < path.size(); ++i) banned[path[i]] = 0;
            return ok;
        }
        for (int w : g.neighbors(at)) {
            if (used[w]) continue;
            bool interior = left > 1;
            if (interior && (banned[w] || w == v)) continue;
            if (!interior && w != v) continue;
            used[w] = 1;
            path.push_back(w);
            bool ok = extend(w, left - 1);
            path.pop_back();
            used[w] = 0;
            if (ok) return true;
        }
        return false;
    };
    return extend(u, m);
}

// paths from u of exactly m edges, pairwise disjoint apart from u
bool disjoint_rays(const Graph& g, int u, int m, int need, std::vector<char>& banned) {
    if (need == 0) return true;
    std::vector<int> path{u};
    std::vector<char> used(g.order(), 0);
    used[u] = 1;
    std::function<bool(int, int)> extend = [&](int at, int left) -> bool {
        if (left == 0) {
            for (size_t i = 1; i < path.size(); ++i) banned[path[i]] = 1;
            bool ok = disjoint_rays(g, u, m, need - 1, banned);
            for (size_t i = 1; i < path.size(); ++i) banned[path[i]] = 0;
            return ok;
        }
        for (int w : g.neighbors(at)) {
            if (used[w] || banned[w]) continue;
            used[w] = 1;
            path.push_back(w);
            bool ok = extend(w, left - 1);
            path.pop_back();
            used[w] = 0;
            if (ok) return true;
        }
        return false;
    };
    return extend(u, m);
}

}  // namespace

int omega(const Graph& g, int u, int v, int threshold) {
    if (threshold < 1) throw std::invalid_argument("omega threshold must be >= 1");
    if (u < 0 || u >= g.order()) throw std::invalid_argument("omega vertex out of range");
    if (v != omega_infinity && (v < 0 || v >= g.order() || v == u))
        throw std::invalid_argument("omega endpoints must be distinct vertices");
    int best = 0;
    if (v != omega_infinity && g.has_edge(u, v)) best = 1;  // degenerate adjacency case
    for (int m = g.order() - 1; m > best; --m) {
        std::vector<char> banned(g.order(), 0);
        bool ok = v == omega_infinity ? disjoint_rays(g, u, m, threshold, banned)
                                      : disjoint_paths(g, u, v, m, threshold, banned);
        if (ok) { best = m; break; }
    }
    return best;
}

ChainReport chain_classify(const Graph& g, const std::vector<int>& seq, bool open_ended,
                           int threshold) {
    size_t min_entries = open_ended ? 1 : 2;
    if (seq.size() < min_entries) throw std::invalid_argument("sequence too short");
    ChainReport rep;
    rep.sequence = seq;
    rep.open_ended = open_ended;

    int l = static_cast<int>(seq.size()) - 1;  // index of the last finite vertex
    auto om = [&](int i, int j) {  // j == l+1 stands for the infinity tail
        if (j == l + 1) return omega(g, seq[i], omega_infinity, threshold);
        return omega(g, seq[i], seq[j], threshold);
    };

    int last = open_ended ? l + 1 : l;
    for (int i = 0; i < last; ++i) rep.omega_values.push_back(om(i, i + 1));
    for (int x : rep.omega_values) rep.virtual_length += x;

    bool formal_ok = true;
    for (int x : rep.omega_values)
        if (x < 1) formal_ok = false;
    for (int i = 0; i + 2 <= last && formal_ok; ++i)
        for (int j = i + 2; j <= last; ++j) {
            int sum = 0;
            for (int r = i; r < j; ++r) sum += rep.omega_values[r];
            if (om(i, j) >= sum) { formal_ok = false; break; }
        }

    if (open_ended)
        rep.kind = (l >= 1 && formal_ok) ? ChainKind::open_chain : ChainKind::neither;
    else
        rep.kind = (l >= 2 && formal_ok) ? ChainKind::chain : ChainKind::neither;
    return rep;
}

ErdosGallaiAudit erdos_gallai_audit(const Graph& g) {
    ErdosGallaiAudit audit;
    audit.longest_path = longest_path_edges(g);
    audit.edge_count = g.edge_count();
    audit.bound_ok = 2 * audit.edge_count <= g.order() * audit.longest_path;
    return audit;
}

namespace {

// longest simple path starting at a fixed vertex, first found in
// canonical DFS order
std::vector<int> max_path_from(const Graph& g, int start) {
    std::vector<int> best{start}, cur{start};
    std::vector<char> used(g.order(), 0);
    used[start] = 1;
    std::function<void(int)> go = [&](int at) {
        if (cur.size() > best.size()) best = cur;
        for (int w : g.neighbors(at)) {
            if (used[w]) continue;
            used[w] = 1;
            cur.push_back(w);
            go(w);
            cur.pop_back();
            used[w] = 0;
        }
    };
    go(start);
    return best;
}

// memoized omega values over one host
struct OmegaTable {
    const Graph& g;
    int threshold;
    mutable std::map<std::pair<int, int>, int> pair_memo;
    mutable std::map<int, int> inf_memo;

    int operator()(int u, int v) const {
        if (v == omega_infinity) {
            auto it = inf_memo.find(u);
            if (it == inf_memo.end()) it = inf_memo.emplace(u, omega(g, u, v, threshold)).first;
            return it->second;
        }
        auto key = std::minmax(u, v);
        auto it = pair_memo.find(key);
        if (it == pair_memo.end())
            it = pair_memo.emplace(key, omega(g, u, v, threshold)).first;
        return it->second;
    }
};

bool chain_conditions(const OmegaTable& om, const std::vector<int>& seq, bool open_ended) {
    int l = static_cast<int>(seq.size()) - 1;
    if (open_ended ? l < 1 : l < 2) return false;
    int last = open_ended ? l + 1 : l;
    std::vector<int> vals;
    for (int i = 0; i < last; ++i) {
        int x = om(seq[i], i + 1 == l + 1 ? omega_infinity : seq[i + 1]);
        if (x < 1) return false;
        vals.push_back(x);
    }
    for (int i = 0; i + 2 <= last; ++i)
        for (int j = i + 2; j <= last; ++j) {
            int sum = 0;
            for (int r = i; r < j; ++r) sum += vals[r];
            int o = om(seq[i], j == l + 1 ? omega_infinity : seq[j]);
            if (o >= sum) return false;
        }
    return true;
}

}  // namespace

ChainCoverReport chain_cover(const Graph& g, const std::vector<int>& a, int k) {
    ConstraintSet cs = ConstraintSet::from({path_graph(k)});
    if (!omits(g, cs)) throw std::invalid_argument("host contains the forbidden path");
    OmegaTable om{g, cs.k};

    std::vector<int> input = a;
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());
    auto is_input = [&](int v) { return std::binary_search(input.begin(), input.end(), v); };

    ChainCoverReport rep;
    std::set<int> cover(input.begin(), input.end());
    std::set<int> occupied;

    for (int v : input) {
        auto p = max_path_from(g, v);
        rep.max_paths.push_back(p);
        cover.insert(p.begin(), p.end());
        occupied.insert(p.begin(), p.end());
    }

    // chain candidates: <= k+1 vertices, endpoints in the input set,
    // interiors outside it, enumerated in (length, lex) order
    std::vector<std::vector<int>> candidates;
    std::vector<int> seq;
    std::function<void()> grow = [&]() {
        if (seq.size() >= static_cast<size_t>(k) + 1) return;
        for (int w = 0; w < g.order(); ++w) {
            if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
            if (om(seq.back(), w) < 1) continue;
            if (is_input(w)) {
                seq.push_back(w);
                if (seq.size() >= 3 && chain_conditions(om, seq, false)) candidates.push_back(seq);
                seq.pop_back();
            } else {
                seq.push_back(w);
                grow();
                seq.pop_back();
            }
        }
    };
    for (int v : input) {
        seq = {v};
        grow();
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                  return x.size() != y.size() ? x.size() < y.size() : x < y;
              });

    for (const auto& cand : candidates) {
        bool clear = true;
        for (size_t i = 1; i + 1 < cand.size(); ++i)
            if (occupied.count(cand[i])) { clear = false; break; }
        if (!clear) continue;
        rep.chains.push_back(cand);
        for (size_t i = 1; i + 1 < cand.size(); ++i) occupied.insert(cand[i]);
        cover.insert(cand.begin(), cand.end());
    }

    rep.cover.assign(cover.begin(), cover.end());
    int added = 0;
    for (int v : rep.cover)
        if (!is_input(v)) ++added;
    rep.bound_ok =
        input.empty() ? added == 0 : 4 * added < k * k * k * static_cast<int>(input.size());

    // every chain/open chain leaving the input set must meet cover - input
    rep.covers_ok = true;
    auto meets_extra = [&](const std::vector<int>& s) {
        for (int v : s)
            if (!is_input(v) && cover.count(v)) return true;
        return false;
    };
    auto escapes = [&](const std::vector<int>& s) {
        for (int v : s)
            if (!is_input(v)) return true;
        return false;
    };
    std::function<void(bool)> audit_all = [&](bool open) {
        std::vector<int> s;
        std::function<void()> go = [&]() {
            bool end_ok = open || is_input(s.back());
            size_t min_len = open ? 2 : 3;
            if (s.size() >= min_len && end_ok && chain_conditions(om, s, open) && escapes(s) &&
                !meets_extra(s))
                rep.covers_ok = false;
            if (s.size() >= static_cast<size_t>(k) + 1 || !rep.covers_ok) return;
            for (int w = 0; w < g.order(); ++w) {
                if (std::find(s.begin(), s.end(), w) != s.end()) continue;
                if (om(s.back(), w) < 1) continue;
                s.push_back(w);
                go();
                s.pop_back();
            }
        };
        for (int v : input) {
            s = {v};
            go();
            if (!rep.covers_ok) return;
        }
    };
    audit_all(false);
    if (rep.covers_ok) audit_all(true);
    return rep;
}

}  // namespace acl_lab
