#include "acl_lab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "acl_lab/caps.hpp"

namespace acl_lab {

Graph::Graph(int order) {
    if (order < 0) throw std::invalid_argument("graph order must be >= 0");
    resize(order);
}

void Graph::resize(int n) {
    int words = (n + 63) / 64;
    std::vector<uint64_t> adj(static_cast<size_t>(n) * words, 0);
    for (int v = 0; v < n_; ++v)
        std::copy(row(v), row(v) + words_, adj.begin() + static_cast<size_t>(v) * words);
    n_ = n;
    words_ = words;
    adj_ = std::move(adj);
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge rejected");
    adj_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t(1) << (v % 64);
    adj_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t(1) << (u % 64);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return (row(u)[v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        uint64_t bits = row(v)[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

bool Graph::adjacent_to_all(int v, std::span<const int> vs) const {
    for (int u : vs)
        if (!has_edge(v, u)) return false;
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& vs) const {
    Graph g(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (has_edge(vs[i], vs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph g(n_ + other.n_);
    for (auto [u, v] : edges()) g.add_edge(u, v);
    for (auto [u, v] : other.edges()) g.add_edge(n_ + u, n_ + v);
    return g;
}

namespace {

struct EmbedSearch {
    const Graph& pattern;
    const Graph& host;
    EmbedMode mode;
    const EmbedOptions& opts;
    std::vector<int> assign;       // pattern -> host, -1 unset
    std::vector<char> used;        // host vertex already an image
    std::vector<int> order;        // search order over unset pattern vertices
    std::vector<EmbeddingMap> out;
    bool count_only = false;
    bool found = false;

    EmbedSearch(const Graph& p, const Graph& h, EmbedMode m, const EmbedOptions& o)
        : pattern(p), host(h), mode(m), opts(o),
          assign(p.order(), -1), used(h.order(), 0) {}

    bool consistent(int p, int h) const {
        for (int q = 0; q < pattern.order(); ++q) {
            if (assign[q] < 0 || q == p) continue;
            bool pe = pattern.has_edge(p, q);
            bool he = host.has_edge(h, assign[q]);
            if (pe && !he) return false;
            if (mode == EmbedMode::induced && !pe && he) return false;
        }
        return true;
    }

    bool allowed_host(int p, int h) const {
        if (opts.allowed.empty()) return true;
        const auto& a = opts.allowed[p];
        if (a.empty()) return true;
        return std::find(a.begin(), a.end(), h) != a.end();
    }

    void plan_order() {
        int np = pattern.order();
        std::vector<char> placed(np, 0);
        for (int p = 0; p < np; ++p)
            if (assign[p] >= 0) placed[p] = 1;
        std::vector<char> scheduled = placed;
        for (int step = 0; step < np; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int p = 0; p < np; ++p) {
                if (scheduled[p]) continue;
                int links = 0;
                for (int q = 0; q < np; ++q)
                    if (scheduled[q] && pattern.has_edge(p, q)) ++links;
                int deg = pattern.degree(p);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = p;
                    best_links = links;
                    best_deg = deg;
                }
            }
            if (best < 0) break;
            scheduled[best] = 1;
            order.push_back(best);
        }
    }

    bool touch_ok() const {
        if (opts.must_touch.empty()) return true;
        for (int h : opts.must_touch)
            if (h >= 0 && h < host.order() && used[h]) return true;
        return false;
    }

    bool emit() {
        if (!touch_ok()) return false;
        found = true;
        if (!count_only) out.push_back({assign, mode});
        return opts.limit != 0 && out.size() >= opts.limit;
    }

    bool dfs(size_t idx) {
        if (idx == order.size()) return emit();
        int p = order[idx];
        for (int h = 0; h < host.order(); ++h) {
            if (used[h] || !allowed_host(p, h) || !consistent(p, h)) continue;
            assign[p] = h;
            used[h] = 1;
            bool stop = dfs(idx + 1);
            used[h] = 0;
            assign[p] = -1;
            if (stop) return true;
            if (count_only && found) return true;
        }
        return false;
    }

    void run() {
        for (auto [p, h] : opts.partial) {
            if (p < 0 || p >= pattern.order() || h < 0 || h >= host.order())
                throw std::invalid_argument("partial assignment out of range");
            if (assign[p] >= 0 || used[h])
                throw std::invalid_argument("partial assignment not injective");
            assign[p] = h;
            used[h] = 1;
        }
        for (int p = 0; p < pattern.order(); ++p) {
            if (assign[p] < 0) continue;
            if (!consistent(p, assign[p]))
                throw std::invalid_argument("partial assignment inconsistent with mode");
        }
        plan_order();
        dfs(0);
    }
};

}  // namespace

std::vector<EmbeddingMap> embeddings(const Graph& pattern, const Graph& host, EmbedMode mode,
                                     const EmbedOptions& opts) {
    EmbedSearch s(pattern, host, mode, opts);
    s.run();
    std::sort(s.out.begin(), s.out.end(),
              [](const EmbeddingMap& a, const EmbeddingMap& b) { return a.assignment < b.assignment; });
    return s.out;
}

bool embeds(const Graph& pattern, const Graph& host, EmbedMode mode, const EmbedOptions& opts) {
    EmbedSearch s(pattern, host, mode, opts);
    s.count_only = true;
    s.run();
    return s.found;
}

bool omits(const Graph& g, std::span<const Graph> constraints) {
    for (const Graph& c : constraints)
        if (embeds(c, g, EmbedMode::weak)) return false;
    return true;
}

bool omits(const Graph& g, const Graph& constraint) {
    return !embeds(constraint, g, EmbedMode::weak);
}

bool embeds_touching(const Graph& pattern, const Graph& host, std::span<const int> required) {
    for (int p = 0; p < pattern.order(); ++p)
        for (int f : required) {
            EmbedOptions opts;
            opts.partial = {{p, f}};
            if (embeds(pattern, host, EmbedMode::weak, opts)) return true;
        }
    return false;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<char> is_cut;
    std::vector<std::vector<int>> blocks_out;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), num(graph.order(), -1), low(graph.order(), 0), is_cut(graph.order(), 0) {}

    void pop_block(std::pair<int, int> top_edge) {
        std::vector<int> verts;
        std::pair<int, int> e;
        do {
            e = stack.back();
            stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
        } while (e != top_edge);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks_out.push_back(std::move(verts));
    }

    void dfs(int root) {
        // explicit stack to survive deep hosts
        struct Frame { int v, parent; std::vector<int> nbrs; size_t i = 0; int children = 0; };
        std::vector<Frame> st;
        st.push_back({root, -1, g.neighbors(root)});
        num[root] = low[root] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.i < f.nbrs.size()) {
                int w = f.nbrs[f.i++];
                if (w == f.parent) continue;
                if (num[w] < 0) {
                    stack.push_back({f.v, w});
                    num[w] = low[w] = timer++;
                    st.push_back({w, f.v, g.neighbors(w)});
                } else if (num[w] < num[f.v]) {
                    stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                st.pop_back();
                if (parent >= 0) {
                    Frame& pf = st.back();
                    ++pf.children;
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= num[parent]) {
                        if (pf.parent >= 0 || pf.children > 1) is_cut[parent] = 1;
                        pop_block({parent, v});
                    }
                }
            }
        }
        // root cut status handled above via children count at pop time
    }

    void run() {
        for (int v = 0; v < g.order(); ++v) {
            if (num[v] >= 0) continue;
            dfs(v);
            if (g.degree(v) == 0) blocks_out.push_back({v});
        }
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder bf(g);
    bf.run();
    BlockDecomposition d;
    d.blocks = std::move(bf.blocks_out);
    std::sort(d.blocks.begin(), d.blocks.end());
    for (int v = 0; v < g.order(); ++v)
        if (bf.is_cut[v]) d.cut_vertices.push_back(v);
    for (size_t i = 0; i < d.blocks.size(); ++i)
        for (size_t j = i + 1; j < d.blocks.size(); ++j) {
            bool share = false;
            for (int v : d.cut_vertices) {
                bool in_i = std::binary_search(d.blocks[i].begin(), d.blocks[i].end(), v);
                bool in_j = std::binary_search(d.blocks[j].begin(), d.blocks[j].end(), v);
                if (in_i && in_j) { share = true; break; }
            }
            if (share) d.tree.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return d;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> work{0};
    seen[0] = 1;
    while (!work.empty()) {
        int v = work.back();
        work.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) { seen[w] = 1; work.push_back(w); }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

namespace {

bool colorable(const Graph& g, int k) {
    int n = g.order();
    std::vector<int> color(n, -1);
    // order by degree descending for earlier pruning
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
    std::function<bool(int, int)> go = [&](int idx, int used) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        int limit = std::min(k, used + 1);  // new colors introduced in order
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (color[w] == c) { ok = false; break; }
            if (!ok) continue;
            color[v] = c;
            if (go(idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return go(0, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    for (int k = 2;; ++k)
        if (colorable(g, k)) return k;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    int n = g.order();
    if (n <= k) return false;
    // delete every subset of k-1 vertices and test connectivity
    std::vector<int> subset;
    std::function<bool(int)> go = [&](int start) -> bool {
        if (static_cast<int>(subset.size()) == k - 1) {
            std::vector<int> rest;
            std::vector<char> dropped(n, 0);
            for (int v : subset) dropped[v] = 1;
            for (int v = 0; v < n; ++v)
                if (!dropped[v]) rest.push_back(v);
            return is_connected(g.induced(rest));
        }
        for (int v = start; v < n; ++v) {
            subset.push_back(v);
            if (!go(v + 1)) return false;
            subset.pop_back();
        }
        return true;
    };
    return go(0);
}

namespace {

void longest_path_dfs(const Graph& g, int v, std::vector<char>& used, int len, int& best) {
    best = std::max(best, len);
    for (int w : g.neighbors(v)) {
        if (used[w]) continue;
        used[w] = 1;
        longest_path_dfs(g, w, used, len + 1, best);
        used[w] = 0;
    }
}

}  // namespace

int longest_path_edges(const Graph& g) {
    int best = 0;
    std::vector<char> used(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        used[v] = 1;
        longest_path_dfs(g, v, used, 0, best);
        used[v] = 0;
    }
    return best;
}

namespace {

// Canonical form search: vertices are first partitioned by an iterated
// degree/neighborhood invariant; the code minimization then ranges over
// class-monotone orders only.
struct CodeSearch {
    const Graph& g;
    int n;
    std::vector<int> color;          // invariant class per vertex, 0-based contiguous
    std::vector<int> class_of_pos;   // required class at each position
    std::vector<uint16_t> best;      // smallest completed leaf, 0xffff beyond its prefix
    std::vector<int> perm;           // position -> vertex
    std::vector<uint16_t> rows;
    std::vector<char> used;

    explicit CodeSearch(const Graph& graph, std::span<const int> anchor) : g(graph), n(graph.order()) {
        std::vector<char> anchored(n, 0);
        for (int a : anchor) anchored[a] = 1;
        // initial invariant: (not anchored, degree); anchors sort first
        std::vector<std::pair<std::vector<int>, int>> keyed(n);
        for (int v = 0; v < n; ++v) keyed[v] = {{anchored[v] ? 0 : 1, g.degree(v)}, v};
        assign_colors(keyed);
        refine();
        refine();
        plan_positions();
        perm.assign(n, -1);
        rows.assign(n, 0);
        used.assign(n, 0);
    }

    void assign_colors(std::vector<std::pair<std::vector<int>, int>>& keyed) {
        std::sort(keyed.begin(), keyed.end());
        color.assign(n, 0);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && keyed[i].first != keyed[i - 1].first) ++c;
            color[keyed[i].second] = c;
        }
    }

    void refine() {
        std::vector<std::pair<std::vector<int>, int>> keyed(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key{color[v]};
            std::vector<int> nbr;
            for (int w : g.neighbors(v)) nbr.push_back(color[w]);
            std::sort(nbr.begin(), nbr.end());
            key.insert(key.end(), nbr.begin(), nbr.end());
            keyed[v] = {std::move(key), v};
        }
        assign_colors(keyed);
    }

    void plan_positions() {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
        class_of_pos.resize(n);
        for (int i = 0; i < n; ++i) class_of_pos[i] = color[order[i]];
    }

    // invariant on entry: rows[0..pos-1] == best[0..pos-1]
    void dfs(int pos) {
        if (pos == n) {
            best.assign(rows.begin(), rows.end());
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != class_of_pos[pos]) continue;
            uint16_t r = 0;
            for (int i = 0; i < pos; ++i)
                if (g.has_edge(v, perm[i])) r |= uint16_t(1) << i;
            if (r > best[pos]) continue;
            if (r < best[pos]) {
                best[pos] = r;
                std::fill(best.begin() + pos + 1, best.end(), uint16_t(0xffff));
            }
            perm[pos] = v;
            rows[pos] = r;
            used[v] = 1;
            dfs(pos + 1);
            used[v] = 0;
        }
    }

    std::string run() {
        best.assign(n, uint16_t(0xffff));
        dfs(0);
        std::string out;
        out.push_back(static_cast<char>(n));
        int bits = 0;
        uint8_t cur = 0;
        auto push_bit = [&](bool b) {
            cur = static_cast<uint8_t>(cur << 1 | (b ? 1 : 0));
            if (++bits == 8) {
                out.push_back(static_cast<char>(cur));
                bits = 0;
                cur = 0;
            }
        };
        for (int pos = 1; pos < n; ++pos)
            for (int i = 0; i < pos; ++i) push_bit((best[pos] >> i) & 1);
        if (bits) out.push_back(static_cast<char>(cur << (8 - bits)));
        return out;
    }
};

}  // namespace

namespace {

std::string raw_code(const Graph& g, std::span<const int> anchor) {
    if (g.order() > caps().code_cap || g.order() > 16)
        throw cap_error("code-cap", "order " + std::to_string(g.order()) + " over cap " +
                                         std::to_string(std::min(caps().code_cap, 16)));
    if (g.order() == 0) return std::string(1, '\0');
    CodeSearch cs(g, anchor);
    return cs.run();
}

}  // namespace

std::string canonical_code(const Graph& g) {
    return raw_code(g, {});
}

std::string canonical_code_anchored(const Graph& g, std::span<const int> anchor) {
    std::string code = raw_code(g, anchor);
    code.insert(code.begin() + 1, static_cast<char>(anchor.size()));
    return code;
}

std::string code_to_hex(const std::string& code) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : code) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

bool is_solid(const Graph& g) {
    for (const auto& block : blocks(g).blocks) {
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!g.has_edge(block[i], block[j])) return false;
    }
    return true;
}

Graph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("negative order");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int k) {
    if (k < 0) throw std::invalid_argument("negative path length");
    Graph g(k + 1);
    for (int v = 0; v < k; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int n) {
    if (n < 0) throw std::invalid_argument("negative star degree");
    Graph g(n + 1);
    for (int v = 1; v <= n; ++v) g.add_edge(0, v);
    return g;
}

Graph join_graphs(const Graph& a, const Graph& b) {
    Graph g = a.disjoint_union(b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

Graph vertex_amalgam(const Graph& a, int va, const Graph& b, int vb) {
    if (va < 0 || va >= a.order() || vb < 0 || vb >= b.order())
        throw std::invalid_argument("amalgam vertex out of range");
    Graph g(a.order() + b.order() - 1);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    auto map_b = [&](int v) {
        if (v == vb) return va;
        return a.order() + (v < vb ? v : v - 1);
    };
    for (auto [u, v] : b.edges()) g.add_edge(map_b(u), map_b(v));
    return g;
}

Graph free_amalgam(const Graph& base, std::span<const int> base_anchor, const Graph& pattern,
                   std::span<const int> pattern_anchor, int copies) {
    if (copies < 0) throw std::invalid_argument("negative copy count");
    if (base_anchor.size() != pattern_anchor.size())
        throw std::invalid_argument("anchor size mismatch");
    std::vector<int> where(pattern.order(), -1);  // pattern vertex -> base vertex, anchors only
    for (size_t i = 0; i < base_anchor.size(); ++i) {
        int bp = base_anchor[i], pp = pattern_anchor[i];
        if (bp < 0 || bp >= base.order() || pp < 0 || pp >= pattern.order())
            throw std::invalid_argument("anchor vertex out of range");
        if (where[pp] >= 0) throw std::invalid_argument("anchor not injective");
        where[pp] = bp;
    }
    for (size_t i = 0; i < pattern_anchor.size(); ++i)
        for (size_t j = i + 1; j < pattern_anchor.size(); ++j)
            if (pattern.has_edge(pattern_anchor[i], pattern_anchor[j]) &&
                !base.has_edge(base_anchor[i], base_anchor[j]))
                throw std::invalid_argument("anchor embedding is not a weak embedding");

    std::vector<int> fresh;  // pattern vertices outside the anchor, ascending
    for (int p = 0; p < pattern.order(); ++p)
        if (where[p] < 0) fresh.push_back(p);
    int f = static_cast<int>(fresh.size());

    Graph g(base.order() + copies * f);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int c = 0; c < copies; ++c) {
        std::vector<int> img = where;
        for (int i = 0; i < f; ++i) img[fresh[i]] = base.order() + c * f + i;
        for (auto [u, v] : pattern.edges()) {
            if (where[u] >= 0 && where[v] >= 0) continue;  // anchor edges live in base
            g.add_edge(img[u], img[v]);
        }
    }
    return g;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int w : g.neighbors(v)) {
                if (w <= v) continue;
                if (g.has_edge(u, w)) out.push_back({u, v, w});
            }
        }
    return out;
}

}  // namespace acl_lab
