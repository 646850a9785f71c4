// Independent brute-force reference implementations used to freeze
// expected values. These deliberately avoid the library's search
// machinery: plain injection scans, bitmask DP, unpruned partition
// recursion.
#ifndef ACL_LAB_TESTS_BRUTE_HPP
#define ACL_LAB_TESTS_BRUTE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "acl_lab/graph.hpp"

namespace brute {

using acl_lab::Graph;

// all injective maps pattern -> host, filtered by the mode predicate
inline int count_embeddings(const Graph& pattern, const Graph& host, bool induced) {
    int np = pattern.order(), nh = host.order();
    if (np > nh) return 0;
    std::vector<int> host_ids(nh);
    std::iota(host_ids.begin(), host_ids.end(), 0);
    int count = 0;
    std::vector<int> map(np, -1);
    std::vector<char> used(nh, 0);
    std::function<void(int)> go = [&](int p) {
        if (p == np) {
            for (int u = 0; u < np; ++u)
                for (int v = u + 1; v < np; ++v) {
                    bool pe = pattern.has_edge(u, v);
                    bool he = host.has_edge(map[u], map[v]);
                    if (pe && !he) return;
                    if (induced && !pe && he) return;
                }
            ++count;
            return;
        }
        for (int h = 0; h < nh; ++h) {
            if (used[h]) continue;
            used[h] = 1;
            map[p] = h;
            go(p + 1);
            used[h] = 0;
        }
    };
    go(0);
    return count;
}

inline bool embeds(const Graph& pattern, const Graph& host, bool induced) {
    return count_embeddings(pattern, host, induced) > 0;
}

// longest simple path in edges via subset DP (independent of the
// library's backtracking)
inline int longest_path_edges(const Graph& g) {
    int n = g.order();
    if (n == 0 || n > 20) return n == 0 ? 0 : -1;
    std::vector<std::vector<char>> reach(1 << n, std::vector<char>(n, 0));
    int best = 0;
    for (int v = 0; v < n; ++v) reach[1 << v][v] = 1;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask)
        for (int v = 0; v < n; ++v) {
            if (!reach[mask][v]) continue;
            best = std::max(best, std::popcount(mask) - 1);
            for (int w : g.neighbors(v)) {
                if (mask & (uint32_t(1) << w)) continue;
                reach[mask | (uint32_t(1) << w)][w] = 1;
            }
        }
    return best;
}

// all partitions into independent sets, no pruning; calls fn per partition
inline void partitions(const Graph& g,
                       const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<int>> classes;
    std::function<void(int)> go = [&](int v) {
        if (v == g.order()) {
            fn(classes);
            return;
        }
        size_t k = classes.size();
        for (size_t i = 0; i < k; ++i) {
            bool ok = true;
            for (int u : classes[i])
                if (g.has_edge(u, v)) ok = false;
            if (!ok) continue;
            classes[i].push_back(v);
            go(v + 1);
            classes[i].pop_back();
        }
        classes.push_back({v});
        go(v + 1);
        classes.pop_back();
    };
    go(0);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return embeds(a, b, true);
}

// deterministic xorshift for property tests
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

inline Graph random_graph(Rng& rng, int n, int percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < percent) g.add_edge(u, v);
    return g;
}

}  // namespace brute

#endif
