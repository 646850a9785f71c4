#include "acl_lab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace acl_lab {

Graph mycielski_sub(int n) {
    if (n < 0) throw std::invalid_argument("mycielski parameter must be >= 0");
    Graph g(2 * n + 1);
    auto a = [&](int i) { return i; };          // 1..n
    auto b = [&](int i) { return n + i; };      // 1..n
    for (int i = 1; i <= n; ++i) g.add_edge(0, a(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(b(i), b(j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) g.add_edge(a(i), b(j));
    return g;
}

namespace {

// all s-subsets of {0..limit-1}, lexicographic
void subsets(int limit, int s, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> go = [&](int start) {
        if (static_cast<int>(cur.size()) == s) { out.push_back(cur); return; }
        for (int v = start; v < limit; ++v) {
            cur.push_back(v);
            go(v + 1);
            cur.pop_back();
        }
    };
    go(0);
}

}  // namespace

Graph bouquet_star(int r, int n, int m) {
    if (!(n >= m && m >= 1)) throw std::invalid_argument("bouquet_star needs n >= m >= 1");
    if (!(r >= 2 || m >= n - 1)) throw std::invalid_argument("bouquet_star needs r >= 2 or m >= n-1");
    if (r < 1) throw std::invalid_argument("bouquet_star needs r >= 1");
    int m0 = std::min(m, n - 1);

    std::vector<std::vector<int>> block_subsets;  // n-1 of n, local ids
    subsets(n, n - 1, block_subsets);
    std::vector<std::vector<int>> b_subsets;      // m0 of m, local ids
    subsets(m, m0, b_subsets);

    // sockets = product over blocks, then the K_m choice, lexicographic
    std::vector<std::vector<int>> sockets;
    std::vector<int> pick(r, 0);
    while (true) {
        for (const auto& bs : b_subsets) {
            std::vector<int> s;
            for (int i = 0; i < r; ++i)
                for (int v : block_subsets[pick[i]]) s.push_back(i * n + v);
            for (int v : bs) s.push_back(r * n + v);
            sockets.push_back(std::move(s));
        }
        int i = r - 1;
        while (i >= 0 && pick[i] + 1 == static_cast<int>(block_subsets.size())) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }

    int base = r * n + m;
    Graph g(base + static_cast<int>(sockets.size()));
    for (int i = 0; i < r; ++i)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(i * n + u, i * n + v);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(r * n + u, r * n + v);
    for (size_t i = 0; i < sockets.size(); ++i)
        for (int v : sockets[i]) g.add_edge(base + static_cast<int>(i), v);
    return g;
}

Graph bowtie() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph two_triangles_path(int n) {
    if (n < 0) throw std::invalid_argument("path length must be >= 0");
    Graph g(5 + n);
    for (auto [u, v] : bowtie().edges()) g.add_edge(u, v);
    int prev = 3;
    for (int i = 0; i < n; ++i) {
        g.add_edge(prev, 5 + i);
        prev = 5 + i;
    }
    return g;
}

Graph complete_triangle(int n) {
    if (n < 3) throw std::invalid_argument("complete_triangle needs n >= 3");
    Graph g(n + 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    g.add_edge(n - 1, n);
    g.add_edge(n - 1, n + 1);
    g.add_edge(n, n + 1);
    return g;
}

Graph complete_path(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("complete_path needs n >= 1 and k >= 1");
    Graph g(n + k);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    int prev = n - 1;
    for (int i = 0; i < k; ++i) {
        g.add_edge(prev, n + i);
        prev = n + i;
    }
    return g;
}

Graph wheel(int n) {
    if (n < 1) throw std::invalid_argument("wheel needs n >= 1 (odd rim C_{2n+1})");
    return join_graphs(complete_graph(1), cycle_graph(2 * n + 1));
}

Graph odd_cycle_join(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("odd_cycle_join needs m, n >= 1");
    return join_graphs(cycle_graph(2 * m + 1), cycle_graph(2 * n + 1));
}

}  // namespace acl_lab
