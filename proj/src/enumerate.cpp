#include "acl_lab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace acl_lab {

namespace {

// one level: extend every class on n-1 vertices by a new vertex with
// every possible neighborhood, dedup by canonical code
std::vector<Graph> next_level(const std::vector<Graph>& prev) {
    std::map<std::string, Graph> classes;
    for (const Graph& p : prev) {
        int n = p.order();
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
            Graph g(n + 1);
            for (auto [u, v] : p.edges()) g.add_edge(u, v);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) g.add_edge(n, v);
            std::string code = canonical_code(g);
            classes.try_emplace(std::move(code), std::move(g));
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace

void for_each_graph(int order, const std::function<void(const Graph&)>& fn, bool connected_only) {
    if (order <= 0) return;
    std::vector<Graph> level{Graph(1)};
    for (int n = 2; n <= order; ++n) level = next_level(level);
    for (const Graph& g : level)
        if (!connected_only || is_connected(g)) fn(g);
}

void for_each_graph_up_to(int max_order, const std::function<void(const Graph&)>& fn,
                          bool connected_only) {
    if (max_order <= 0) return;
    std::vector<Graph> level{Graph(1)};
    auto stream = [&]() {
        for (const Graph& g : level)
            if (!connected_only || is_connected(g)) fn(g);
    };
    stream();
    for (int n = 2; n <= max_order; ++n) {
        level = next_level(level);
        stream();
    }
}

std::vector<Graph> all_graphs(int order, bool connected_only) {
    std::vector<Graph> out;
    for_each_graph(order, [&](const Graph& g) { out.push_back(g); }, connected_only);
    return out;
}

}  // namespace acl_lab
