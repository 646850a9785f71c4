#include "acl_lab/homlib.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "acl_lab/caps.hpp"

namespace acl_lab {

Graph quotient_graph(const QuotientPartition& p) {
    if (!p.source) throw std::invalid_argument("quotient: missing source");
    const Graph& g = *p.source;
    std::vector<int> cls(g.order(), -1);
    for (size_t c = 0; c < p.classes.size(); ++c) {
        if (p.classes[c].empty()) throw std::invalid_argument("quotient: empty class");
        for (int v : p.classes[c]) {
            if (v < 0 || v >= g.order()) throw std::invalid_argument("quotient: vertex out of range");
            if (cls[v] >= 0) throw std::invalid_argument("quotient: classes overlap");
            cls[v] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (cls[v] < 0) throw std::invalid_argument("quotient: partition does not cover");
    Graph q(static_cast<int>(p.classes.size()));
    for (auto [u, v] : g.edges()) {
        if (cls[u] == cls[v])
            throw std::invalid_argument("quotient: adjacent vertices in one class");
        q.add_edge(cls[u], cls[v]);
    }
    return q;
}

void for_each_independent_partition(
    const Graph& g, const std::function<bool(const std::vector<std::vector<int>>&)>& fn) {
    int n = g.order();
    std::vector<std::vector<int>> classes;
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == n) return fn(classes);
        size_t existing = classes.size();
        for (size_t i = 0; i < existing; ++i) {
            bool ok = true;
            for (int u : classes[i])
                if (g.has_edge(u, v)) { ok = false; break; }
            if (!ok) continue;
            classes[i].push_back(v);
            if (!go(v + 1)) return false;
            classes[i].pop_back();
        }
        classes.push_back({v});
        if (!go(v + 1)) return false;
        classes.pop_back();
        return true;
    };
    go(0);
}

ImageSet hom_images(const Graph& g) {
    if (g.order() > caps().image_cap)
        throw cap_error("image-cap", "order " + std::to_string(g.order()) + " over cap " +
                                         std::to_string(caps().image_cap));
    struct Entry { Graph image; bool proper; };
    std::map<std::string, Entry> found;
    for_each_independent_partition(g, [&](const std::vector<std::vector<int>>& classes) {
        QuotientPartition p{&g, classes};
        Graph q = quotient_graph(p);
        bool proper = static_cast<int>(classes.size()) < g.order();
        std::string code = canonical_code(q);
        auto it = found.find(code);
        if (it == found.end()) found.emplace(std::move(code), Entry{std::move(q), proper});
        else it->second.proper = it->second.proper || proper;
        return true;
    });
    ImageSet out;
    out.source = g;
    for (auto& [code, e] : found) {
        out.images.push_back(std::move(e.image));
        out.codes.push_back(code);
        out.proper.push_back(e.proper);
    }
    out.minimal.assign(out.images.size(), true);
    for (size_t i = 0; i < out.images.size(); ++i)
        for (size_t j = 0; j < out.images.size(); ++j) {
            if (i == j) continue;
            if (embeds(out.images[j], out.images[i], EmbedMode::weak)) {
                out.minimal[i] = false;
                break;
            }
        }
    return out;
}

ImageSet minimal_hom_images(const Graph& g) {
    ImageSet all = hom_images(g);
    ImageSet out;
    out.source = all.source;
    for (size_t i = 0; i < all.images.size(); ++i) {
        if (!all.minimal[i]) continue;
        out.images.push_back(all.images[i]);
        out.codes.push_back(all.codes[i]);
        out.proper.push_back(all.proper[i]);
        out.minimal.push_back(true);
    }
    return out;
}

std::pair<bool, std::optional<HomClosureWitness>> is_hom_closed(std::span<const Graph> constraints) {
    for (size_t ci = 0; ci < constraints.size(); ++ci) {
        const Graph& c = constraints[ci];
        if (c.order() > caps().image_cap)
            throw cap_error("image-cap", "constraint order " + std::to_string(c.order()) +
                                             " over cap " + std::to_string(caps().image_cap));
        std::optional<HomClosureWitness> witness;
        for_each_independent_partition(c, [&](const std::vector<std::vector<int>>& classes) {
            if (static_cast<int>(classes.size()) == c.order()) return true;  // discrete
            QuotientPartition p{&c, classes};
            Graph q = quotient_graph(p);
            for (const Graph& member : constraints)
                if (embeds(member, q, EmbedMode::weak)) return true;
            witness = HomClosureWitness{static_cast<int>(ci), classes, std::move(q)};
            return false;
        });
        if (witness) return {false, witness};
    }
    return {true, std::nullopt};
}

}  // namespace acl_lab
