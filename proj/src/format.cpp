#include "acl_lab/format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "acl_lab/constructions.hpp"

namespace acl_lab {

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        g.add_edge(u, v);
    }
    return g;
}

Graph read_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_edge_list(in);
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << write_edge_list(g);
}

std::string write_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph read_dot_string(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    in >> tok;
    if (tok != "graph") throw std::invalid_argument("dot: expected 'graph'");
    in >> tok;  // name
    in >> tok;
    if (tok != "{") throw std::invalid_argument("dot: expected '{'");
    int max_vertex = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, dash, b;
        if (!(ls >> a)) continue;
        if (a == "}") break;
        if (!a.empty() && a.back() == ';') a.pop_back();
        if (ls >> dash >> b) {
            if (dash != "--") throw std::invalid_argument("dot: expected '--'");
            if (!b.empty() && b.back() == ';') b.pop_back();
            int u = std::stoi(a), v = std::stoi(b);
            edges.emplace_back(u, v);
            max_vertex = std::max({max_vertex, u, v});
        } else {
            max_vertex = std::max(max_vertex, std::stoi(a));
        }
    }
    return Graph::from_edges(max_vertex + 1, edges);
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    void expect(char c) {
        if (!consume(c))
            throw std::invalid_argument(std::string("graph spec: expected '") + c + "' at offset " +
                                        std::to_string(pos));
    }

    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("graph spec: expected a number at offset " +
                                                      std::to_string(start));
        return std::stoi(s.substr(start, pos - start));
    }

    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    Graph expr() {
        skip_ws();
        size_t start = pos;
        std::string w = word();
        if (w.empty()) throw std::invalid_argument("graph spec: expected a token at offset " +
                                                   std::to_string(start));
        // letter prefix + trailing digits covers K5, C7, P4, S3, M3
        size_t digits = 0;
        while (digits < w.size() && std::isdigit(static_cast<unsigned char>(w[w.size() - 1 - digits])))
            ++digits;
        if (digits > 0 && digits + 1 == w.size()) {
            int param = std::stoi(w.substr(1));
            switch (w[0]) {
                case 'K': return complete_graph(param);
                case 'C': return cycle_graph(param);
                case 'P': return path_graph(param);
                case 'S': return star_graph(param);
                case 'M': return mycielski_sub(param);
                default: break;
            }
        }
        if (w == "bowtie") return bowtie();
        if (w == "Gstar") {
            expect('(');
            int r = number(); expect(','); int n = number(); expect(','); int m = number();
            expect(')');
            return bouquet_star(r, n, m);
        }
        if (w == "TTP") {
            expect('('); int n = number(); expect(')');
            return two_triangles_path(n);
        }
        if (w == "KnK3") {
            expect('('); int n = number(); expect(')');
            return complete_triangle(n);
        }
        if (w == "KnPk") {
            expect('('); int n = number(); expect(','); int k = number(); expect(')');
            return complete_path(n, k);
        }
        if (w == "wheel") {
            expect('('); int n = number(); expect(')');
            return wheel(n);
        }
        if (w == "ocjoin") {
            expect('('); int m = number(); expect(','); int n = number(); expect(')');
            return odd_cycle_join(m, n);
        }
        if (w == "join") {
            expect('(');
            Graph g = expr();
            while (consume(',')) g = join_graphs(g, expr());
            expect(')');
            return g;
        }
        if (w == "sum") {
            expect('(');
            Graph g = expr();
            while (consume(',')) g = g.disjoint_union(expr());
            expect(')');
            return g;
        }
        if (w == "amalgam") {
            expect('(');
            Graph a = expr(); expect(',');
            int va = number(); expect(',');
            Graph b = expr(); expect(',');
            int vb = number(); expect(')');
            return vertex_amalgam(a, va, b, vb);
        }
        throw std::invalid_argument("graph spec: unknown token '" + w + "'");
    }
};

}  // namespace

Graph parse_graph(const std::string& spec) {
    Parser p(spec);
    Graph g = p.expr();
    p.skip_ws();
    if (p.pos != spec.size())
        throw std::invalid_argument("graph spec: trailing input at offset " + std::to_string(p.pos));
    return g;
}

Graph load_graph_arg(const std::string& arg) {
    if (std::ifstream probe(arg); probe) return read_edge_list(probe);
    return parse_graph(arg);
}

}  // namespace acl_lab
