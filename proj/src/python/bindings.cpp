#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acl_lab/builder.hpp"
#include "acl_lab/casestudies.hpp"
#include "acl_lab/catalog.hpp"
#include "acl_lab/closure.hpp"
#include "acl_lab/constructions.hpp"
#include "acl_lab/format.hpp"
#include "acl_lab/graph.hpp"
#include "acl_lab/homlib.hpp"
#include "acl_lab/verify.hpp"

namespace py = pybind11;
using namespace acl_lab;

namespace {

ConstraintSet make_constraints(const std::vector<std::string>& specs) {
    std::vector<Graph> members;
    for (const auto& s : specs) members.push_back(parse_graph(s));
    return ConstraintSet::from(std::move(members));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "closure and homomorphic-image laboratory for forbidden-subgraph families";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("order") = 0)
        .def_static("from_edges", &Graph::from_edges)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse", &parse_graph, "build a graph from the naming grammar");
    m.def("read_edge_list", &read_edge_list_string);
    m.def("write_edge_list", &write_edge_list);
    m.def("write_dot", &write_dot, py::arg("graph"), py::arg("name") = "g");

    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("star_graph", &star_graph);
    m.def("bowtie", &bowtie);
    m.def("mycielski_sub", &mycielski_sub);
    m.def("bouquet_star", &bouquet_star);
    m.def("two_triangles_path", &two_triangles_path);
    m.def("complete_triangle", &complete_triangle);
    m.def("complete_path", &complete_path);
    m.def("wheel", &wheel);

    m.def("join", &join_graphs);
    m.def("vertex_amalgam", &vertex_amalgam);
    m.def("disjoint_union",
          [](const Graph& a, const Graph& b) { return a.disjoint_union(b); });
    m.def("free_amalgam",
          [](const Graph& base, const std::vector<int>& base_anchor, const Graph& pattern,
             const std::vector<int>& pattern_anchor, int copies) {
              return free_amalgam(base, base_anchor, pattern, pattern_anchor, copies);
          });

    m.def("chromatic_number", &chromatic_number);
    m.def("longest_path_edges", &longest_path_edges);
    m.def("is_connected", &is_connected);
    m.def("is_solid", &is_solid);
    m.def("is_k_connected", &is_k_connected);
    m.def("canonical_code",
          [](const Graph& g) { return code_to_hex(canonical_code(g)); });
    m.def("embeds", [](const Graph& pattern, const Graph& host, bool induced) {
        return embeds(pattern, host, induced ? EmbedMode::induced : EmbedMode::weak);
    }, py::arg("pattern"), py::arg("host"), py::arg("induced") = false);
    m.def("count_embeddings", [](const Graph& pattern, const Graph& host, bool induced) {
        return embeddings(pattern, host, induced ? EmbedMode::induced : EmbedMode::weak).size();
    }, py::arg("pattern"), py::arg("host"), py::arg("induced") = false);
    m.def("omits", [](const Graph& g, const std::vector<std::string>& constraints) {
        return omits(g, make_constraints(constraints));
    });

    m.def("hom_images", [](const Graph& g) { return hom_images(g).images; });
    m.def("minimal_hom_images", [](const Graph& g) { return minimal_hom_images(g).images; });
    m.def("is_hom_closed", [](const std::vector<std::string>& specs) {
        ConstraintSet cs = make_constraints(specs);
        return is_hom_closed(std::span<const Graph>(cs.members)).first;
    });
    m.def("quantifier_bound", &quantifier_bound);

    m.def("closure", [](const Graph& g, const std::vector<int>& x,
                        const std::vector<std::string>& constraints, int path_length) {
        ConstraintSet cs = make_constraints(constraints);
        ClosureReport rep =
            cl_family(g, x, path_basis(path_length > 0 ? path_length : cs.k - 1), cs, true);
        py::dict out;
        out["input"] = rep.input;
        out["final"] = rep.final_set;
        out["fixed_point"] = rep.fixed_point;
        return out;
    }, py::arg("graph"), py::arg("vertices"), py::arg("constraints"), py::arg("path_length") = 0);

    m.def("acl_witness_found", [](const Graph& g, const std::vector<int>& a,
                                  const std::vector<std::string>& constraints) {
        return acl_witness(g, a, make_constraints(constraints)).has_value();
    });

    m.def("build_approximant", [](const std::vector<std::string>& constraints, int rounds,
                                  int anchor_budget, int extension_budget, int cap) {
        BuildConfig cfg = BuildConfig::defaults(make_constraints(constraints));
        cfg.rounds = rounds;
        cfg.anchor_budget = anchor_budget;
        cfg.extension_budget = extension_budget;
        cfg.vertex_cap = cap;
        return build_approximant(cfg).first;
    }, py::arg("constraints"), py::arg("rounds") = 2, py::arg("anchor_budget") = 2,
       py::arg("extension_budget") = 4, py::arg("cap") = 300);

    m.def("run_oracle", [](const std::string& name) {
        OracleResult result = run_oracle(name);
        return py::make_tuple(result.pass, result.to_json().dump());
    });
    m.def("oracle_names", &oracle_names);

    m.def("catalog", [](const std::string& filter) {
        py::list out;
        for (const CatalogEntry& e : catalog_lookup(filter)) {
            py::dict d;
            d["family"] = e.family;
            d["verdict"] = e.verdict;
            d["source"] = e.source;
            d["bound"] = e.bound;
            out.append(d);
        }
        return out;
    }, py::arg("filter") = "");
}
