#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acl_lab/builder.hpp"
#include "acl_lab/caps.hpp"
#include "acl_lab/casestudies.hpp"
#include "acl_lab/catalog.hpp"
#include "acl_lab/closure.hpp"
#include "acl_lab/constructions.hpp"
#include "acl_lab/format.hpp"
#include "acl_lab/graph.hpp"
#include "acl_lab/homlib.hpp"
#include "acl_lab/verify.hpp"

using json = nlohmann::ordered_json;
using namespace acl_lab;

namespace {

json graph_json(const Graph& g) {
    json j;
    j["order"] = g.order();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (g.order() <= caps().code_cap) j["code"] = code_to_hex(canonical_code(g));
    return j;
}

json report_skeleton(const std::string& command, const std::vector<Graph>& inputs) {
    json report;
    report["command"] = command;
    json in = json::array();
    for (const Graph& g : inputs) in.push_back(graph_json(g));
    report["inputs"] = in;
    return report;
}

void emit(const json& report, const std::string& format, const std::string& out_path) {
    std::string text;
    if (format == "json") {
        text = report.dump(2);
        text.push_back('\n');
    } else {
        // plain text: flat key:value walk
        std::function<void(const json&, std::string)> walk = [&](const json& j, std::string prefix) {
            if (j.is_object()) {
                for (auto it = j.begin(); it != j.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (j.is_array()) {
                int i = 0;
                for (const auto& item : j) walk(item, prefix + "[" + std::to_string(i++) + "]");
            } else {
                text += prefix + ": " + j.dump() + "\n";
            }
        };
        walk(report, "");
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
}

std::vector<Graph> load_graphs(const std::vector<std::string>& specs) {
    std::vector<Graph> out;
    for (const auto& s : specs) out.push_back(load_graph_arg(s));
    return out;
}

ConstraintSet load_constraints(const std::vector<std::string>& specs) {
    return ConstraintSet::from(load_graphs(specs));
}

json image_set_json(const ImageSet& images) {
    json arr = json::array();
    for (size_t i = 0; i < images.images.size(); ++i) {
        json item = graph_json(images.images[i]);
        item["code"] = code_to_hex(images.codes[i]);
        item["proper"] = static_cast<bool>(images.proper[i]);
        item["minimal"] = static_cast<bool>(images.minimal[i]);
        arr.push_back(item);
    }
    return arr;
}

json closure_report_json(const ClosureReport& rep) {
    json j;
    j["input"] = rep.input;
    j["final"] = rep.final_set;
    json steps = json::array();
    for (const ClosureStep& s : rep.steps) {
        steps.push_back(
            {{"round", s.round}, {"pattern", s.pattern_code}, {"anchor", s.anchor}, {"added", s.added}});
    }
    j["steps"] = steps;
    j["fixed_point"] = rep.fixed_point;
    j["budget_exhausted"] = rep.budget_exhausted;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closure and homomorphic-image laboratory for forbidden-subgraph families"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format: text|json|dot")->capture_default_str();
    app.add_option("--out", out_path, "write the report to a file");

    // images / minimal-images
    std::string images_spec;
    auto* images_cmd = app.add_subcommand("images", "homomorphic images of a graph");
    images_cmd->add_option("graph", images_spec, "graph spec or edge-list file")->required();
    std::string min_images_spec;
    auto* min_images_cmd = app.add_subcommand("minimal-images", "minimal homomorphic images");
    min_images_cmd->add_option("graph", min_images_spec)->required();

    // homclosed
    std::vector<std::string> homclosed_specs, hom_part_specs;
    auto* homclosed_cmd = app.add_subcommand("homclosed", "homomorphic-closure verdict");
    homclosed_cmd->add_option("constraints", homclosed_specs)->required();
    homclosed_cmd->add_option("--hom-part", hom_part_specs, "extension family to audit");

    // construct
    std::string construct_spec;
    auto* construct_cmd = app.add_subcommand("construct", "build a named graph");
    construct_cmd->add_option("graph", construct_spec)->required();

    // closure
    std::string closure_graph;
    std::vector<int> closure_set;
    std::vector<std::string> closure_constraints;
    std::string closure_family = "path-basis";
    int closure_pathlen = 0;
    bool closure_once = false;
    int closure_star_n = -1;
    auto* closure_cmd = app.add_subcommand("closure", "closure of a vertex set");
    closure_cmd->add_option("graph", closure_graph)->required();
    closure_cmd->add_option("--set", closure_set, "vertex ids")->required();
    closure_cmd->add_option("--constraints", closure_constraints);
    closure_cmd->add_option("--family", closure_family,
                            "path-basis | solidity-basis | proper-subgraph-basis");
    closure_cmd->add_option("--path-length", closure_pathlen, "path-basis maximum length");
    closure_cmd->add_flag("--once", closure_once, "single pass instead of the fixed point");
    closure_cmd->add_option("--star", closure_star_n,
                            "run the two-triangles-plus-path closure with this path length");

    // aclwitness
    std::string acl_graph;
    std::vector<int> acl_set;
    std::vector<std::string> acl_constraints;
    auto* acl_cmd = app.add_subcommand("aclwitness", "algebraicity witness for a vertex set");
    acl_cmd->add_option("graph", acl_graph)->required();
    acl_cmd->add_option("--set", acl_set)->expected(0, 1000);
    acl_cmd->add_option("--constraints", acl_constraints)->required();

    // build
    std::vector<std::string> build_constraints;
    int build_rounds = 2, build_anchor = 2, build_ext = 4, build_cap = 300;
    uint64_t build_seed = 0;
    std::string build_out, build_trace, build_start;
    auto* build_cmd = app.add_subcommand("build", "free-amalgam saturation approximant");
    build_cmd->add_option("--constraints", build_constraints)->required();
    build_cmd->add_option("--rounds", build_rounds)->capture_default_str();
    build_cmd->add_option("--anchor-budget", build_anchor)->capture_default_str();
    build_cmd->add_option("--ext-budget", build_ext)->capture_default_str();
    build_cmd->add_option("--cap", build_cap)->capture_default_str();
    build_cmd->add_option("--seed", build_seed)->capture_default_str();
    build_cmd->add_option("--start", build_start, "start graph (default K1)");
    build_cmd->add_option("--out", build_out, "edge-list output path");
    build_cmd->add_option("--trace", build_trace, "trace JSON output path");

    // verify
    std::vector<std::string> verify_names;
    bool verify_all = false;
    int verify_max_order = -1;
    auto* verify_cmd = app.add_subcommand("verify", "run named verification oracles");
    verify_cmd->add_option("oracles", verify_names, "oracle names");
    verify_cmd->add_flag("--all", verify_all, "run every oracle");
    verify_cmd->add_option("--max-order", verify_max_order, "search-size override where supported");

    // catalog
    std::string catalog_filter;
    auto* catalog_cmd = app.add_subcommand("catalog", "known results table");
    catalog_cmd->add_option("filter", catalog_filter);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*images_cmd || *min_images_cmd) {
            bool minimal_only = static_cast<bool>(*min_images_cmd);
            Graph g = load_graph_arg(minimal_only ? min_images_spec : images_spec);
            json report = report_skeleton(minimal_only ? "minimal-images" : "images", {g});
            ImageSet images = minimal_only ? minimal_hom_images(g) : hom_images(g);
            report["result"]["images"] = image_set_json(images);
            emit(report, format, out_path);
            return 0;
        }
        if (*homclosed_cmd) {
            ConstraintSet cs = load_constraints(homclosed_specs);
            std::optional<ConstraintSet> hom_part;
            if (!hom_part_specs.empty()) hom_part = load_constraints(hom_part_specs);
            json report = report_skeleton("homclosed", cs.members);
            Verdict verdict = homclosure_verdict(cs, hom_part);
            report["result"]["status"] = verdict.status == VerdictStatus::universal_exists_acl_trivial
                                             ? "universal-exists-acl-trivial"
                                             : "inconclusive";
            report["result"]["reason"] = verdict.reason;
            if (verdict.witness) {
                json w;
                w["constraint_index"] = verdict.witness->constraint_index;
                w["partition"] = verdict.witness->partition;
                w["image"] = graph_json(verdict.witness->image);
                report["result"]["witness"] = w;
            }
            emit(report, format, out_path);
            return verdict.status == VerdictStatus::universal_exists_acl_trivial ? 0 : 1;
        }
        if (*construct_cmd) {
            Graph g = load_graph_arg(construct_spec);
            if (format == "dot") {
                std::string dot = write_dot(g);
                if (out_path.empty()) std::cout << dot;
                else std::ofstream(out_path) << dot;
                return 0;
            }
            json report = report_skeleton("construct", {g});
            report["result"]["order"] = g.order();
            report["result"]["edges"] = g.edge_count();
            report["result"]["connected"] = is_connected(g);
            report["result"]["edge_list"] = write_edge_list(g);
            emit(report, format, out_path);
            return 0;
        }
        if (*closure_cmd) {
            Graph g = load_graph_arg(closure_graph);
            json report = report_skeleton("closure", {g});
            ClosureReport rep;
            if (closure_star_n >= 0) {
                rep = cl_star(g, closure_set, closure_star_n);
            } else {
                if (closure_constraints.empty())
                    throw std::invalid_argument("closure needs --constraints");
                ConstraintSet cs = load_constraints(closure_constraints);
                PairFamily fam;
                if (closure_family == "path-basis")
                    fam = path_basis(closure_pathlen > 0 ? closure_pathlen : cs.k - 1);
                else if (closure_family == "solidity-basis")
                    fam = solidity_basis(cs);
                else if (closure_family == "proper-subgraph-basis")
                    fam = proper_subgraph_basis(cs);
                else
                    throw std::invalid_argument("unknown family: " + closure_family);
                rep = cl_family(g, closure_set, fam, cs, !closure_once);
            }
            report["result"] = closure_report_json(rep);
            emit(report, format, out_path);
            return 0;
        }
        if (*acl_cmd) {
            Graph g = load_graph_arg(acl_graph);
            ConstraintSet cs = load_constraints(acl_constraints);
            json report = report_skeleton("aclwitness", {g});
            auto witness = acl_witness(g, acl_set, cs);
            report["result"]["witness_found"] = witness.has_value();
            if (witness) {
                report["result"]["constraint_index"] = witness->constraint_index;
                report["result"]["partition"] = witness->partition;
                report["result"]["image_assignment"] = witness->image_assignment;
            }
            emit(report, format, out_path);
            return 0;
        }
        if (*build_cmd) {
            BuildConfig cfg = BuildConfig::defaults(load_constraints(build_constraints));
            cfg.rounds = build_rounds;
            cfg.anchor_budget = build_anchor;
            cfg.extension_budget = build_ext;
            cfg.vertex_cap = build_cap;
            cfg.seed = build_seed;
            if (!build_start.empty()) cfg.start = load_graph_arg(build_start);
            auto [g, trace] = build_approximant(cfg);
            json report = report_skeleton("build", {});
            report["note"] = "free-amalgam saturation only; non-free extensions are never realized";
            report["result"]["order"] = g.order();
            report["result"]["edges"] = g.edge_count();
            report["result"]["omits_constraints"] = omits(g, cfg.constraints);
            json rounds = json::array();
            for (const RoundTrace& rt : trace.rounds) {
                json r;
                r["realized"] = rt.realized.size();
                r["skipped"] = rt.skipped.size();
                r["cap_skips"] = rt.cap_skips;
                r["cap_hit"] = rt.cap_hit;
                rounds.push_back(r);
            }
            report["result"]["rounds"] = rounds;
            report["result"]["seed"] = cfg.seed;
            if (!build_out.empty()) save_edge_list_file(g, build_out);
            if (!build_trace.empty()) {
                json tj;
                tj["note"] = "free-amalgam saturation only; non-free extensions are never realized";
                json rs = json::array();
                for (const RoundTrace& rt : trace.rounds) {
                    json r;
                    json realized = json::array();
                    for (const RealizedProblem& p : rt.realized)
                        realized.push_back(
                            {{"anchor", p.anchor}, {"pattern", p.pattern_code}, {"placed", p.placed}});
                    json skipped = json::array();
                    for (const SkippedProblem& p : rt.skipped)
                        skipped.push_back(
                            {{"anchor", p.anchor}, {"pattern", p.pattern_code}, {"reason", p.reason}});
                    r["realized"] = realized;
                    r["skipped"] = skipped;
                    r["cap_hit"] = rt.cap_hit;
                    rs.push_back(r);
                }
                tj["rounds"] = rs;
                std::ofstream(build_trace) << tj.dump(2) << "\n";
            }
            if (format == "dot") {
                std::string dot = write_dot(g);
                if (out_path.empty()) std::cout << dot;
                else std::ofstream(out_path) << dot;
                return 0;
            }
            emit(report, format, out_path);
            return 0;
        }
        if (*verify_cmd) {
            std::vector<std::string> names = verify_all ? oracle_names() : verify_names;
            if (names.empty()) throw std::invalid_argument("verify needs oracle names or --all");
            json options = json::object();
            if (verify_max_order > 0) options["max-order"] = verify_max_order;
            json report;
            report["command"] = "verify";
            json results = json::array();
            bool all_pass = true;
            for (const std::string& name : names) {
                OracleResult result = run_oracle(name, options);
                all_pass = all_pass && result.pass;
                results.push_back(result.to_json());
                std::cerr << (result.pass ? "PASS" : "FAIL") << " " << name << "\n";
            }
            report["results"] = results;
            report["all_pass"] = all_pass;
            emit(report, format, out_path);
            return all_pass ? 0 : 1;
        }
        if (*catalog_cmd) {
            json report;
            report["command"] = "catalog";
            json rows = json::array();
            for (const CatalogEntry& e : catalog_lookup(catalog_filter)) {
                rows.push_back({{"family", e.family},
                                {"verdict", e.verdict},
                                {"source", e.source},
                                {"bound", e.bound}});
            }
            report["entries"] = rows;
            emit(report, format, out_path);
            return 0;
        }
    } catch (const cap_error& e) {
        std::cerr << "cap error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
