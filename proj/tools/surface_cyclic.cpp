#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surfcyc/acceptance.hpp"
#include "surfcyc/compatibility.hpp"
#include "surfcyc/dataset.hpp"
#include "surfcyc/fatgraph.hpp"
#include "surfcyc/fixtures.hpp"
#include "surfcyc/hyperbolic.hpp"
#include "surfcyc/json_io.hpp"
#include "surfcyc/necklace.hpp"

namespace {

using surfcyc::json;

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    if (!out) {
        throw surfcyc::DomainError(surfcyc::errc::invalid_input,
                                   "cannot write " + path);
    }
}

long long move_int(const json& move, const char* key) {
    if (!move.contains(key) || !move.at(key).is_number_integer()) {
        throw surfcyc::DomainError(surfcyc::errc::invalid_input,
                                   std::string("move needs integer field \"") + key +
                                       "\"");
    }
    return move.at(key).get<long long>();
}

const char* form_name(surfcyc::RotationalForm f) {
    switch (f) {
        case surfcyc::RotationalForm::Free: return "free";
        case surfcyc::RotationalForm::Paired: return "paired";
        case surfcyc::RotationalForm::None: break;
    }
    return "none";
}

json run_validate(const std::string& dataset_path) {
    const auto d = surfcyc::data_set_from_file(dataset_path);
    return to_json(surfcyc::validate(d));
}

json run_enumerate(long long n, long long g, int jobs) {
    const auto sets = surfcyc::enumerate_actions(n, g, jobs);
    json arr = json::array();
    for (const auto& d : sets) arr.push_back(to_json(d));
    return json{{"n", n},
                {"g", g},
                {"count", static_cast<long long>(sets.size())},
                {"data_sets", arr}};
}

json run_classify(const std::string& dataset_path) {
    const auto d = surfcyc::canonicalize(surfcyc::data_set_from_file(dataset_path));
    const auto cls = surfcyc::classify(d);
    const long long g = surfcyc::genus(d);
    json doc{{"kind", surfcyc::to_string(cls.kind)},
             {"rotational_form", form_name(cls.form)},
             {"spherical", cls.spherical},
             {"genus", g}};
    json orbits = json::array();
    for (const auto& o : surfcyc::orbit_structure(d)) {
        orbits.push_back({{"orbit_size", o.orbit_size},
                          {"cone_order", o.cone_order},
                          {"rotation_numerator", o.rotation_numerator}});
    }
    doc["orbits"] = orbits;
    if (g >= 1) doc["irreducible"] = surfcyc::is_irreducible(d);
    if (g >= 2) {
        try {
            doc["dim"] = surfcyc::fix_dimension_harvey(d);
        } catch (const surfcyc::DomainError&) {
            // dimension undefined for this shape; field omitted
        }
    }
    try {
        const auto [curves, parts] = surfcyc::reduction_orbit_counts(d);
        doc["reduction_orbit_counts"] = {curves, parts};
    } catch (const surfcyc::DomainError&) {
        // irreducible: no reduction system; field omitted
    }
    return doc;
}

json run_compose(const std::string& script_path) {
    const json script = surfcyc::load_json_file(script_path);
    if (!script.is_array() || script.empty()) {
        throw surfcyc::DomainError(surfcyc::errc::invalid_input,
                                   "composition script must be a nonempty array of "
                                   "moves");
    }
    surfcyc::DataSet acc;
    bool started = false;
    std::vector<long long> trace;
    for (const auto& move : script) {
        if (!move.is_object() || !move.contains("op") || !move.at("op").is_string()) {
            throw surfcyc::DomainError(surfcyc::errc::invalid_input,
                                       "each move must be an object with an \"op\"");
        }
        const std::string op = move.at("op").get<std::string>();
        if (op == "start") {
            if (started) {
                throw surfcyc::DomainError(surfcyc::errc::invalid_input,
                                           "\"start\" must be the first move only");
            }
            acc = surfcyc::canonicalize(
                surfcyc::data_set_from_json(move.at("dataset")));
            surfcyc::require_valid(acc);
            started = true;
            trace.push_back(surfcyc::genus(acc));
            continue;
        }
        if (!started) {
            throw surfcyc::DomainError(surfcyc::errc::invalid_input,
                                       "the first move must be \"start\"");
        }
        if (op == "pair") {
            const surfcyc::CompatSite site{move_int(move, "left"),
                                           move_int(move, "right")};
            acc = surfcyc::compose_pair(
                      acc, surfcyc::data_set_from_json(move.at("dataset")), site)
                      .result;
        } else if (op == "full") {
            acc = surfcyc::compose_full(
                      acc, surfcyc::data_set_from_json(move.at("dataset")))
                      .result;
        } else if (op == "self") {
            acc = surfcyc::compose_self(acc, move_int(move, "x"), move_int(move, "y"))
                      .result;
        } else if (op == "add") {
            acc = surfcyc::toral_add(acc, move.value("count", 1));
        } else if (op == "sub") {
            acc = surfcyc::toral_subtract(acc, move.value("count", 1));
        } else {
            throw surfcyc::DomainError(surfcyc::errc::invalid_input,
                                       "unknown op \"" + op + "\"");
        }
        trace.push_back(surfcyc::genus(acc));
    }
    return json{{"result", to_json(acc)}, {"trace", trace}};
}

json run_decompose(const std::string& dataset_path) {
    const auto d = surfcyc::data_set_from_file(dataset_path);
    const auto nk = surfcyc::decompose(d);
    const auto rr = surfcyc::realize(nk);
    return json{{"necklace", to_json(nk)}, {"trace", rr.trace}};
}

json run_fix(const std::string& dataset_path, const std::string& necklace_path) {
    if (!necklace_path.empty()) {
        return to_json(surfcyc::fix_descriptor(surfcyc::necklace_from_file(necklace_path)));
    }
    const auto d = surfcyc::data_set_from_file(dataset_path);
    return to_json(surfcyc::fix_descriptor(surfcyc::decompose(d)));
}

json run_polygon(const std::string& dataset_path, const std::string& svg_path,
                 const std::string& metrics_path, bool pretty) {
    const auto d = surfcyc::data_set_from_file(dataset_path);
    const auto spec = surfcyc::polygon_spec(d);
    const auto metrics = surfcyc::solve_metrics(spec);
    const auto word = surfcyc::pairing_word(d);
    const auto qc = surfcyc::quotient_check(word);
    json doc = to_json(spec, metrics, word, qc.genus);
    doc["vertex_classes"] = qc.vertex_classes;
    if (!svg_path.empty()) {
        write_file(svg_path, surfcyc::render_svg(spec, metrics, word));
    }
    if (!metrics_path.empty()) {
        write_file(metrics_path, surfcyc::dump_json(doc, pretty));
    }
    return doc;
}

json run_fatgraph(const std::string& graph_path, bool auts, bool signature,
                  bool check_theorem) {
    const auto g = surfcyc::fat_graph_from_file(graph_path);
    const auto sh = surfcyc::shape(g);
    json walks = json::array();
    for (const auto& walk : surfcyc::boundary_walks(g)) {
        json w = json::array();
        for (const auto& sl : walk) w.push_back(sl.inverse ? -sl.label : sl.label);
        walks.push_back(w);
    }
    json doc{{"shape", to_json(sh)}, {"boundary_walks", walks}};

    if (!auts && !signature && !check_theorem) return doc;
    const auto group = surfcyc::automorphisms(g);
    if (auts) {
        json perms = json::array();
        json orders = json::array();
        for (const auto& p : group) {
            perms.push_back(p);
            orders.push_back(surfcyc::perm_order(p));
        }
        doc["automorphisms"] = {{"count", static_cast<long long>(group.size())},
                                {"orders", orders},
                                {"perms", perms}};
    }
    if (signature) {
        json sigs = json::array();
        for (const auto& p : group) {
            if (surfcyc::perm_order(p) < 2) continue;
            json s = to_json(surfcyc::induced_signature(g, p));
            s["perm"] = p;
            sigs.push_back(s);
        }
        doc["signatures"] = sigs;
    }
    if (check_theorem) {
        const surfcyc::HalfEdgePerm* best = nullptr;
        int best_order = 1;
        for (const auto& p : group) {
            const int o = surfcyc::perm_order(p);
            if (o > best_order) {
                best_order = o;
                best = &p;
            }
        }
        if (best == nullptr) {
            throw surfcyc::DomainError(surfcyc::errc::invalid_input,
                                       "graph has no symmetry of order >= 2 to check");
        }
        doc["theorem_check"] = to_json(surfcyc::filling_irreducibility_check(g, *best));
    }
    return doc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic surface actions: data sets, decomposition schemes, "
                 "hyperbolic polygons, and filling graphs"};
    app.require_subcommand(1);

    std::string dataset_path, necklace_path, graph_path, svg_path, metrics_path,
        script_path;
    long long n = 0, g = 0;
    int jobs = 1;
    bool pretty = false;
    bool auts = false, signature = false, check_theorem = false;

    auto add_format = [&](CLI::App* cmd) {
        auto* p = cmd->add_flag("--pretty", pretty, "indent JSON output");
        auto* c = cmd->add_flag("--json", "compact JSON output (the default)");
        p->excludes(c);
        c->excludes(p);
    };

    auto* validate_cmd = app.add_subcommand("validate", "check a data set file");
    validate_cmd->add_option("--dataset", dataset_path, "data set JSON file")
        ->required();
    add_format(validate_cmd);

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "list all degree-n actions of genus g");
    enumerate_cmd->add_option("--n", n, "action degree")->required();
    enumerate_cmd->add_option("--g", g, "surface genus")->required();
    enumerate_cmd->add_option("--jobs", jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    add_format(enumerate_cmd);

    auto* classify_cmd =
        app.add_subcommand("classify", "kind, orbits, and dimension of a data set");
    classify_cmd->add_option("--dataset", dataset_path, "data set JSON file")
        ->required();
    add_format(classify_cmd);

    auto* compose_cmd =
        app.add_subcommand("compose", "run a composition script (array of moves)");
    compose_cmd->add_option("script", script_path, "script JSON file")->required();
    add_format(compose_cmd);

    auto* decompose_cmd =
        app.add_subcommand("decompose", "decompose a data set into a necklace");
    decompose_cmd->add_option("--dataset", dataset_path, "data set JSON file")
        ->required();
    add_format(decompose_cmd);

    auto* fix_cmd = app.add_subcommand(
        "fix", "fixed-locus factor counts of a necklace (or of a data set's "
               "decomposition)");
    fix_cmd->add_option("--dataset", dataset_path, "data set JSON file");
    fix_cmd->add_option("--necklace", necklace_path, "necklace JSON file");
    add_format(fix_cmd);

    auto* polygon_cmd = app.add_subcommand(
        "polygon", "fundamental polygon, metrics, pairing, and rendering");
    polygon_cmd->add_option("--dataset", dataset_path, "data set JSON file")
        ->required();
    polygon_cmd->add_option("--svg", svg_path, "write the disk rendering here");
    polygon_cmd->add_option("--metrics", metrics_path, "write the metrics JSON here");
    add_format(polygon_cmd);

    auto* fatgraph_cmd = app.add_subcommand("fatgraph", "ribbon graph analysis");
    fatgraph_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
    fatgraph_cmd->add_flag("--auts", auts, "list the symmetry group");
    fatgraph_cmd->add_flag("--signature", signature,
                           "induced quotient signatures of the symmetries");
    fatgraph_cmd->add_flag("--check-theorem", check_theorem,
                           "irreducibility verdict for the top symmetry");
    add_format(fatgraph_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    verify_cmd->add_option("--jobs", jobs, "worker threads")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        json doc;
        if (validate_cmd->parsed()) {
            doc = run_validate(dataset_path);
        } else if (enumerate_cmd->parsed()) {
            doc = run_enumerate(n, g, jobs);
        } else if (classify_cmd->parsed()) {
            doc = run_classify(dataset_path);
        } else if (compose_cmd->parsed()) {
            doc = run_compose(script_path);
        } else if (decompose_cmd->parsed()) {
            doc = run_decompose(dataset_path);
        } else if (fix_cmd->parsed()) {
            if (dataset_path.empty() == necklace_path.empty()) {
                std::cerr << "fix requires exactly one of --dataset or --necklace\n";
                return 2;
            }
            doc = run_fix(dataset_path, necklace_path);
        } else if (polygon_cmd->parsed()) {
            doc = run_polygon(dataset_path, svg_path, metrics_path, pretty);
        } else if (fatgraph_cmd->parsed()) {
            doc = run_fatgraph(graph_path, auts, signature, check_theorem);
        } else if (verify_cmd->parsed()) {
            return surfcyc::print_acceptance(std::cout, jobs);
        }
        std::cout << surfcyc::dump_json(doc, pretty);
        return 0;
    } catch (const surfcyc::DomainError& e) {
        const json err{{"error", e.code()}, {"message", e.what()}};
        std::cerr << surfcyc::dump_json(err, false);
        return 1;
    } catch (const std::exception& e) {
        const json err{{"error", "InternalError"}, {"message", e.what()}};
        std::cerr << surfcyc::dump_json(err, false);
        return 1;
    }
}
