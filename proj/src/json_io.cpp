#include "surfcyc/json_io.hpp"

#include <array>
#include <fstream>

namespace surfcyc {

namespace {

long long int_field(const json& j, const char* key, bool required,
                    long long fallback) {
    if (!j.contains(key)) {
        if (required) {
            throw DomainError(errc::invalid_input,
                              std::string("missing field \"") + key + "\"");
        }
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_number_integer()) {
        throw DomainError(errc::invalid_input,
                          std::string("field \"") + key + "\" must be an integer");
    }
    return v.get<long long>();
}

std::vector<std::array<long long, 2>> int_pairs_field(const json& j,
                                                      const char* key) {
    std::vector<std::array<long long, 2>> out;
    if (!j.contains(key)) return out;
    const auto& v = j.at(key);
    if (!v.is_array()) {
        throw DomainError(errc::invalid_input,
                          std::string("field \"") + key + "\" must be an array");
    }
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw DomainError(errc::invalid_input,
                              std::string("entries of \"") + key +
                                  "\" must be two-integer arrays");
        }
        out.push_back({e[0].get<long long>(), e[1].get<long long>()});
    }
    return out;
}

} // namespace

json to_json(const DataSet& d) {
    const DataSet c = canonicalize(d);
    json pairs = json::array();
    for (const auto& p : c.pairs) pairs.push_back({p.c, p.m});
    return json{{"n", c.n}, {"g0", c.g0}, {"rot", c.rot}, {"pairs", pairs}};
}

json to_json(const ValidationReport& r) {
    return json{{"valid", r.valid}, {"violations", r.violations}};
}

json to_json(const Necklace& nk) {
    json beads = json::array();
    for (const auto& b : nk.beads) beads.push_back(to_json(b));
    json links = json::array();
    for (const auto& l : nk.links) links.push_back({l.left, l.right});
    json selfs = json::array();
    for (const auto& s : nk.self_pairs) selfs.push_back({s.x, s.y});
    return json{{"beads", beads},
                {"links", links},
                {"self_pairs", selfs},
                {"g_add", nk.g_add},
                {"g_sub", nk.g_sub}};
}

json to_json(const FixDescriptor& f) {
    return json{{"points", f.points},
                {"num_bounded", f.num_bounded},
                {"num_free", f.num_free},
                {"den_bounded", f.den_bounded},
                {"den_free", f.den_free},
                {"dim", f.dim}};
}

json to_json(const FatGraph& g) {
    json vertices = json::array();
    for (const auto& rot : g.vertices) vertices.push_back(rot);
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return json{{"vertices", vertices}, {"edges", edges}};
}

json to_json(const GraphShape& s) {
    return json{{"vertices", s.vertices},
                {"edges", s.edges},
                {"boundaries", s.boundaries},
                {"genus", s.genus},
                {"degrees", s.degrees}};
}

json to_json(const InducedSignature& sig) {
    return json{{"order", sig.order},
                {"quotient_genus", sig.quotient_genus},
                {"cone_orders", sig.cone_orders}};
}

json to_json(const FeasibilityReport& r) {
    return json{{"feasible", r.feasible},
                {"required_vertices", r.required_vertices},
                {"subset_sums", r.subset_sums},
                {"explanation", r.explanation}};
}

json to_json(const IrreducibilityReport& r) {
    return json{{"signature", to_json(r.signature)},
                {"irreducible", r.irreducible},
                {"divisibility_ok", r.divisibility_ok},
                {"order_bounds_ok", r.order_bounds_ok},
                {"genus", r.genus},
                {"boundaries", r.boundaries},
                {"vertex_feasibility", to_json(r.vertex_feasibility)}};
}

json to_json(const PolygonSpec& spec, const PolygonMetrics& m,
             const PairingWord& w, long long genus_check) {
    return json{{"sides", spec.sides},
                {"rotation_steps", spec.rotation_steps},
                {"theta", spec.theta},
                {"n", spec.n},
                {"cone_orders", {spec.n1, spec.n2, spec.n3}},
                {"genus", spec.genus},
                {"angles", spec.corner_angles},
                {"side_length", m.side_length},
                {"radii", m.radii},
                {"area", m.area},
                {"apex_angle_sum", m.apex_angle_sum},
                {"side_length_check", m.side_length_check},
                {"partner", w.partner},
                {"interpretation", w.interpretation},
                {"genus_check", genus_check}};
}

DataSet data_set_from_json(const json& j) {
    if (!j.is_object()) {
        throw DomainError(errc::invalid_input, "data set document must be an object");
    }
    DataSet d;
    d.n = int_field(j, "n", true, 1);
    d.g0 = int_field(j, "g0", true, 0);
    d.rot = int_field(j, "rot", false, 0);
    for (const auto& [c, m] : int_pairs_field(j, "pairs")) {
        d.pairs.push_back(ConePair{c, m});
    }
    return d;
}

Necklace necklace_from_json(const json& j) {
    if (!j.is_object()) {
        throw DomainError(errc::invalid_input, "necklace document must be an object");
    }
    Necklace nk;
    if (j.contains("beads")) {
        if (!j.at("beads").is_array()) {
            throw DomainError(errc::invalid_input, "\"beads\" must be an array");
        }
        for (const auto& b : j.at("beads")) nk.beads.push_back(data_set_from_json(b));
    }
    for (const auto& [l, r] : int_pairs_field(j, "links")) {
        nk.links.push_back(ChainLink{l, r});
    }
    for (const auto& [x, y] : int_pairs_field(j, "self_pairs")) {
        nk.self_pairs.push_back(SelfSite{x, y});
    }
    nk.g_add = int_field(j, "g_add", false, 0);
    nk.g_sub = int_field(j, "g_sub", false, 0);
    return nk;
}

FatGraph fat_graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
        !j.at("vertices").is_array()) {
        throw DomainError(errc::invalid_input,
                          "graph document must be an object with \"vertices\" and "
                          "\"edges\" arrays");
    }
    std::vector<std::vector<int>> rotations;
    for (const auto& rot : j.at("vertices")) {
        if (!rot.is_array()) {
            throw DomainError(errc::invalid_input,
                              "each vertex rotation must be an array of half-edge ids");
        }
        std::vector<int> r;
        for (const auto& h : rot) {
            if (!h.is_number_integer()) {
                throw DomainError(errc::invalid_input,
                                  "half-edge ids must be integers");
            }
            r.push_back(h.get<int>());
        }
        rotations.push_back(std::move(r));
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : int_pairs_field(j, "edges")) {
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return build_graph(std::move(rotations), std::move(edges));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError(errc::invalid_input, "cannot open file: " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DomainError(errc::invalid_input,
                          "cannot parse " + path + ": " + e.what());
    }
}

DataSet data_set_from_file(const std::string& path) {
    return data_set_from_json(load_json_file(path));
}

Necklace necklace_from_file(const std::string& path) {
    return necklace_from_json(load_json_file(path));
}

FatGraph fat_graph_from_file(const std::string& path) {
    return fat_graph_from_json(load_json_file(path));
}

std::string dump_json(const json& j, bool pretty) {
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

} // namespace surfcyc
