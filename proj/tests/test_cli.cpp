#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "surfcyc/dataset.hpp"
#include "surfcyc/fixtures.hpp"
#include "surfcyc/json_io.hpp"

using namespace surfcyc;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const fs::path& workspace() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() /
                     ("surface_cyclic_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path write_doc(const std::string& name, const json& doc) {
    const fs::path path = workspace() / name;
    std::ofstream out(path, std::ios::binary);
    out << dump_json(doc, false);
    REQUIRE(out.good());
    return path;
}

RunResult run_cli(const std::string& args) {
    const fs::path out_path = workspace() / "stdout.txt";
    const fs::path err_path = workspace() / "stderr.txt";
    const std::string cmd = std::string("\"") + CLI_BINARY_PATH + "\" " + args +
                            " > \"" + out_path.string() + "\" 2> \"" +
                            err_path.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = (status == -1) ? -1 : WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

json parse(const std::string& text) {
    return json::parse(text);
}

} // namespace

TEST_CASE("validate reports the violated conditions") {
    const fs::path good =
        write_doc("sphere14.json", to_json(fixtures::fourteen_gon_action()));

    SUBCASE("a consistent data set") {
        const RunResult r = run_cli("validate --dataset " + good.string());
        REQUIRE(r.exit_code == 0);
        const json doc = parse(r.out);
        CHECK(doc.at("valid") == true);
        CHECK(doc.at("violations").empty());
    }

    SUBCASE("an inconsistent data set still exits cleanly") {
        const fs::path bad = write_doc(
            "bad.json",
            json{{"n", 6}, {"g0", 0}, {"rot", 1}, {"pairs", {{1, 2}}}});
        const RunResult r = run_cli("validate --dataset " + bad.string());
        REQUIRE(r.exit_code == 0);
        const json doc = parse(r.out);
        CHECK(doc.at("valid") == false);
        CHECK(doc.at("violations") == json({"i", "iv", "v", "genus"}));
    }

    SUBCASE("a missing file is a reported error") {
        const RunResult r =
            run_cli("validate --dataset " + (workspace() / "nope.json").string());
        CHECK(r.exit_code == 1);
        const json err = parse(r.err);
        CHECK(err.at("error") == "InvalidInput");
        CHECK(err.at("message").get<std::string>().find("cannot open file") !=
              std::string::npos);
    }

    SUBCASE("pretty and compact output carry the same document") {
        const RunResult compact = run_cli("validate --dataset " + good.string());
        const RunResult pretty =
            run_cli("validate --pretty --dataset " + good.string());
        REQUIRE(compact.exit_code == 0);
        REQUIRE(pretty.exit_code == 0);
        CHECK(parse(compact.out) == parse(pretty.out));
        CHECK(pretty.out.find('\n') != pretty.out.rfind('\n'));
    }
}

TEST_CASE("usage errors exit with status two") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("validate").exit_code == 2);
    CHECK(run_cli("enumerate --n 2 --g 2 --bogus").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);

    SUBCASE("fix needs exactly one input document") {
        CHECK(run_cli("fix").exit_code == 2);
        const fs::path d =
            write_doc("both.json", to_json(fixtures::pentagonal_target()));
        const RunResult r = run_cli("fix --dataset " + d.string() +
                                    " --necklace " + d.string());
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("exactly one") != std::string::npos);
    }
}

TEST_CASE("enumerate is byte-deterministic across worker counts") {
    const RunResult one = run_cli("enumerate --n 2 --g 2 --jobs 1");
    const RunResult four = run_cli("enumerate --n 2 --g 2 --jobs 4");
    REQUIRE(one.exit_code == 0);
    REQUIRE(four.exit_code == 0);
    CHECK(one.out == four.out);

    const json doc = parse(one.out);
    CHECK(doc.at("count") == 2);
    const json expected = json::array(
        {json{{"n", 2},
              {"g0", 0},
              {"rot", 0},
              {"pairs", {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}}},
         json{{"n", 2}, {"g0", 1}, {"rot", 0}, {"pairs", {{1, 2}, {1, 2}}}}});
    CHECK(doc.at("data_sets") == expected);
}

TEST_CASE("classify describes the action and its fixed locus") {
    SUBCASE("a spherical three-orbit action") {
        const fs::path f =
            write_doc("c14.json", to_json(fixtures::fourteen_gon_action()));
        const RunResult r = run_cli("classify --dataset " + f.string());
        REQUIRE(r.exit_code == 0);
        const json doc = parse(r.out);
        CHECK(doc.at("kind") == "Type1");
        CHECK(doc.at("rotational_form") == "none");
        CHECK(doc.at("spherical") == true);
        CHECK(doc.at("genus") == 3);
        CHECK(doc.at("irreducible") == true);
        CHECK(doc.at("dim") == 0);
        CHECK_FALSE(doc.contains("reduction_orbit_counts"));
        REQUIRE(doc.at("orbits").size() == 3);
        CHECK(doc.at("orbits")[0] == json{{"orbit_size", 7},
                                          {"cone_order", 2},
                                          {"rotation_numerator", 1}});
        CHECK(doc.at("orbits")[2] == json{{"orbit_size", 1},
                                          {"cone_order", 14},
                                          {"rotation_numerator", 3}});
    }

    SUBCASE("a reducible paired rotation") {
        const fs::path f = write_doc(
            "paired.json",
            json{{"n", 5}, {"g0", 1}, {"pairs", {{1, 5}, {4, 5}}}});
        const RunResult r = run_cli("classify --dataset " + f.string());
        REQUIRE(r.exit_code == 0);
        const json doc = parse(r.out);
        CHECK(doc.at("kind") == "Rotational");
        CHECK(doc.at("rotational_form") == "paired");
        CHECK(doc.at("genus") == 5);
        CHECK(doc.at("irreducible") == false);
        CHECK(doc.at("dim") == 4);
        CHECK(doc.at("reduction_orbit_counts") == json({2, 2}));
    }
}

TEST_CASE("composition scripts replay a six-bead chain") {
    const auto beads = fixtures::chain_beads();
    json script = json::array();
    script.push_back({{"op", "start"}, {"dataset", to_json(beads[0])}});
    script.push_back(
        {{"op", "pair"}, {"dataset", to_json(beads[1])}, {"left", 3}, {"right", 3}});
    script.push_back(
        {{"op", "pair"}, {"dataset", to_json(beads[2])}, {"left", 3}, {"right", 2}});
    script.push_back({{"op", "full"}, {"dataset", to_json(beads[3])}});
    script.push_back(
        {{"op", "pair"}, {"dataset", to_json(beads[4])}, {"left", 5}, {"right", 2}});
    script.push_back(
        {{"op", "pair"}, {"dataset", to_json(beads[5])}, {"left", 9}, {"right", 2}});

    SUBCASE("the full chain lands on the ten-orbit composite") {
        const fs::path f = write_doc("chain.json", script);
        const RunResult r = run_cli("compose " + f.string());
        REQUIRE(r.exit_code == 0);
        const json doc = parse(r.out);
        CHECK(doc.at("trace") == json({20, 37, 57, 115, 135, 155}));
        CHECK(doc.at("result") == to_json(fixtures::ten_pair_composite()));
    }

    SUBCASE("an incompatible site aborts with the site error") {
        json broken = json::array({script[0], script[1]});
        broken[1]["left"] = 1; // joins a period-21 site to a period-42 site
        const fs::path f = write_doc("broken.json", broken);
        const RunResult r = run_cli("compose " + f.string());
        CHECK(r.exit_code == 1);
        CHECK(parse(r.err).at("error") == "IncompatibleSites");
    }

    SUBCASE("scripts must begin with a start move") {
        const fs::path f = write_doc(
            "headless.json", json::array({json{{"op", "add"}, {"count", 1}}}));
        const RunResult r = run_cli("compose " + f.string());
        CHECK(r.exit_code == 1);
        CHECK(parse(r.err).at("error") == "InvalidInput");
    }
}

TEST_CASE("decompose emits a scheme with its genus trace") {
    const fs::path f = write_doc(
        "free7.json", json{{"n", 7}, {"g0", 2}, {"rot", 3}, {"pairs", json::array()}});
    const RunResult r = run_cli("decompose --dataset " + f.string());
    REQUIRE(r.exit_code == 0);
    const json doc = parse(r.out);
    const json& nk = doc.at("necklace");
    REQUIRE(nk.at("beads").size() == 1);
    CHECK(nk.at("beads")[0] ==
          json{{"n", 7}, {"g0", 0}, {"rot", 0}, {"pairs", {{3, 7}, {4, 7}}}});
    CHECK(nk.at("links").empty());
    CHECK(nk.at("self_pairs") == json({{1, 2}}));
    CHECK(nk.at("g_add") == 1);
    CHECK(nk.at("g_sub") == 0);
    CHECK(doc.at("trace") == json({0, 1, 8}));
}

TEST_CASE("fix agrees between a necklace file and its data set") {
    const fs::path dataset =
        write_doc("pent.json", to_json(fixtures::pentagonal_target()));
    const fs::path necklace =
        write_doc("pent_neck.json", to_json(fixtures::pentagonal_single()));

    const RunResult from_dataset = run_cli("fix --dataset " + dataset.string());
    const RunResult from_necklace = run_cli("fix --necklace " + necklace.string());
    REQUIRE(from_dataset.exit_code == 0);
    REQUIRE(from_necklace.exit_code == 0);

    const json a = parse(from_dataset.out);
    const json b = parse(from_necklace.out);
    CHECK(a == b);
    CHECK(a.at("dim") == 6);
}

TEST_CASE("polygon writes matching renderings and metrics") {
    const fs::path f =
        write_doc("c14_poly.json", to_json(fixtures::fourteen_gon_action()));
    const fs::path svg = workspace() / "disk.svg";
    const fs::path metrics = workspace() / "metrics.json";

    const RunResult r = run_cli("polygon --dataset " + f.string() + " --svg " +
                                svg.string() + " --metrics " + metrics.string());
    REQUIRE(r.exit_code == 0);

    const std::string picture = slurp(svg);
    CHECK(picture.rfind("<svg xmlns", 0) == 0);
    CHECK(picture.find("<title>14-gon, rotation step 1 of 14</title>") !=
          std::string::npos);

    const json doc = parse(r.out);
    CHECK(doc.at("sides") == 14);
    CHECK(doc.at("genus_check") == 3);
    CHECK(doc.at("partner").size() == 14);
    CHECK(doc.at("vertex_classes") == json({7, 7}));
    CHECK(parse(slurp(metrics)) == doc);

    SUBCASE("renderings are byte-stable across runs") {
        const fs::path svg2 = workspace() / "disk2.svg";
        const RunResult again =
            run_cli("polygon --dataset " + f.string() + " --svg " + svg2.string());
        REQUIRE(again.exit_code == 0);
        CHECK(slurp(svg2) == picture);
    }

    SUBCASE("genus-zero actions have no hyperbolic polygon") {
        const fs::path flat = write_doc(
            "flat.json",
            json{{"n", 4}, {"g0", 0}, {"pairs", {{1, 2}, {1, 4}, {1, 4}}}});
        const RunResult bad = run_cli("polygon --dataset " + flat.string());
        CHECK(bad.exit_code == 1);
        CHECK(parse(bad.err).at("error") == "NonHyperbolic");
    }
}

TEST_CASE("fatgraph reports shape, symmetries, and the filling verdict") {
    const fs::path f =
        write_doc("torus.json", to_json(fixtures::torus_graph()));
    const RunResult r = run_cli("fatgraph --graph " + f.string() +
                                " --auts --signature --check-theorem");
    REQUIRE(r.exit_code == 0);
    const json doc = parse(r.out);

    CHECK(doc.at("shape").at("genus") == 1);
    CHECK(doc.at("shape").at("boundaries") == 1);
    CHECK(doc.at("boundary_walks") == json({{1, 2, -1, -2}}));

    const json& auts = doc.at("automorphisms");
    CHECK(auts.at("count") == 4);
    CHECK(auts.at("orders") == json({1, 2, 4, 4}));

    REQUIRE(doc.at("signatures").size() == 3);
    for (const auto& sig : doc.at("signatures")) {
        CHECK(sig.at("quotient_genus") == 0);
        CHECK(sig.contains("perm"));
    }

    const json& verdict = doc.at("theorem_check");
    CHECK(verdict.at("irreducible") == true);
    CHECK(verdict.at("signature").at("cone_orders") == json({2, 4, 4}));
    CHECK(verdict.at("vertex_feasibility").at("feasible") == true);
}
