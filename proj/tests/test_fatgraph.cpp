#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "surfcyc/errors.hpp"
#include "surfcyc/fatgraph.hpp"
#include "surfcyc/fixtures.hpp"

using namespace surfcyc;

namespace {

const std::string& code_of(const std::function<void()>& fn) {
    static std::string code;
    try {
        fn();
        code = "<no throw>";
    } catch (const DomainError& e) {
        code = e.code();
    }
    return code;
}

HalfEdgePerm compose(const HalfEdgePerm& f, const HalfEdgePerm& g) {
    HalfEdgePerm out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = f[static_cast<std::size_t>(g[i])];
    }
    return out;
}

} // namespace

TEST_CASE("one-vertex bouquet whose boundary spells the commutator") {
    const FatGraph torus = fixtures::torus_graph();

    SUBCASE("shape is a genus-one surface with one boundary") {
        const GraphShape s = shape(torus);
        CHECK(s.vertices == 1);
        CHECK(s.edges == 2);
        CHECK(s.boundaries == 1);
        CHECK(s.genus == 1);
        CHECK(s.degrees == std::vector<long long>{4});
    }

    SUBCASE("the single boundary walk reads a b a^-1 b^-1") {
        const auto walks = boundary_walks(torus);
        REQUIRE(walks.size() == 1);
        const std::vector<SignedLabel> commutator{
            {1, false}, {2, false}, {1, true}, {2, true}};
        CHECK(walks[0] == commutator);
    }

    SUBCASE("the symmetry group is cyclic of order four") {
        const auto auts = automorphisms(torus);
        const std::vector<HalfEdgePerm> expected{
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}};
        CHECK(auts == expected);

        std::vector<int> orders;
        for (const auto& p : auts) orders.push_back(perm_order(p));
        std::sort(orders.begin(), orders.end());
        CHECK(orders == std::vector<int>{1, 2, 4, 4});

        // The quarter-turn generates everything: its powers exhaust the group.
        const HalfEdgePerm quarter{2, 3, 1, 0};
        HalfEdgePerm power{0, 1, 2, 3};
        for (int k = 0; k < 4; ++k) {
            CHECK(std::find(auts.begin(), auts.end(), power) != auts.end());
            power = compose(quarter, power);
        }
        CHECK(power == HalfEdgePerm{0, 1, 2, 3});
    }

    SUBCASE("the quarter-turn acts with sphere quotient and cones 2,4,4") {
        const InducedSignature sig = induced_signature(torus, {2, 3, 1, 0});
        CHECK(sig.order == 4);
        CHECK(sig.quotient_genus == 0);
        CHECK(sig.cone_orders == std::vector<long long>{2, 4, 4});
    }

    SUBCASE("the quarter-turn certifies an irreducible filling") {
        const IrreducibilityReport rep =
            filling_irreducibility_check(torus, {2, 3, 1, 0});
        CHECK(rep.irreducible);
        CHECK(rep.divisibility_ok);   // 4 divides 4*(2*1 - 2 + 1)
        CHECK(rep.order_bounds_ok);   // 3 <= 4 <= 6
        CHECK(rep.genus == 1);
        CHECK(rep.boundaries == 1);
        CHECK(rep.vertex_feasibility.feasible);
        CHECK(rep.vertex_feasibility.required_vertices == 1);
    }
}

TEST_CASE("bouquet rotation order controls the boundary count") {
    // Same two loops at one vertex, but interleaved as a,b,a^-1,b^-1 is
    // replaced by a,a^-1,b,b^-1: the surface degenerates to a sphere with
    // three boundary circles.
    const FatGraph sphere = build_graph({{0, 1, 2, 3}}, {{0, 1}, {2, 3}});

    const GraphShape s = shape(sphere);
    CHECK(s.vertices == 1);
    CHECK(s.edges == 2);
    CHECK(s.boundaries == 3);
    CHECK(s.genus == 0);

    const auto walks = boundary_walks(sphere);
    REQUIRE(walks.size() == 3);
    CHECK(walks[0] == std::vector<SignedLabel>{{1, false}});
    CHECK(walks[1] == std::vector<SignedLabel>{{1, true}, {2, true}});
    CHECK(walks[2] == std::vector<SignedLabel>{{2, false}});
}

TEST_CASE("twelve-letter filling words rebuild their ribbon graphs") {
    const std::vector<SignedLabel> word_a = fixtures::filling_word_a();
    const std::vector<SignedLabel> word_b = fixtures::filling_word_b();
    const FatGraph graph_a = from_boundary_word(word_a);
    const FatGraph graph_b = from_boundary_word(word_b);

    SUBCASE("both words fill a genus-two surface with one boundary") {
        for (const FatGraph* g : {&graph_a, &graph_b}) {
            const GraphShape s = shape(*g);
            CHECK(s.vertices == 3);
            CHECK(s.edges == 6);
            CHECK(s.boundaries == 1);
            CHECK(s.genus == 2);
            CHECK(s.degrees == std::vector<long long>(3, 4));
        }
    }

    SUBCASE("the boundary walk of the rebuilt graph is the original word") {
        const auto walks_a = boundary_walks(graph_a);
        REQUIRE(walks_a.size() == 1);
        CHECK(walks_a[0] == word_a);

        const auto walks_b = boundary_walks(graph_b);
        REQUIRE(walks_b.size() == 1);
        CHECK(walks_b[0] == word_b);
    }

    SUBCASE("the first word admits only one involution") {
        const auto auts = automorphisms(graph_a);
        REQUIRE(auts.size() == 2);
        std::vector<int> orders;
        for (const auto& p : auts) orders.push_back(perm_order(p));
        std::sort(orders.begin(), orders.end());
        CHECK(orders == std::vector<int>{1, 2});

        const HalfEdgePerm& involution =
            perm_order(auts[0]) == 2 ? auts[0] : auts[1];
        const InducedSignature sig = induced_signature(graph_a, involution);
        CHECK(sig.order == 2);
        CHECK(sig.quotient_genus == 0);
        CHECK(sig.cone_orders == std::vector<long long>(6, 2));

        // Six cone points rule the quotient out as a three-cone sphere even
        // though the quotient genus vanishes.
        const IrreducibilityReport rep =
            filling_irreducibility_check(graph_a, involution);
        CHECK_FALSE(rep.irreducible);
        CHECK(rep.divisibility_ok);       // 2 divides 4*(2*2 - 2 + 1)
        CHECK_FALSE(rep.order_bounds_ok); // 2 < 2*2 + 1
        CHECK(rep.genus == 2);
    }

    SUBCASE("the second word carries a quarter-turn with cones 2,2,4,4") {
        const auto auts = automorphisms(graph_b);
        REQUIRE(auts.size() == 4);
        std::vector<int> orders;
        for (const auto& p : auts) orders.push_back(perm_order(p));
        std::sort(orders.begin(), orders.end());
        CHECK(orders == std::vector<int>{1, 2, 4, 4});

        const auto it = std::find_if(
            auts.begin(), auts.end(),
            [](const HalfEdgePerm& p) { return perm_order(p) == 4; });
        REQUIRE(it != auts.end());
        const HalfEdgePerm quarter = *it;

        const InducedSignature sig = induced_signature(graph_b, quarter);
        CHECK(sig.order == 4);
        CHECK(sig.quotient_genus == 0);
        CHECK(sig.cone_orders == std::vector<long long>{2, 2, 4, 4});

        // The square of the quarter-turn is the group's unique involution.
        CHECK(perm_order(compose(quarter, quarter)) == 2);

        const IrreducibilityReport rep =
            filling_irreducibility_check(graph_b, quarter);
        CHECK_FALSE(rep.irreducible);     // four cones, not three
        CHECK(rep.divisibility_ok);       // 4 divides 12
        CHECK_FALSE(rep.order_bounds_ok); // 4 < 2*2 + 1
        CHECK(rep.vertex_feasibility.feasible);
        CHECK(rep.vertex_feasibility.required_vertices == 3);
    }
}

TEST_CASE("construction rejects malformed ribbon data") {
    SUBCASE("edge endpoints outside the dense half-edge range") {
        CHECK(code_of([] {
                  build_graph({{0, 2, 1, 3}}, {{0, 1}, {2, 4}});
              }) == "DanglingHalfEdge");
    }

    SUBCASE("half-edge covered by two edges") {
        CHECK(code_of([] {
                  build_graph({{0, 2, 1, 3}}, {{0, 1}, {1, 2}});
              }) == "DanglingHalfEdge");
    }

    SUBCASE("half-edge repeated inside a rotation") {
        CHECK(code_of([] {
                  build_graph({{0, 2, 1, 1}}, {{0, 1}, {2, 3}});
              }) == "InconsistentRotation");
    }

    SUBCASE("rotation mentions a half-edge no edge provides") {
        CHECK(code_of([] {
                  build_graph({{0, 1, 2}}, {{0, 1}});
              }) == "InconsistentRotation");
    }

    SUBCASE("graph without half-edges has no surface") {
        CHECK(code_of([] { shape(FatGraph{}); }) == "InvalidInput");
    }

    SUBCASE("two disjoint loops are not a surface graph") {
        const FatGraph two_loops = build_graph({{0, 1}, {2, 3}},
                                               {{0, 1}, {2, 3}});
        CHECK(code_of([&] { shape(two_loops); }) == "DisconnectedGraph");
        CHECK(code_of([&] { boundary_walks(two_loops); }) ==
              "DisconnectedGraph");
    }

    SUBCASE("boundary words of odd length are rejected") {
        CHECK(code_of([] {
                  from_boundary_word({{1, false}});
              }) == "InvalidInput");
    }

    SUBCASE("a label may not appear plain twice") {
        try {
            from_boundary_word({{1, false}, {1, false}});
            FAIL("expected a domain error");
        } catch (const DomainError& e) {
            CHECK(e.code() == "InvalidInput");
            CHECK(std::string(e.what()).find(
                      "exactly once plain and once inverted") !=
                  std::string::npos);
        }
    }

    SUBCASE("labels must be consecutive from one") {
        CHECK(code_of([] {
                  from_boundary_word({{1, false}, {3, true}});
              }) == "InvalidInput");
    }
}

TEST_CASE("symmetry arguments are validated before use") {
    const FatGraph torus = fixtures::torus_graph();

    SUBCASE("permutation of the wrong size") {
        CHECK(code_of([&] {
                  induced_signature(torus, {0, 1, 2});
              }) == "InvalidInput");
    }

    SUBCASE("permutation that breaks the rotation structure") {
        // Swapping only the second loop's halves commutes with the edge
        // involution but not with the vertex rotation.
        CHECK(code_of([&] {
                  induced_signature(torus, {0, 1, 3, 2});
              }) == "InvalidInput");
    }

    SUBCASE("the identity has no quotient data") {
        CHECK(code_of([&] {
                  induced_signature(torus, {0, 1, 2, 3});
              }) == "InvalidInput");
    }
}

TEST_CASE("vertex-count accounting for symmetric fillings") {
    SUBCASE("order twelve on genus five cannot fill with one boundary") {
        const FeasibilityReport rep =
            minimal_filling_vertex_feasibility(12, 5, 1, {6, 12, 12});
        CHECK_FALSE(rep.feasible);
        CHECK(rep.required_vertices == 9);
        REQUIRE(rep.subset_sums.size() == 5);
        CHECK(rep.subset_sums[0] == "12/6=2");
        CHECK(rep.subset_sums[1] == "12/12=1");
        CHECK(rep.subset_sums[2] == "12/6+12/12=3");
        CHECK(rep.subset_sums[3] == "12/12+12/12=2");
        CHECK(rep.subset_sums[4] == "12/6+12/12+12/12=4");
        CHECK(rep.explanation ==
              "required vertex count 9 is not a sum of distinct cone orbits "
              "(max 4) plus free orbits of size 12");
    }

    SUBCASE("the same cone data fills genus two") {
        const FeasibilityReport rep =
            minimal_filling_vertex_feasibility(12, 2, 1, {6, 12, 12});
        CHECK(rep.feasible);
        CHECK(rep.required_vertices == 3);
        CHECK(rep.explanation ==
              "required vertex count 3 = (12/6+12/12=3) + 0*12");
    }

    SUBCASE("cone orders must divide the symmetry order") {
        CHECK(code_of([] {
                  minimal_filling_vertex_feasibility(12, 2, 1, {5});
              }) == "InvalidInput");
        CHECK(code_of([] {
                  minimal_filling_vertex_feasibility(12, 2, 1, {1});
              }) == "InvalidInput");
    }
}

TEST_CASE("filling analysis demands four-regular graphs") {
    // A theta graph: two trivalent vertices joined by three edges.  Swapping
    // the vertices is a genuine order-two symmetry, but the degrees already
    // disqualify the graph.
    const FatGraph theta = build_graph({{0, 2, 4}, {1, 3, 5}},
                                       {{0, 1}, {2, 3}, {4, 5}});
    try {
        filling_irreducibility_check(theta, {1, 0, 3, 2, 5, 4});
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(e.code() == "NotFourRegular");
        CHECK(std::string(e.what()).find("4-regular") != std::string::npos);
    }
}
