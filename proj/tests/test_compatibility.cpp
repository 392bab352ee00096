#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "surfcyc/compatibility.hpp"
#include "surfcyc/errors.hpp"
#include "surfcyc/fixtures.hpp"

using namespace surfcyc;

namespace {

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const DomainError& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("the degree-42 chain assembles step by step into the ten-pair composite") {
    const auto beads = fixtures::chain_beads();
    REQUIRE(beads.size() == 6);

    // Glue bead 1 and bead 2 along their third canonical pairs (19,42)+(23,42).
    auto step1 = compose_pair(beads[0], beads[1], {3, 3});
    CHECK(step1.trace == std::vector<long long>{20, 17, 37});
    CHECK(step1.curves_glued == 1);
    CHECK(step1.amalgam == 1);
    CHECK(canonicalize(step1.result).pairs ==
          std::vector<ConePair>{{5, 6}, {2, 21}, {13, 21}, {19, 42}});

    // The accumulated pair (13,21) sits at canonical position 3; bead 3
    // offers (8,21) at position 2.
    auto step2 = compose_pair(step1.result, beads[2], {3, 2});
    CHECK(step2.trace == std::vector<long long>{37, 19, 57});
    CHECK(step2.curves_glued == 2);

    // Bead 4 joins along a free orbit: every pair survives.
    auto step3 = compose_full(step2.result, beads[3]);
    CHECK(step3.trace == std::vector<long long>{57, 17, 115});
    CHECK(step3.curves_glued == 42);
    CHECK(step3.amalgam == 41);
    CHECK(step3.result.pairs.size() == 8);

    // (11,21) is accumulated position 5; bead 5 offers (10,21) at position 2.
    auto step4 = compose_pair(step3.result, beads[4], {5, 2});
    CHECK(step4.trace == std::vector<long long>{115, 19, 135});

    // (25,42) is accumulated position 9; bead 6 offers (17,42) at position 2.
    auto step5 = compose_pair(step4.result, beads[5], {9, 2});
    CHECK(step5.trace == std::vector<long long>{135, 20, 155});
    CHECK(step5.result == fixtures::ten_pair_composite());
    CHECK(genus(step5.result) == 155);
    CHECK(step5.result.g0 == 0);
}

TEST_CASE("a (0,0) site is the full join") {
    const auto beads = fixtures::chain_beads();
    const auto via_site = compose_pair(beads[0], beads[1], {0, 0});
    const auto direct = compose_full(beads[0], beads[1]);
    CHECK(via_site.result == direct.result);
    CHECK(via_site.amalgam == direct.amalgam);
    CHECK(via_site.curves_glued == direct.curves_glued);
    CHECK(direct.trace == std::vector<long long>{20, 17, 78});
}

TEST_CASE("pair joins demand equal degrees and genuinely complementary sites") {
    const auto beads = fixtures::chain_beads();
    SUBCASE("degree mismatch") {
        const DataSet other{5, 1, 0, {{1, 5}, {4, 5}}};
        CHECK(code_of([&] { compose_pair(beads[0], other, {1, 1}); }) ==
              std::string(errc::order_mismatch));
    }
    SUBCASE("different periods at the chosen sites") {
        // (2,21) against (23,42).
        CHECK(code_of([&] { compose_pair(beads[0], beads[1], {1, 3}); }) ==
              std::string(errc::incompatible_sites));
    }
    SUBCASE("equal periods but residues not summing to zero") {
        // (19,42) against (13,42): 19 + 13 = 32.
        CHECK(code_of([&] { compose_pair(beads[0], beads[3], {3, 3}); }) ==
              std::string(errc::incompatible_sites));
    }
    SUBCASE("site positions out of range") {
        CHECK(code_of([&] { compose_pair(beads[0], beads[1], {4, 3}); }) ==
              std::string(errc::incompatible_sites));
    }
}

TEST_CASE("self joins consume two complementary pairs and add a quotient handle") {
    const auto composite = fixtures::ten_pair_composite();
    // Canonical positions 8 and 9 hold (19,42) and (23,42); 19 + 23 = 42.
    const auto joined = compose_self(composite, 8, 9);
    CHECK(joined.trace == std::vector<long long>{155, 156});
    CHECK(joined.curves_glued == 1);
    CHECK(joined.result.g0 == 1);
    CHECK(joined.result.pairs.size() == 8);
    CHECK(genus(joined.result) == 156);

    SUBCASE("sites must be ordered and distinct") {
        CHECK(code_of([&] { compose_self(composite, 9, 8); }) ==
              std::string(errc::incompatible_sites));
        CHECK(code_of([&] { compose_self(composite, 8, 8); }) ==
              std::string(errc::incompatible_sites));
    }
    SUBCASE("non-complementary residues") {
        // Positions 7 and 8 hold (13,42) and (19,42): 13 + 19 = 32.
        CHECK(code_of([&] { compose_self(composite, 7, 8); }) ==
              std::string(errc::incompatible_sites));
    }
    SUBCASE("three cone pairs are too few to self-join") {
        CHECK(code_of([&] { compose_self(fixtures::chain_beads()[0], 2, 3); }) ==
              std::string(errc::too_few_cone_points));
    }
}

TEST_CASE("handle addition and removal are inverse operations") {
    const auto base = fixtures::fourteen_gon_action();
    const auto lifted = toral_add(base, 2);
    CHECK(lifted.g0 == 2);
    CHECK(genus(lifted) == genus(base) + 2 * 14);
    CHECK(toral_subtract(lifted, 2) == base);

    SUBCASE("removal beyond the quotient genus") {
        CHECK(code_of([&] { toral_subtract(lifted, 3); }) ==
              std::string(errc::insufficient_orbifold_genus));
    }
}
