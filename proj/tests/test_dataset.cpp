#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "surfcyc/dataset.hpp"
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

TEST_CASE("the degree-42 chain beads are sphere quotients with three cone pairs") {
    const auto beads = fixtures::chain_beads();
    REQUIRE(beads.size() == 6);
    const std::vector<long long> expected_genus{20, 17, 19, 17, 19, 20};
    for (std::size_t i = 0; i < beads.size(); ++i) {
        CAPTURE(i);
        const auto& d = beads[i];
        CHECK(is_valid(d));
        CHECK(genus(d) == expected_genus[i]);
        CHECK(genus(d) == oracles::telescoped_genus(d.n, d.g0, d.pairs));
        CHECK(is_irreducible(d));
        CHECK(fix_dimension_harvey(d) == 0);
        const auto cls = classify(d);
        CHECK(cls.spherical);
        CHECK(cls.kind != ActionKind::Rotational);
    }
}

TEST_CASE("violated conditions are reported exactly, in canonical order") {
    SUBCASE("free residue sharing a factor with the degree") {
        const auto rep = validate({6, 1, 2, {}});
        CHECK_FALSE(rep.valid);
        CHECK(rep.violations == std::vector<std::string>{"i"});
    }
    SUBCASE("rotation residue on a branched datum cascades") {
        // rot > 0 clashes with the cone pair (i); a lone period is never
        // stable under omission and 2 != 6 on a sphere quotient (iv); the
        // residue sum is 3 mod 6 (v); the genus comes out at -7/2 (genus).
        const auto rep = validate({6, 0, 1, {{1, 2}}});
        CHECK(rep.violations == std::vector<std::string>{"i", "iv", "v", "genus"});
    }
    SUBCASE("a period not dividing the degree suppresses the lcm and residue checks") {
        const auto rep = validate({6, 1, 0, {{1, 4}}});
        CHECK(rep.violations == std::vector<std::string>{"ii"});
    }
    SUBCASE("non-coprime residues") {
        const auto rep = validate({8, 1, 0, {{2, 4}, {2, 4}}});
        CHECK(rep.violations == std::vector<std::string>{"iii"});
    }
    SUBCASE("residue sum off by one unit") {
        const auto rep = validate({12, 0, 0, {{1, 4}, {1, 3}, {1, 12}, {5, 12}}});
        CHECK(rep.violations == std::vector<std::string>{"v", "genus"});
    }
    SUBCASE("negative orbifold genus") {
        const auto rep = validate({2, -1, 0, {{1, 2}, {1, 2}}});
        CHECK(std::find(rep.violations.begin(), rep.violations.end(), "genus") !=
              rep.violations.end());
    }
    SUBCASE("require_valid carries the violation list in its message") {
        try {
            require_valid({6, 0, 1, {{1, 2}}});
            FAIL("expected a domain error");
        } catch (const DomainError& e) {
            CHECK(e.code() == std::string(errc::invalid_data_set));
            CHECK(std::string(e.what()).find("i iv v genus") != std::string::npos);
        }
    }
}

TEST_CASE("the trivial degree is always realizable") {
    const DataSet d{1, 5, 0, {}};
    CHECK(is_valid(d));
    CHECK(genus(d) == 5);
    const auto cls = classify(d);
    CHECK(cls.kind == ActionKind::Rotational);
    CHECK(cls.form == RotationalForm::Free);
}

TEST_CASE("classification separates rotations from the two composite kinds") {
    SUBCASE("free actions are rotations") {
        const auto cls = classify({7, 2, 3, {}});
        CHECK(cls.kind == ActionKind::Rotational);
        CHECK(cls.form == RotationalForm::Free);
        CHECK_FALSE(cls.spherical);
    }
    SUBCASE("one complementary full-period block is a rotation when n > 2") {
        const auto cls = classify({5, 1, 0, {{1, 5}, {4, 5}}});
        CHECK(cls.kind == ActionKind::Rotational);
        CHECK(cls.form == RotationalForm::Paired);
    }
    SUBCASE("a single (1,2),(1,2) block at n = 2 is not enough") {
        const auto cls = classify({2, 1, 0, {{1, 2}, {1, 2}}});
        CHECK(cls.kind == ActionKind::Type2);
        CHECK(cls.form == RotationalForm::None);
    }
    SUBCASE("two (1,2) blocks at n = 2 make the hyperelliptic shape a rotation") {
        const auto cls = classify({2, 1, 0, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}});
        CHECK(cls.kind == ActionKind::Rotational);
        CHECK(cls.form == RotationalForm::Paired);
    }
    SUBCASE("three cone pairs with a full-period pair are Type 1") {
        const auto cls = classify(fixtures::fourteen_gon_action());
        CHECK(cls.kind == ActionKind::Type1);
        CHECK(cls.spherical);
        CHECK(to_string(cls.kind) == "Type1");
    }
    SUBCASE("three cone pairs without a full-period pair are Type 2") {
        // A sphere quotient with three cone pairs always carries a
        // full-period pair, so this shape needs positive quotient genus.
        const DataSet d{8, 1, 0, {{1, 2}, {1, 4}, {1, 4}}};
        REQUIRE(is_valid(d));
        CHECK(classify(d).kind == ActionKind::Type2);
    }
}

TEST_CASE("irreducibility and the moduli dimension move together") {
    const auto d14 = fixtures::fourteen_gon_action();
    CHECK(genus(d14) == 3);
    CHECK(is_irreducible(d14));
    CHECK(fix_dimension_harvey(d14) == 0);
    CHECK(code_of([&] { (void)reduction_orbit_counts(d14); }) ==
          std::string(errc::irreducible_action));

    const DataSet torus_quotient{5, 1, 0, {{1, 5}, {4, 5}}};
    CHECK(genus(torus_quotient) == 5);
    CHECK_FALSE(is_irreducible(torus_quotient));
    CHECK(fix_dimension_harvey(torus_quotient) == 6 * 1 + 2 * 2 - 6);
    CHECK(reduction_orbit_counts(torus_quotient) ==
          std::pair<long long, long long>{3 - 3 + 2, 2 - 2 + 2});

    SUBCASE("below genus 2 the dimension is out of domain") {
        CHECK(code_of([] { (void)fix_dimension_harvey({2, 1, 1, {}}); }) ==
              std::string(errc::out_of_domain));
    }
    SUBCASE("free actions use the unbranched count") {
        CHECK(fix_dimension_harvey({2, 2, 1, {}}) == 6 * 2 - 6);
    }
}

TEST_CASE("orbit data lists orbit sizes and inverted residues") {
    const auto orbits = orbit_structure(fixtures::fourteen_gon_action());
    REQUIRE(orbits.size() == 3);
    CHECK(orbits[0].orbit_size == 7);
    CHECK(orbits[0].cone_order == 2);
    CHECK(orbits[0].rotation_numerator == 1);
    CHECK(orbits[1].orbit_size == 2);
    CHECK(orbits[1].cone_order == 7);
    CHECK(orbits[1].rotation_numerator == 1);
    CHECK(orbits[2].orbit_size == 1);
    CHECK(orbits[2].cone_order == 14);
    // 5 * 3 = 15 = 14 + 1.
    CHECK(orbits[2].rotation_numerator == 3);
    CHECK(oracles::egcd_inverse(5, 14) == 3);
    CHECK(oracles::egcd_inverse(1, 7) == 1);
}

TEST_CASE("irreducible actions obey the degree window 2g+1 <= n <= 4g+2") {
    for (long long n = 2; n <= 30; ++n) {
        for (const auto& d : enumerate_spherical_type1(n)) {
            const long long g = genus(d);
            if (g < 1 || !is_irreducible(d)) continue;
            CAPTURE(to_string(d));
            CHECK(2 * g + 1 <= n);
            CHECK(n <= 4 * g + 2);
        }
    }
}

TEST_CASE("genus-2 actions of degree 2: the census has exactly two members") {
    const auto found = enumerate_actions(2, 2);
    REQUIRE(found.size() == 2);
    CHECK(found[0] == DataSet{2, 0, 0, {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}});
    CHECK(found[1] == DataSet{2, 1, 0, {{1, 2}, {1, 2}}});
}

TEST_CASE("the enumeration agrees with a brute-force census") {
    for (long long n = 1; n <= 8; ++n) {
        for (long long g = 2; g <= 5; ++g) {
            CAPTURE(n);
            CAPTURE(g);
            const auto found = enumerate_actions(n, g);
            for (const auto& d : found) {
                CAPTURE(to_string(d));
                CHECK(is_valid(d));
                CHECK(genus(d) == g);
            }
            CHECK(oracles::keys_of(found) == oracles::census(n, g));
            CHECK(std::is_sorted(found.begin(), found.end(), canonical_data_set_less));
        }
    }
}

TEST_CASE("free data sets are enumerated once per admissible rotation residue") {
    const auto found = enumerate_actions(5, 6);
    std::set<long long> rotations;
    for (const auto& d : found) {
        if (d.pairs.empty()) rotations.insert(d.rot);
    }
    CHECK(rotations == std::set<long long>{1, 2, 3, 4});
}

TEST_CASE("worker count never changes the enumeration") {
    for (long long n : {6, 9, 10}) {
        const auto serial = enumerate_actions(n, 4, 1);
        for (int jobs : {2, 3, 8}) {
            CAPTURE(n);
            CAPTURE(jobs);
            const auto parallel = enumerate_actions(n, 4, jobs);
            REQUIRE(parallel.size() == serial.size());
            for (std::size_t i = 0; i < serial.size(); ++i) {
                CHECK(to_string(parallel[i]) == to_string(serial[i]));
                CHECK(parallel[i].rot == serial[i].rot);
            }
        }
    }
}

TEST_CASE("human rendering distinguishes free and branched data") {
    CHECK(to_string(DataSet{7, 2, 3, {}}) == "(7,2,3;)");
    CHECK(to_string(DataSet{42, 0, 0, {{19, 42}, {2, 21}}}) == "(42,0;(2,21),(19,42))");
}
