#include "surfcyc/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "surfcyc/dataset.hpp"
#include "surfcyc/fatgraph.hpp"
#include "surfcyc/fixtures.hpp"
#include "surfcyc/hyperbolic.hpp"
#include "surfcyc/necklace.hpp"

namespace surfcyc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMetricTolerance = 1e-9;  // hyperbolic identities
constexpr double kAngleTolerance = 1e-12;  // exact corner-angle reproduction
constexpr std::uint32_t kAuditSeed = 20260818u;

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }
Outcome pass(std::string what) { return {true, std::move(what)}; }

std::string trace_string(const std::vector<long long>& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << " -> ";
        os << t[i];
    }
    return os.str();
}

// 1. The six-bead chain composes to the expected ten-pair data set.
Outcome criterion1(int) {
    const auto rr = realize(fixtures::chain_necklace());
    const auto expected = canonicalize(fixtures::ten_pair_composite());
    if (rr.result != expected) {
        return fail("chain composite is " + to_string(rr.result) + ", expected " +
                    to_string(expected));
    }
    if (genus(rr.result) != 155) {
        return fail("chain composite genus is " + std::to_string(genus(rr.result)) +
                    ", expected 155");
    }
    return pass("ten-pair composite " + to_string(rr.result) + ", genus 155");
}

// 2. Full necklace realization with the exact genus trace.
Outcome criterion2(int) {
    const auto rr = realize(fixtures::handle_necklace());
    const auto expected = canonicalize(fixtures::reduced_target());
    const std::vector<long long> expected_trace{155, 157, 158, 161, 162, 120, 78, 36};
    if (rr.result != expected) {
        return fail("realization is " + to_string(rr.result) + ", expected " +
                    to_string(expected));
    }
    if (rr.trace != expected_trace) {
        return fail("genus trace is " + trace_string(rr.trace) + ", expected " +
                    trace_string(expected_trace));
    }
    return pass("realized " + to_string(rr.result) + ", trace " +
                trace_string(rr.trace));
}

// 3. Factor counts and dimension of the fixed-locus descriptor.
Outcome criterion3(int) {
    const auto fd = fix_descriptor(fixtures::handle_necklace());
    const auto realized = realize(fixtures::handle_necklace()).result;
    const long long harvey = fix_dimension_harvey(realized);
    std::ostringstream got;
    got << "points=" << fd.points << " num_bounded=" << fd.num_bounded
        << " num_free=" << fd.num_free << " den_bounded=" << fd.den_bounded
        << " den_free=" << fd.den_free << " dim=" << fd.dim
        << " harvey=" << harvey;
    if (fd.points != 6 || fd.num_bounded != 10 || fd.num_free != 0 ||
        fd.den_bounded != 3 || fd.den_free != 5 || fd.dim != 4 || harvey != 4) {
        return fail("descriptor mismatch: " + got.str() +
                    ", expected points=6 num_bounded=10 num_free=0 den_bounded=3 "
                    "den_free=5 dim=4 harvey=4");
    }
    return pass(got.str());
}

// 4. Two schemes realize the same degree-5 action; decompose round-trips it.
Outcome criterion4(int) {
    const auto target = canonicalize(fixtures::pentagonal_target());
    const auto r1 = realize(fixtures::pentagonal_single());
    const auto r2 = realize(fixtures::pentagonal_triple());
    if (r1.result != target) {
        return fail("single-bead scheme realizes " + to_string(r1.result) +
                    ", expected " + to_string(target));
    }
    if (r2.result != target) {
        return fail("three-bead scheme realizes " + to_string(r2.result) +
                    ", expected " + to_string(target));
    }
    const auto nk = decompose(target);
    const auto back = realize(nk).result;
    if (back != target) {
        return fail("decompose round-trip gives " + to_string(back) + ", expected " +
                    to_string(target));
    }
    return pass("both schemes and the decomposition round-trip realize " +
                to_string(target));
}

// 5. Census invariants over all degrees <= 10, genera 2..6.
Outcome criterion5(int jobs) {
    long long total = 0;
    long long irreducible_count = 0;
    for (long long n = 1; n <= 10; ++n) {
        for (long long g = 2; g <= 6; ++g) {
            for (const auto& d : enumerate_actions(n, g, jobs)) {
                if (!is_valid(d)) {
                    return fail("enumerated set " + to_string(d) + " is invalid");
                }
                if (genus(d) != g) {
                    return fail("enumerated set " + to_string(d) + " has genus " +
                                std::to_string(genus(d)) + ", expected " +
                                std::to_string(g));
                }
                const bool irr = is_irreducible(d);
                const long long dim = fix_dimension_harvey(d);
                if (irr != (dim == 0)) {
                    return fail("irreducibility/dimension mismatch on " + to_string(d) +
                                ": irreducible=" + std::to_string(irr) +
                                " dim=" + std::to_string(dim));
                }
                const auto back = realize(decompose(d)).result;
                if (back != d) {
                    return fail("decompose/realize round-trip broke on " + to_string(d) +
                                " -> " + to_string(back));
                }
                if (irr) {
                    ++irreducible_count;
                    if (!(2 * g + 1 <= n && n <= 4 * g + 2)) {
                        return fail("irreducible " + to_string(d) +
                                    " violates the order bounds 2g+1 <= n <= 4g+2");
                    }
                }
                ++total;
            }
        }
    }
    return pass(std::to_string(total) + " data sets certified (" +
                std::to_string(irreducible_count) + " irreducible)");
}

// 6. Hyperbolic polygon certification over all admissible degrees <= 20.
Outcome criterion6(int) {
    long long certified = 0;
    long long flat = 0;
    for (long long n = 2; n <= 20; ++n) {
        for (const auto& d : enumerate_spherical_type1(n)) {
            const long long g = genus(d);
            if (g < 2) {
                try {
                    polygon_spec(d);
                    return fail("polygon_spec accepted the non-hyperbolic " +
                                to_string(d));
                } catch (const DomainError& e) {
                    if (e.code() != errc::non_hyperbolic) {
                        return fail("wrong rejection " + e.code() + " on " +
                                    to_string(d));
                    }
                    ++flat;
                    continue;
                }
            }
            const auto spec = polygon_spec(d);
            const auto metrics = solve_metrics(spec);
            const double want_area = 2.0 * kPi * static_cast<double>(2 * g - 2);
            if (std::fabs(metrics.area - want_area) >= kMetricTolerance) {
                return fail("area mismatch on " + to_string(d));
            }
            if (std::fabs(metrics.apex_angle_sum - 2.0 * kPi) >= kMetricTolerance) {
                return fail("central triangles do not close on " + to_string(d));
            }
            if (std::fabs(metrics.side_length_check - metrics.side_length) >=
                kMetricTolerance) {
                return fail("side-length cross-check failed on " + to_string(d));
            }
            const auto word = pairing_word(d);
            if (quotient_check(word).genus != g) {
                return fail("pairing quotient genus mismatch on " + to_string(d));
            }
            ++certified;
        }
    }

    const auto spec14 = polygon_spec(fixtures::fourteen_gon_action());
    for (double a : spec14.corner_angles) {
        if (std::fabs(a - 2.0 * kPi / 7.0) >= kAngleTolerance) {
            return fail("14-gon corner angle is not 2*pi/7");
        }
    }
    const auto m14 = solve_metrics(spec14);
    if (std::fabs(m14.area - 8.0 * kPi) >= kMetricTolerance) {
        return fail("14-gon area is not 8*pi");
    }
    return pass(std::to_string(certified) + " polygons certified, " +
                std::to_string(flat) + " non-hyperbolic shapes rejected; 14-gon at "
                "angle 2*pi/7, area 8*pi");
}

// 7. Filling-graph fixtures: shapes, symmetry groups, signatures, verdicts.
Outcome criterion7(int) {
    const auto g1 = from_boundary_word(fixtures::filling_word_a());
    const auto g2 = from_boundary_word(fixtures::filling_word_b());
    const auto torus = fixtures::torus_graph();

    const auto s1 = shape(g1);
    if (s1.genus != 2 || s1.boundaries != 1) {
        return fail("first filling graph has genus " + std::to_string(s1.genus) +
                    ", boundaries " + std::to_string(s1.boundaries));
    }
    const auto a1 = automorphisms(g1);
    if (a1.size() != 2) {
        return fail("first filling graph has " + std::to_string(a1.size()) +
                    " symmetries, expected 2");
    }
    const auto invol_it = std::find_if(a1.begin(), a1.end(), [](const HalfEdgePerm& p) {
        return perm_order(p) == 2;
    });
    if (invol_it == a1.end()) {
        return fail("first filling graph has no order-2 symmetry");
    }
    const auto& invol = *invol_it;
    const auto sig1 = induced_signature(g1, invol);
    if (sig1.order != 2 || sig1.quotient_genus != 0 ||
        sig1.cone_orders != std::vector<long long>{2, 2, 2, 2, 2, 2}) {
        return fail("first graph signature mismatch");
    }

    const auto s2 = shape(g2);
    if (s2.genus != 2 || s2.boundaries != 1) {
        return fail("second filling graph has genus " + std::to_string(s2.genus) +
                    ", boundaries " + std::to_string(s2.boundaries));
    }
    const auto a2 = automorphisms(g2);
    std::vector<int> orders2;
    for (const auto& p : a2) orders2.push_back(perm_order(p));
    std::sort(orders2.begin(), orders2.end());
    if (orders2 != std::vector<int>{1, 2, 4, 4}) {
        return fail("second filling graph symmetry group is not cyclic of order 4");
    }
    const auto gen2 = *std::find_if(a2.begin(), a2.end(), [](const HalfEdgePerm& p) {
        return perm_order(p) == 4;
    });
    const auto sig2 = induced_signature(g2, gen2);
    if (sig2.order != 4 || sig2.quotient_genus != 0 ||
        sig2.cone_orders != std::vector<long long>{2, 2, 4, 4}) {
        return fail("second graph signature mismatch");
    }

    const auto at = automorphisms(torus);
    const auto gent = std::find_if(at.begin(), at.end(), [](const HalfEdgePerm& p) {
        return perm_order(p) == 4;
    });
    if (gent == at.end()) {
        return fail("torus graph has no order-4 symmetry");
    }
    const auto sigt = induced_signature(torus, *gent);
    if (sigt.order != 4 || sigt.quotient_genus != 0 ||
        sigt.cone_orders != std::vector<long long>{2, 4, 4}) {
        return fail("torus graph signature mismatch");
    }

    const bool v1 = filling_irreducibility_check(g1, invol).irreducible;
    const bool v2 = filling_irreducibility_check(g2, gen2).irreducible;
    const bool vt = filling_irreducibility_check(torus, *gent).irreducible;
    if (v1 || v2 || !vt) {
        return fail("irreducibility verdicts are (" + std::to_string(v1) + "," +
                    std::to_string(v2) + "," + std::to_string(vt) +
                    "), expected (0,0,1)");
    }
    return pass("shapes, symmetry groups, signatures, and verdicts "
                "(reducible, reducible, irreducible) all match");
}

// 8. Vertex-orbit infeasibility certificate for degree 12 on genus 5.
Outcome criterion8(int) {
    const auto rep = minimal_filling_vertex_feasibility(12, 5, 1, {6, 12, 12});
    if (rep.required_vertices != 9) {
        return fail("required vertex count is " +
                    std::to_string(rep.required_vertices) + ", expected 9");
    }
    if (rep.feasible) {
        return fail("the degree-12 genus-5 filling action was reported feasible");
    }
    const std::string wanted = "12/6+12/12=3";
    if (std::find(rep.subset_sums.begin(), rep.subset_sums.end(), wanted) ==
        rep.subset_sums.end()) {
        return fail("certificate is missing the line \"" + wanted + "\"");
    }
    return pass("infeasible as required: " + rep.explanation);
}

// 9. Seeded random audit of the dimension formulas.
Outcome criterion9(int) {
    std::mt19937 rng(kAuditSeed);
    const std::array<long long, 5> degrees{5, 6, 8, 10, 12};
    std::vector<std::vector<DataSet>> pools;
    for (long long n : degrees) {
        pools.push_back(enumerate_spherical_type1(n));
        if (pools.back().empty()) {
            return fail("empty bead pool for degree " + std::to_string(n));
        }
    }

    long long audited = 0;
    long long zero_add = 0;
    long long attempts = 0;
    while (audited < 1000) {
        if (++attempts > 200000) {
            return fail("necklace generator stalled after 200000 attempts");
        }
        const std::size_t which = rng() % degrees.size();
        const auto& pool = pools[which];
        Necklace nk;
        const std::size_t k = 1 + rng() % 4;
        for (std::size_t i = 0; i < k; ++i) {
            nk.beads.push_back(pool[rng() % pool.size()]);
        }
        std::vector<long long> in_used(k, 0); // canonical position consumed from the left
        bool ok = true;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            if (rng() % 3 == 0) {
                nk.links.push_back({0, 0});
                continue;
            }
            std::vector<ChainLink> cands;
            for (long long r = 1; r <= 3; ++r) {
                if (r == in_used[i]) continue;
                for (long long s = 1; s <= 3; ++s) {
                    const auto& pl = nk.beads[i].pairs[static_cast<std::size_t>(r - 1)];
                    const auto& pr =
                        nk.beads[i + 1].pairs[static_cast<std::size_t>(s - 1)];
                    if (pl.m == pr.m && (pl.c + pr.c) % pl.m == 0) {
                        cands.push_back({r, s});
                    }
                }
            }
            if (cands.empty()) {
                nk.links.push_back({0, 0});
            } else {
                const auto pick = cands[rng() % cands.size()];
                nk.links.push_back(pick);
                in_used[i + 1] = pick.right;
            }
        }

        // Simulate the working list (bead, canonical position, pair) exactly
        // as realization consumes it, to propose valid self sites.
        struct Slot {
            std::size_t bead;
            std::size_t pos;
            ConePair pair;
        };
        std::vector<Slot> working;
        for (std::size_t p = 0; p < 3; ++p) {
            working.push_back({0, p, nk.beads[0].pairs[p]});
        }
        for (std::size_t i = 0; i + 1 < k; ++i) {
            const auto& link = nk.links[i];
            if (!link.full()) {
                const auto it = std::find_if(
                    working.begin(), working.end(), [&](const Slot& s) {
                        return s.bead == i &&
                               s.pos == static_cast<std::size_t>(link.left - 1);
                    });
                if (it == working.end()) {
                    ok = false;
                    break;
                }
                working.erase(it);
            }
            for (std::size_t p = 0; p < 3; ++p) {
                if (!link.full() && static_cast<long long>(p) == link.right - 1) continue;
                working.push_back({i + 1, p, nk.beads[i + 1].pairs[p]});
            }
        }
        if (!ok) continue;

        const std::size_t want_selfs = rng() % 3;
        std::vector<bool> used(working.size(), false);
        for (std::size_t t = 0; t < want_selfs; ++t) {
            const std::size_t consumed = 2 * nk.self_pairs.size();
            if (working.size() - consumed < 3) break; // keep at least one pair alive
            std::vector<SelfSite> cands;
            for (std::size_t i = 0; i < working.size(); ++i) {
                if (used[i]) continue;
                for (std::size_t j = i + 1; j < working.size(); ++j) {
                    if (used[j]) continue;
                    if (working[i].pair.m == working[j].pair.m &&
                        (working[i].pair.c + working[j].pair.c) % working[i].pair.m ==
                            0) {
                        cands.push_back({static_cast<long long>(i + 1),
                                         static_cast<long long>(j + 1)});
                    }
                }
            }
            if (cands.empty()) break;
            const auto pick = cands[rng() % cands.size()];
            used[static_cast<std::size_t>(pick.x - 1)] = true;
            used[static_cast<std::size_t>(pick.y - 1)] = true;
            nk.self_pairs.push_back(pick);
        }

        nk.g_add = static_cast<long long>(rng() % 3);
        const auto budget =
            static_cast<std::uint32_t>(nk.g_add + nk.self_pairs.size() + 1);
        nk.g_sub = static_cast<long long>(rng() % budget);
        try {
            const auto dc = fix_dimension_necklace(nk);
            if (!dc.consistent) continue;
            if (dc.closed != dc.harvey) {
                return fail("dimension mismatch (closed " + std::to_string(dc.closed) +
                            " vs " + std::to_string(dc.harvey) +
                            ") on a scheme with " + std::to_string(k) + " beads");
            }
            if (nk.g_add == 0) {
                const auto fd = fix_descriptor(nk);
                const long long factors = 2 * (fd.num_bounded + fd.num_free -
                                               fd.den_bounded - fd.den_free);
                if (factors != fd.dim) {
                    return fail("factor-count dimension " + std::to_string(factors) +
                                " differs from " + std::to_string(fd.dim));
                }
                ++zero_add;
            }
            ++audited;
        } catch (const DomainError&) {
            continue; // the random scheme did not realize; draw another
        }
    }
    return pass("1000 schemes audited (" + std::to_string(zero_add) +
                " with g_add = 0), both formulas agree throughout");
}

} // namespace

std::vector<CriterionResult> run_acceptance(int jobs) {
    struct Gate {
        int index;
        double budget; // seconds; 0 = untimed
        Outcome (*fn)(int);
    };
    const std::array<Gate, 9> gates{{{1, 1.0, criterion1},
                                     {2, 1.0, criterion2},
                                     {3, 0.0, criterion3},
                                     {4, 0.0, criterion4},
                                     {5, 60.0, criterion5},
                                     {6, 10.0, criterion6},
                                     {7, 5.0, criterion7},
                                     {8, 0.0, criterion8},
                                     {9, 0.0, criterion9}}};
    std::vector<CriterionResult> results;
    for (const auto& gate : gates) {
        CriterionResult r;
        r.index = gate.index;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome oc;
        try {
            oc = gate.fn(jobs);
        } catch (const std::exception& e) {
            oc = fail(std::string("unexpected error: ") + e.what());
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        r.pass = oc.pass;
        r.detail = oc.detail;
        if (gate.budget > 0.0 && r.seconds >= gate.budget) {
            r.pass = false;
            std::ostringstream os;
            os << "exceeded the " << gate.budget << "s budget; " << r.detail;
            r.detail = os.str();
        }
        results.push_back(std::move(r));
    }
    return results;
}

int print_acceptance(std::ostream& out, int jobs) {
    const auto results = run_acceptance(jobs);
    bool all = true;
    for (const auto& r : results) {
        out << "criterion " << r.index << ": " << (r.pass ? "PASS" : "FAIL") << " ("
            << std::fixed << std::setprecision(3) << r.seconds << "s) " << r.detail
            << "\n";
        all = all && r.pass;
    }
    out << (all ? "all 9 criteria passed" : "ACCEPTANCE FAILED") << "\n";
    return all ? 0 : 1;
}

} // namespace surfcyc
