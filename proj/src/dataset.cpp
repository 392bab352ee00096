#include "surfcyc/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace surfcyc {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

long long positive_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Exact genus via (2-2g)/n = 2 - 2*g0 + sum(1/m - 1); returns false when the
// value is not a nonnegative integer.
bool rational_genus(const DataSet& d, long long& out) {
    BigRat chi_ratio(2 - 2 * d.g0, 1);
    for (const auto& p : d.pairs) {
        chi_ratio += BigRat(1, p.m) - 1;
    }
    // 2 - 2g = n * chi_ratio  =>  g = 1 - n*chi_ratio/2.
    BigRat g = BigRat(1, 1) - BigRat(d.n, 2) * chi_ratio;
    if (g.denominator() != 1 || g.numerator() < 0) return false;
    if (g.numerator() > std::numeric_limits<long long>::max()) return false;
    out = static_cast<long long>(g.numerator());
    return true;
}

} // namespace

bool canonical_less(const ConePair& a, const ConePair& b) noexcept {
    return a.m != b.m ? a.m < b.m : a.c < b.c;
}

DataSet canonicalize(const DataSet& d) {
    DataSet out = d;
    std::sort(out.pairs.begin(), out.pairs.end(), canonical_less);
    return out;
}

bool operator==(const DataSet& a, const DataSet& b) {
    if (a.n != b.n || a.g0 != b.g0 || a.rot != b.rot) return false;
    auto ca = canonicalize(a).pairs;
    auto cb = canonicalize(b).pairs;
    return ca == cb;
}

bool operator!=(const DataSet& a, const DataSet& b) { return !(a == b); }

bool canonical_data_set_less(const DataSet& a0, const DataSet& b0) {
    auto a = canonicalize(a0);
    auto b = canonicalize(b0);
    if (a.n != b.n) return a.n < b.n;
    if (a.g0 != b.g0) return a.g0 < b.g0;
    if (a.rot != b.rot) return a.rot < b.rot;
    return std::lexicographical_compare(a.pairs.begin(), a.pairs.end(),
                                        b.pairs.begin(), b.pairs.end(),
                                        canonical_less);
}

std::string to_string(const DataSet& d) {
    std::ostringstream os;
    os << "(" << d.n << "," << d.g0;
    if (d.rot != 0) os << "," << d.rot;
    os << ";";
    bool first = true;
    for (const auto& p : canonicalize(d).pairs) {
        if (!first) os << ",";
        first = false;
        os << "(" << p.c << "," << p.m << ")";
    }
    os << ")";
    return os.str();
}

ValidationReport validate(const DataSet& d) noexcept {
    std::set<std::string> v;
    if (d.n < 1) {
        return {false, {"i"}};
    }

    bool periods_ok = true;
    for (const auto& p : d.pairs) {
        if (p.m < 2 || d.n % p.m != 0) {
            v.insert("ii");
            periods_ok = false;
        }
    }
    for (const auto& p : d.pairs) {
        if (p.m < 1 || p.c < 0 || p.c >= p.m || std::gcd(p.c, p.m) != 1) {
            v.insert("iii");
        }
    }

    // Condition (i): rotation residue bookkeeping.
    if (d.rot < 0 || d.rot >= d.n) {
        v.insert("i");
    } else if (d.n == 1) {
        // The trivial action: rot is forced to 0 by the range check above.
    } else {
        const bool free_shape = d.pairs.empty();
        if (free_shape != (d.rot > 0)) v.insert("i");
        if (d.rot > 0 && std::gcd(d.rot, d.n) != 1) v.insert("i");
    }

    if (periods_ok) {
        // Condition (iv): the period list's lcm is stable under omitting any
        // one entry, and equals n for sphere quotients.
        long long total_lcm = 1;
        for (const auto& p : d.pairs) total_lcm = std::lcm(total_lcm, p.m);
        if (d.pairs.size() == 1) {
            v.insert("iv");
        } else if (d.pairs.size() >= 2) {
            for (std::size_t i = 0; i < d.pairs.size(); ++i) {
                long long l = 1;
                for (std::size_t j = 0; j < d.pairs.size(); ++j) {
                    if (j != i) l = std::lcm(l, d.pairs[j].m);
                }
                if (l != total_lcm) {
                    v.insert("iv");
                    break;
                }
            }
        }
        if (d.g0 == 0 && total_lcm != d.n) v.insert("iv");

        // Condition (v): the residues assemble to a genuine boundary cycle.
        long long s = 0;
        for (const auto& p : d.pairs) {
            s = positive_mod(s + (d.n / p.m) * positive_mod(p.c, p.m), d.n);
        }
        if (s != 0) v.insert("v");
    }

    if (d.g0 < 0) {
        v.insert("genus");
    } else if (periods_ok) {
        long long g = 0;
        if (!rational_genus(d, g)) v.insert("genus");
    }

    ValidationReport report;
    report.valid = v.empty();
    // Canonical listing order i, ii, iii, iv, v, genus.
    for (const char* tag : {"i", "ii", "iii", "iv", "v", "genus"}) {
        if (v.count(tag)) report.violations.push_back(tag);
    }
    return report;
}

bool is_valid(const DataSet& d) noexcept { return validate(d).valid; }

void require_valid(const DataSet& d) {
    auto rep = validate(d);
    if (rep.valid) return;
    std::ostringstream os;
    os << "invalid data set " << to_string(d) << "; violated conditions:";
    for (const auto& t : rep.violations) os << " " << t;
    throw DomainError(errc::invalid_data_set, os.str());
}

long long genus(const DataSet& d) {
    require_valid(d);
    long long g = 0;
    rational_genus(d, g); // cannot fail once validation passed
    return g;
}

std::string to_string(ActionKind k) {
    switch (k) {
        case ActionKind::Rotational: return "Rotational";
        case ActionKind::Type1: return "Type1";
        case ActionKind::Type2: return "Type2";
    }
    return "Type2";
}

ActionClass classify(const DataSet& d0) {
    auto d = canonicalize(d0);
    require_valid(d);
    const bool spherical = d.g0 == 0;

    if (d.pairs.empty()) {
        return {ActionKind::Rotational, RotationalForm::Free, spherical};
    }

    // Complementary period-n blocks?
    bool all_period_n = std::all_of(d.pairs.begin(), d.pairs.end(),
                                    [&](const ConePair& p) { return p.m == d.n; });
    if (all_period_n && d.pairs.size() % 2 == 0) {
        std::map<long long, long long> count;
        for (const auto& p : d.pairs) ++count[p.c];
        bool paired = true;
        for (const auto& [c, cnt] : count) {
            long long comp = positive_mod(d.n - c, d.n);
            if (comp == c) {
                if (cnt % 2 != 0) { paired = false; break; }
            } else if (count.count(comp) == 0 || count[comp] != cnt) {
                paired = false;
                break;
            }
        }
        if (paired) {
            const long long blocks = static_cast<long long>(d.pairs.size()) / 2;
            const bool rotational_shape =
                (d.n > 2 && blocks == 1) || (d.n == 2 && blocks >= 2);
            if (rotational_shape) {
                return {ActionKind::Rotational, RotationalForm::Paired, spherical};
            }
        }
    }

    if (d.pairs.size() == 3 &&
        std::any_of(d.pairs.begin(), d.pairs.end(),
                    [&](const ConePair& p) { return p.m == d.n; })) {
        return {ActionKind::Type1, RotationalForm::None, spherical};
    }
    return {ActionKind::Type2, RotationalForm::None, spherical};
}

bool is_irreducible(const DataSet& d) {
    require_valid(d);
    if (genus(d) < 1) {
        throw DomainError(errc::out_of_domain,
                          "irreducibility is defined for genus >= 1, got genus " +
                              std::to_string(genus(d)));
    }
    return d.g0 == 0 && d.pairs.size() == 3;
}

long long fix_dimension_harvey(const DataSet& d) {
    require_valid(d);
    const long long g = genus(d);
    if (g < 2) {
        throw DomainError(errc::out_of_domain,
                          "fixed-locus dimension requires genus >= 2, got " +
                              std::to_string(g));
    }
    const long long ell = static_cast<long long>(d.pairs.size());
    const long long dim = ell > 0 ? 6 * d.g0 + 2 * ell - 6 : 6 * d.g0 - 6;
    if (dim < 0) {
        throw DomainError(errc::out_of_domain,
                          "fixed-locus dimension is undefined for " + to_string(d));
    }
    return dim;
}

std::vector<OrbitDatum> orbit_structure(const DataSet& d0) {
    auto d = canonicalize(d0);
    require_valid(d);
    std::vector<OrbitDatum> out;
    out.reserve(d.pairs.size());
    for (const auto& p : d.pairs) {
        out.push_back({d.n / p.m, p.m, mod_inverse(p.c, p.m)});
    }
    return out;
}

std::pair<long long, long long> reduction_orbit_counts(const DataSet& d) {
    require_valid(d);
    const long long g = genus(d);
    if (g < 2) {
        throw DomainError(errc::out_of_domain,
                          "reduction counts require genus >= 2, got " + std::to_string(g));
    }
    if (is_irreducible(d)) {
        throw DomainError(errc::irreducible_action,
                          "no reduction system exists for " + to_string(d));
    }
    const long long ell = static_cast<long long>(d.pairs.size());
    return {3 * d.g0 - 3 + ell, 2 * d.g0 - 2 + ell};
}

long long mod_inverse(long long a, long long m) {
    if (m < 1) throw DomainError(errc::out_of_domain, "inverse modulo nonpositive modulus");
    if (m == 1) return 0;
    long long r0 = m, r1 = positive_mod(a, m);
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) {
        throw DomainError(errc::out_of_domain,
                          std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    }
    return positive_mod(t0, m);
}

namespace {

std::vector<long long> divisors_at_least_two(long long n) {
    std::vector<long long> ds;
    for (long long d = 2; d <= n; ++d) {
        if (n % d == 0) ds.push_back(d);
    }
    return ds;
}

struct EnumerationTask {
    long long g0 = 0;
    std::vector<long long> periods; // nondecreasing
};

// All nondecreasing period tuples (divisors >= 2) whose contributions
// sum(n - n/m) hit the target, length >= 2.
void period_multisets(long long n, const std::vector<long long>& divs,
                      std::size_t from, long long remaining,
                      std::vector<long long>& current,
                      std::vector<std::vector<long long>>& out) {
    if (remaining == 0) {
        if (current.size() >= 2) out.push_back(current);
        return;
    }
    for (std::size_t i = from; i < divs.size(); ++i) {
        long long contribution = n - n / divs[i];
        if (contribution <= 0 || contribution > remaining) continue;
        current.push_back(divs[i]);
        period_multisets(n, divs, i, remaining - contribution, current, out);
        current.pop_back();
    }
}

bool lcm_condition(long long n, long long g0, const std::vector<long long>& periods) {
    long long total = 1;
    for (long long m : periods) total = std::lcm(total, m);
    if (g0 == 0 && total != n) return false;
    if (periods.size() == 1) return false;
    for (std::size_t i = 0; i < periods.size(); ++i) {
        long long l = 1;
        for (std::size_t j = 0; j < periods.size(); ++j) {
            if (j != i) l = std::lcm(l, periods[j]);
        }
        if (l != total) return false;
    }
    return true;
}

// Residue assignment: units per period, nondecreasing within equal-period
// runs, residue-sum condition checked at the leaf.
void residue_tuples(long long n, long long g0, const std::vector<long long>& periods,
                    std::size_t idx, long long partial_sum,
                    std::vector<long long>& current, std::vector<DataSet>& out) {
    if (idx == periods.size()) {
        if (partial_sum % n == 0) {
            DataSet d;
            d.n = n;
            d.g0 = g0;
            d.rot = 0;
            for (std::size_t i = 0; i < periods.size(); ++i) {
                d.pairs.push_back({current[i], periods[i]});
            }
            out.push_back(std::move(d));
        }
        return;
    }
    const long long m = periods[idx];
    long long start = 1;
    if (idx > 0 && periods[idx - 1] == m) start = current[idx - 1];
    for (long long c = start; c < m; ++c) {
        if (std::gcd(c, m) != 1) continue;
        current.push_back(c);
        residue_tuples(n, g0, periods, idx + 1, partial_sum + (n / m) * c, current, out);
        current.pop_back();
    }
}

std::vector<DataSet> enumerate_task(long long n, const EnumerationTask& task) {
    std::vector<DataSet> out;
    std::vector<long long> current;
    residue_tuples(n, task.g0, task.periods, 0, 0, current, out);
    return out;
}

} // namespace

std::vector<DataSet> enumerate_actions(long long n, long long g, int jobs) {
    if (n < 1 || g < 0) return {};
    if (n == 1) {
        DataSet d;
        d.g0 = g;
        return {d};
    }

    std::vector<DataSet> results;

    // Free actions: genus 1 + n*(g0 - 1).
    if (positive_mod(g - 1, n) == 0) {
        const long long g0 = (g - 1) / n + 1;
        if (g0 >= 1) {
            for (long long r = 1; r < n; ++r) {
                if (std::gcd(r, n) != 1) continue;
                DataSet d;
                d.n = n;
                d.g0 = g0;
                d.rot = r;
                results.push_back(std::move(d));
            }
        }
    }

    // Branched actions, grouped by quotient genus and period multiset.
    const auto divs = divisors_at_least_two(n);
    std::vector<EnumerationTask> tasks;
    for (long long g0 = 0;; ++g0) {
        const long long target = 2 * g - 2 - n * (2 * g0 - 2);
        if (target < 0) break;
        if (target == 0) continue; // no cone pairs: the free shape above
        std::vector<std::vector<long long>> multisets;
        std::vector<long long> current;
        period_multisets(n, divs, 0, target, current, multisets);
        for (auto& periods : multisets) {
            if (!lcm_condition(n, g0, periods)) continue;
            tasks.push_back({g0, std::move(periods)});
        }
    }

    std::vector<std::vector<DataSet>> slots(tasks.size());
    const int workers = std::max(1, jobs);
    if (workers == 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            slots[i] = enumerate_task(n, tasks[i]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int count = std::min<std::size_t>(workers, tasks.size());
        pool.reserve(count);
        for (int w = 0; w < count; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) break;
                    slots[i] = enumerate_task(n, tasks[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    for (auto& slot : slots) {
        for (auto& d : slot) results.push_back(std::move(d));
    }

    std::sort(results.begin(), results.end(), canonical_data_set_less);
    return results;
}

std::vector<DataSet> enumerate_spherical_type1(long long n) {
    std::vector<DataSet> out;
    if (n < 2) return out;
    const auto divs = divisors_at_least_two(n);
    std::set<std::vector<long long>> seen;
    for (long long m1 : divs) {
        for (long long m2 : divs) {
            if (m2 < m1) continue;
            if (std::lcm(m1, m2) != n) continue; // stability of the period list
            for (long long c1 = 1; c1 < m1; ++c1) {
                if (std::gcd(c1, m1) != 1) continue;
                long long c2_start = (m1 == m2) ? c1 : 1;
                for (long long c2 = c2_start; c2 < m2; ++c2) {
                    if (std::gcd(c2, m2) != 1) continue;
                    const long long c3 =
                        positive_mod(-( (n / m1) * c1 + (n / m2) * c2 ), n);
                    if (c3 == 0 || std::gcd(c3, n) != 1) continue;
                    DataSet d;
                    d.n = n;
                    d.pairs = {{c1, m1}, {c2, m2}, {c3, n}};
                    d = canonicalize(d);
                    if (!is_valid(d)) continue;
                    std::vector<long long> key{d.pairs[0].c, d.pairs[0].m,
                                               d.pairs[1].c, d.pairs[1].m,
                                               d.pairs[2].c, d.pairs[2].m};
                    if (seen.insert(key).second) out.push_back(std::move(d));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_data_set_less);
    return out;
}

} // namespace surfcyc
