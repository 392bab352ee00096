#include "surfcyc/compatibility.hpp"

#include <algorithm>
#include <sstream>

namespace surfcyc {

namespace {

long long positive_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

ConePair site_pair(const DataSet& canonical, long long index, const char* which) {
    if (index < 1 || index > static_cast<long long>(canonical.pairs.size())) {
        std::ostringstream os;
        os << which << " site index " << index << " is out of range for "
           << to_string(canonical);
        throw DomainError(errc::incompatible_sites, os.str());
    }
    return canonical.pairs[static_cast<std::size_t>(index - 1)];
}

void check_site_compatibility(const ConePair& a, const ConePair& b, long long n) {
    if (a.m != b.m) {
        std::ostringstream os;
        os << "site periods differ: (" << a.c << "," << a.m << ") vs ("
           << b.c << "," << b.m << ")";
        throw DomainError(errc::incompatible_sites, os.str());
    }
    if (positive_mod(a.c + b.c, a.m) != 0) {
        std::ostringstream os;
        os << "site residues " << a.c << " + " << b.c << " do not vanish modulo "
           << a.m << " (degree " << n << ")";
        throw DomainError(errc::incompatible_sites, os.str());
    }
}

void erase_one(std::vector<ConePair>& pairs, const ConePair& value) {
    auto it = std::find(pairs.begin(), pairs.end(), value);
    pairs.erase(it);
}

} // namespace

CompositionResult compose_pair(const DataSet& d1, const DataSet& d2, CompatSite site) {
    if (site.full()) return compose_full(d1, d2);
    auto a = canonicalize(d1);
    auto b = canonicalize(d2);
    require_valid(a);
    require_valid(b);
    if (a.n != b.n) {
        throw DomainError(errc::order_mismatch,
                          "degrees differ: " + std::to_string(a.n) + " vs " +
                              std::to_string(b.n));
    }
    const ConePair pa = site_pair(a, site.left, "left");
    const ConePair pb = site_pair(b, site.right, "right");
    check_site_compatibility(pa, pb, a.n);

    CompositionResult res;
    res.result.n = a.n;
    res.result.g0 = a.g0 + b.g0;
    res.result.rot = 0;
    res.result.pairs = a.pairs;
    erase_one(res.result.pairs, pa);
    {
        auto rest = b.pairs;
        erase_one(rest, pb);
        res.result.pairs.insert(res.result.pairs.end(), rest.begin(), rest.end());
    }
    res.result = canonicalize(res.result);
    res.amalgam = a.n / pa.m;
    res.curves_glued = a.n / pa.m;
    res.trace = {genus(a), genus(b), genus(res.result)};
    return res;
}

CompositionResult compose_full(const DataSet& d1, const DataSet& d2) {
    auto a = canonicalize(d1);
    auto b = canonicalize(d2);
    require_valid(a);
    require_valid(b);
    if (a.n != b.n) {
        throw DomainError(errc::order_mismatch,
                          "degrees differ: " + std::to_string(a.n) + " vs " +
                              std::to_string(b.n));
    }
    CompositionResult res;
    res.result.n = a.n;
    res.result.g0 = a.g0 + b.g0;
    res.result.rot = 0;
    res.result.pairs = a.pairs;
    res.result.pairs.insert(res.result.pairs.end(), b.pairs.begin(), b.pairs.end());
    res.result = canonicalize(res.result);
    res.amalgam = a.n - 1;
    res.curves_glued = a.n;
    res.trace = {genus(a), genus(b), genus(res.result)};
    return res;
}

CompositionResult compose_self(const DataSet& d, long long r, long long s) {
    auto a = canonicalize(d);
    require_valid(a);
    if (a.pairs.size() < 4) {
        throw DomainError(errc::too_few_cone_points,
                          "a self join needs at least four cone pairs, " +
                              to_string(a) + " has " + std::to_string(a.pairs.size()));
    }
    if (r >= s) {
        throw DomainError(errc::incompatible_sites,
                          "self sites must satisfy r < s, got (" + std::to_string(r) +
                              "," + std::to_string(s) + ")");
    }
    const ConePair pr = site_pair(a, r, "first self");
    const ConePair ps = site_pair(a, s, "second self");
    check_site_compatibility(pr, ps, a.n);

    CompositionResult res;
    res.result.n = a.n;
    res.result.g0 = a.g0 + 1;
    res.result.rot = 0;
    res.result.pairs = a.pairs;
    // Erase by position so duplicate values cannot collapse to one site.
    res.result.pairs.erase(res.result.pairs.begin() + (s - 1));
    res.result.pairs.erase(res.result.pairs.begin() + (r - 1));
    res.result = canonicalize(res.result);
    require_valid(res.result);
    res.amalgam = a.n / pr.m;
    res.curves_glued = a.n / pr.m;
    res.trace = {genus(a), genus(res.result)};
    return res;
}

DataSet toral_add(const DataSet& d, long long g_add) {
    auto a = canonicalize(d);
    require_valid(a);
    if (g_add < 0) {
        throw DomainError(errc::out_of_domain, "cannot add a negative handle count");
    }
    a.g0 += g_add;
    return a;
}

DataSet toral_subtract(const DataSet& d, long long g_sub) {
    auto a = canonicalize(d);
    require_valid(a);
    if (g_sub < 0) {
        throw DomainError(errc::out_of_domain, "cannot remove a negative handle count");
    }
    if (a.g0 < g_sub) {
        throw DomainError(errc::insufficient_orbifold_genus,
                          "cannot remove " + std::to_string(g_sub) +
                              " handles from quotient genus " + std::to_string(a.g0));
    }
    a.g0 -= g_sub;
    require_valid(a);
    return a;
}

} // namespace surfcyc
