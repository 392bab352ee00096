#pragma once

#include <vector>

#include "surfcyc/dataset.hpp"

namespace surfcyc {

// 1-based positions into the canonical pair lists of the two operands.
// (0, 0) designates the full (unbranched) join.
struct CompatSite {
    long long left = 0;
    long long right = 0;

    bool full() const noexcept { return left == 0 && right == 0; }
};

struct CompositionResult {
    DataSet result;
    long long amalgam = 0;      // free-product amalgamation rank
    long long curves_glued = 0; // size of the glued orbit of curves
    std::vector<long long> trace; // genus bookkeeping: operands, then result
};

// Joins two same-degree data sets along one compatible cone-pair site each
// (equal periods, residues summing to 0 modulo the period).  Consumes both
// site pairs; quotient genera add; genus(result) = g1 + g2 + n/m - 1.
CompositionResult compose_pair(const DataSet& d1, const DataSet& d2, CompatSite site);

// Joins two same-degree data sets along a free orbit: all pairs survive,
// quotient genera add, genus(result) = g1 + g2 + n - 1.
CompositionResult compose_full(const DataSet& d1, const DataSet& d2);

// Joins a data set to itself along two distinct compatible sites r < s
// (canonical 1-based positions).  Consumes both pairs, increments the
// quotient genus, genus(result) = g + n/m.
CompositionResult compose_self(const DataSet& d, long long r, long long s);

// Adds g_add quotient handles: g0 += g_add, genus += n * g_add.
DataSet toral_add(const DataSet& d, long long g_add);

// Inverse of toral_add; requires g0 >= g_sub.
DataSet toral_subtract(const DataSet& d, long long g_sub);

} // namespace surfcyc
