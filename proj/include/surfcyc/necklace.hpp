#pragma once

#include <string>
#include <vector>

#include "surfcyc/compatibility.hpp"
#include "surfcyc/dataset.hpp"

namespace surfcyc {

// Chain link between consecutive beads: `left` indexes the left bead's
// canonical pairs, `right` the right bead's.  (0,0) is the full join.
struct ChainLink {
    long long left = 0;
    long long right = 0;

    bool full() const noexcept { return left == 0 && right == 0; }
};

// Self-join site: 1-based positions into the post-chain working pair list.
// The first coordinate designates the surviving rotation residue when the
// join empties the list down to a free datum.
struct SelfSite {
    long long x = 0;
    long long y = 0;
};

// A decomposition scheme: beads joined in a chain, self joins applied to
// the assembled working list, then g_add handles added and g_sub removed.
struct Necklace {
    std::vector<DataSet> beads;
    std::vector<ChainLink> links;     // size max(beads.size()-1, 0)
    std::vector<SelfSite> self_pairs; // simultaneous, coordinate-distinct
    long long g_add = 0;
    long long g_sub = 0;
};

struct NecklaceCheck {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const noexcept { return errors.empty(); }
};

// Structural validation.  Errors are shape violations that make realization
// impossible to even attempt; stylistic departures (non-three-pair beads,
// non-normalized handle counts, out-of-bound self indices relative to the
// small-index convention) are warnings.
NecklaceCheck validate_necklace(const Necklace& nk);

struct RealizeResult {
    DataSet result;
    // Genus after the chain, then after each self join, each added handle,
    // and each removed handle.
    std::vector<long long> trace;
    std::vector<std::string> warnings;
};

// Assembles the necklace into a single data set.  Self sites that fail to
// resolve literally are repaired through the unique compatible perfect
// matching on the failed positions (with a warning); anything else
// incompatible throws.
RealizeResult realize(const Necklace& nk);

// Inverse construction: a necklace whose realization is canonicalize(d).
// Requires genus(d) >= 2.  Deterministic: the first valid scheme in a fixed
// search order is returned.
Necklace decompose(const DataSet& d);

// Factor counts of the fixed-locus description attached to a necklace:
// k joined points, bounded/free numerator factors, bounded/free denominator
// factors, and the dimension of the realized action's fixed locus.
struct FixDescriptor {
    long long points = 0;
    long long num_bounded = 0;
    long long num_free = 0;
    long long den_bounded = 0;
    long long den_free = 0;
    long long dim = 0;
};

FixDescriptor fix_descriptor(const Necklace& nk);

struct DimensionCheck {
    long long closed = 0;  // 6(g_add - g_sub) + 2k + 4f + 2m - 2
    long long harvey = 0;  // 6*g0 + 2*ell - 6 on the realized data set
    bool consistent = false;
};

// Evaluates both dimension formulas; `consistent` records whether the
// closed form applies (every bead carrying exactly three pairs).
DimensionCheck fix_dimension_necklace(const Necklace& nk);

// Largest curve system reducing the realized action:
// g - sum g(beads) + k - 1, plus n*(2*g_add - 1) when g_add > 0.
// Requires g_sub = 0 and a reducible realization.
long long max_reduction_system_size(const Necklace& nk);

} // namespace surfcyc
