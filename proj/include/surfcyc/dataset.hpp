#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "surfcyc/errors.hpp"

namespace surfcyc {

// One branch-point orbit: residue c and local period m (2 <= m, m | n,
// gcd(c, m) = 1 for a valid entry).  Canonical comparison orders by
// (period, residue).
struct ConePair {
    long long c = 0;
    long long m = 1;

    friend auto operator<=>(const ConePair&, const ConePair&) = default;
};

// Canonical order on cone pairs: ascending period, then ascending residue.
bool canonical_less(const ConePair& a, const ConePair& b) noexcept;

// A degree-n cyclic action datum on a closed orientable surface:
// quotient genus g0, rotation residue rot (nonzero exactly for free
// actions), and the multiset of cone pairs.
struct DataSet {
    long long n = 1;
    long long g0 = 0;
    long long rot = 0;
    std::vector<ConePair> pairs;
};

// Sorts the pairs canonically; other fields unchanged.
DataSet canonicalize(const DataSet& d);

// Equality of the underlying action datum (canonical-form comparison).
bool operator==(const DataSet& a, const DataSet& b);
bool operator!=(const DataSet& a, const DataSet& b);

// Total order used for deterministic output listings.
bool canonical_data_set_less(const DataSet& a, const DataSet& b);

// Human-oriented rendering "(n,g0;(c1,m1),...)" / "(n,g0,rot;)".
std::string to_string(const DataSet& d);

struct ValidationReport {
    bool valid = false;
    // Sorted subset of {"i","ii","iii","iv","v","genus"}.
    std::vector<std::string> violations;
};

// Checks every defining condition plus integrality/nonnegativity of the
// derived genus.  Never throws; lists every violated condition.
ValidationReport validate(const DataSet& d) noexcept;
bool is_valid(const DataSet& d) noexcept;

// Throws DomainError(InvalidDataSet) listing the violations.
void require_valid(const DataSet& d);

// Genus of the total surface, from the exact ramification identity
// (2-2g)/n = 2 - 2*g0 + sum(1/m_j - 1).  Throws on invalid input.
long long genus(const DataSet& d);

enum class ActionKind { Rotational, Type1, Type2 };
enum class RotationalForm { None, Free, Paired };

struct ActionClass {
    ActionKind kind = ActionKind::Type2;
    RotationalForm form = RotationalForm::None;
    bool spherical = false;
};

std::string to_string(ActionKind k);

// Rotational = free, or one complementary period-n block (n > 2), or at
// least two all-(1,2) blocks (n = 2).  Type 1 = three cone pairs with a
// period-n pair.  Everything else is Type 2.
ActionClass classify(const DataSet& d);

// True iff the quotient is a sphere with exactly three branch points.
// Requires genus(d) >= 1.
bool is_irreducible(const DataSet& d);

// Dimension of the fixed locus in the moduli parameter count:
// 6*g0 + 2*ell - 6 for branched actions, 6*g0 - 6 for free ones.
// Requires genus(d) >= 2; throws OutOfDomain when the count is negative.
long long fix_dimension_harvey(const DataSet& d);

struct OrbitDatum {
    long long orbit_size = 0;        // n / m
    long long cone_order = 0;        // m
    long long rotation_numerator = 0; // inverse of c modulo m
};

// Per cone pair: orbit size, local order, and the local rotation numerator.
std::vector<OrbitDatum> orbit_structure(const DataSet& d);

// (3*g0 - 3 + ell, 2*g0 - 2 + ell): curve and part counts of a maximal
// reduction in the quotient.  Throws IrreducibleAction on irreducible input.
std::pair<long long, long long> reduction_orbit_counts(const DataSet& d);

// All valid degree-n data sets of total genus g, canonically sorted.
// jobs > 1 splits the residue search across threads; output bytes are
// identical for every jobs value.
std::vector<DataSet> enumerate_actions(long long n, long long g, int jobs = 1);

// All valid (n, 0; (c1,m1),(c2,m2),(c3,m3)) with a period-n pair, any genus.
std::vector<DataSet> enumerate_spherical_type1(long long n);

// Modular inverse of a modulo m (gcd(a, m) must be 1).
long long mod_inverse(long long a, long long m);

} // namespace surfcyc
