#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace surfcyc {

// A domain-level failure with a stable machine-readable code.  The code is
// what the CLI reports in its error JSON; the message is human-oriented.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
// Composition / necklace errors.
inline constexpr const char* incompatible_sites = "IncompatibleSites";
inline constexpr const char* order_mismatch = "OrderMismatch";
inline constexpr const char* too_few_cone_points = "TooFewConePoints";
inline constexpr const char* insufficient_orbifold_genus = "InsufficientOrbifoldGenus";
// Polygon errors.
inline constexpr const char* not_spherical_type1 = "NotSphericalType1";
inline constexpr const char* non_hyperbolic = "NonHyperbolic";
inline constexpr const char* no_valid_interpretation = "NoValidInterpretation";
inline constexpr const char* non_orientable_or_invalid = "NonOrientableOrInvalid";
// Graph errors.
inline constexpr const char* inconsistent_rotation = "InconsistentRotation";
inline constexpr const char* dangling_half_edge = "DanglingHalfEdge";
inline constexpr const char* not_four_regular = "NotFourRegular";
inline constexpr const char* non_integral_quotient = "NonIntegralQuotient";
inline constexpr const char* disconnected_graph = "DisconnectedGraph";
// Generic errors.
inline constexpr const char* invalid_data_set = "InvalidDataSet";
inline constexpr const char* invalid_necklace = "InvalidNecklace";
inline constexpr const char* invalid_input = "InvalidInput";
inline constexpr const char* irreducible_action = "IrreducibleAction";
inline constexpr const char* out_of_domain = "OutOfDomain";
inline constexpr const char* internal_search_failure = "InternalSearchFailure";
} // namespace errc

} // namespace surfcyc
