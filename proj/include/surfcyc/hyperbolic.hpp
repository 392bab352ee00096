#pragma once

#include <string>
#include <vector>

#include "surfcyc/dataset.hpp"

namespace surfcyc {

// Fundamental polygon of a sphere-quotient three-cone action: a regular
// hyperbolic k-gon (k = 2n, or k = n when a cone order is 2) centred at the
// fixed point of the designated period-n cone pair.
struct PolygonSpec {
    long long sides = 0;          // k
    long long rotation_steps = 1; // sides the generating rotation advances
    double theta = 0.0;           // rotation angle 2*pi/n
    std::vector<double> corner_angles; // interior angle at each vertex
    long long n = 0;
    long long n1 = 0; // smaller non-designated cone order
    long long n2 = 0; // larger non-designated cone order
    long long n3 = 0; // designated period-n cone order (= n)
    long long genus = 0;
};

// Requires a spherical three-cone data set with a period-n pair and
// hyperbolic total surface (genus >= 2); throws NotSphericalType1 /
// NonHyperbolic otherwise.
PolygonSpec polygon_spec(const DataSet& d);

struct PolygonMetrics {
    double side_length = 0.0;        // common side, from the angle data
    std::vector<double> radii;       // centre-to-vertex distances (per corner class)
    double area = 0.0;               // angle-defect area
    double apex_angle_sum = 0.0;     // apex angles recovered from side lengths
    double side_length_check = 0.0;  // side recomputed from the radii
};

// Solves the isoceles central triangles of the polygon exactly enough to
// cross-check: apex angles re-derived from lengths must tile 2*pi and the
// two side-length routes must agree.
PolygonMetrics solve_metrics(const PolygonSpec& spec);

// Fixed-point-free involution on side indices 1..sides; partner[i] is the
// side glued (orientation-reversed) to side i+1... stored 0-based:
// partner[i-1] is the 1-based partner of side i.
struct PairingWord {
    long long sides = 0;
    std::vector<long long> partner; // 1-based partners, index 0 = side 1
    long long rotation_steps = 1;
    std::string interpretation;     // which residue/modulus read produced it
};

// Side pairing of the polygon under the step formula z = m + q*j, searched
// over the small space of residue/modulus interpretations; the first one
// whose quotient reproduces the action's genus wins.  Throws
// NoValidInterpretation when none does.
PairingWord pairing_word(const DataSet& d);

struct QuotientCheck {
    long long genus = 0;
    std::vector<long long> vertex_classes; // identified-vertex class sizes, descending
};

// Euler characteristic of the identification space of the polygon under the
// pairing; throws NonOrientableOrInvalid when the characteristic is odd.
QuotientCheck quotient_check(const PairingWord& w);

// Poincare-disk rendering: polygon sides as circular arcs orthogonal to the
// unit circle, paired sides sharing colour and label, centre marked.
// Byte-deterministic for equal inputs.
std::string render_svg(const PolygonSpec& spec, const PolygonMetrics& metrics,
                       const PairingWord& pairing);

} // namespace surfcyc
