#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surfcyc/errors.hpp"

namespace surfcyc {

// A ribbon graph: vertices carry cyclic rotations of half-edge ids, edges
// pair the half-edges.  Half-edge ids are dense 0..2E-1.
struct FatGraph {
    std::vector<std::vector<int>> vertices;
    std::vector<std::pair<int, int>> edges;
};

// Validates density, the matching property, and rotation consistency.
// Throws DanglingHalfEdge / InconsistentRotation.
FatGraph build_graph(std::vector<std::vector<int>> rotations,
                     std::vector<std::pair<int, int>> edges);

struct SignedLabel {
    int label = 0;
    bool inverse = false;

    friend auto operator<=>(const SignedLabel&, const SignedLabel&) = default;
};

// Rebuilds the one-boundary ribbon graph whose boundary walk spells the
// word.  Each label must occur exactly twice, once plain and once inverted.
FatGraph from_boundary_word(const std::vector<SignedLabel>& word);

struct GraphShape {
    long long vertices = 0;
    long long edges = 0;
    long long boundaries = 0;
    long long genus = 0;
    std::vector<long long> degrees; // per vertex, input order
};

// Euler data of the (connected) ribbon surface; throws DisconnectedGraph.
GraphShape shape(const FatGraph& g);

// Boundary walks as cyclic signed-edge words, each rotated to its
// lexicographic least form, listed deterministically.
std::vector<std::vector<SignedLabel>> boundary_walks(const FatGraph& g);

// A permutation of half-edge ids.
using HalfEdgePerm = std::vector<int>;

// All orientation-preserving combinatorial symmetries (permutations
// commuting with both the rotation and the edge involution), sorted.
std::vector<HalfEdgePerm> automorphisms(const FatGraph& g);

int perm_order(const HalfEdgePerm& p);

struct InducedSignature {
    long long order = 0;          // n
    long long quotient_genus = 0; // g0
    std::vector<long long> cone_orders; // ascending
};

// Orbifold signature of the cyclic group generated by one symmetry acting
// on the filled surface: cone points at vertex/edge/face cells with
// nontrivial stabiliser.  Throws NonIntegralQuotient if the Euler identity
// has no integer solution.
InducedSignature induced_signature(const FatGraph& g, const HalfEdgePerm& h);

struct FeasibilityReport {
    bool feasible = false;
    long long required_vertices = 0;
    std::vector<std::string> subset_sums; // "n/m1+n/m2=s" certificate lines
    std::string explanation;
};

// Vertex-count accounting for a hypothetical 4-regular one-boundary filling
// graph carrying a degree-n symmetry with the given cone orders: the vertex
// set must decompose into distinct cone orbits plus free orbits of size n.
FeasibilityReport minimal_filling_vertex_feasibility(long long n, long long g,
                                                     long long b,
                                                     std::vector<long long> cone_orders);

struct IrreducibilityReport {
    InducedSignature signature;
    bool irreducible = false;      // sphere quotient with exactly 3 cones
    bool divisibility_ok = false;  // n divides 4*(2g - 2 + b)
    bool order_bounds_ok = false;  // 2g+1 <= n <= 4g+2
    long long genus = 0;
    long long boundaries = 0;
    FeasibilityReport vertex_feasibility;
};

// Requires a 4-regular graph (else NotFourRegular) and a symmetry of order
// >= 2; reports the quotient signature and the irreducibility verdict with
// the side checks.
IrreducibilityReport filling_irreducibility_check(const FatGraph& g,
                                                  const HalfEdgePerm& h);

} // namespace surfcyc
