#pragma once

#include <vector>

#include "surfcyc/dataset.hpp"
#include "surfcyc/fatgraph.hpp"
#include "surfcyc/hyperbolic.hpp"
#include "surfcyc/necklace.hpp"

namespace surfcyc::fixtures {

// --- degree-42 chain -----------------------------------------------------

// Six spherical three-cone beads of degree 42 (genera 20,17,19,17,19,20).
std::vector<DataSet> chain_beads();

// Bead-local links assembling the six beads into a chain.
std::vector<ChainLink> chain_links();

// The ten-pair composite of the chain: genus 155.
DataSet ten_pair_composite();

// Chain-only necklace (no self joins, no handles).
Necklace chain_necklace();

// Full necklace: the chain plus self sites (1,9),(2,4),(5,8),(7,10) and
// three removed handles.  Realizes the reduced target below.
Necklace handle_necklace();

// (42,1;(5,6),(1,6)), genus 36.
DataSet reduced_target();

// --- degree-5 pair of schemes --------------------------------------------

// Single bead (5,0;(1,5),(2,5),(2,5)) with one added handle.
Necklace pentagonal_single();

// Three beads of degree 5 chained with links (3,1),(2,1) and self (1,3).
Necklace pentagonal_triple();

// (5,1;(1,5),(2,5),(2,5)), genus 7: realization of both schemes above.
DataSet pentagonal_target();

// --- polygon actions ------------------------------------------------------

// (14,0;(1,2),(1,7),(5,14)): 14-gon action of genus 3.
DataSet fourteen_gon_action();

// (6,0;(2,3),(1,6),(1,6)): 12-gon action of genus 2.
DataSet twelve_gon_action();

// Genus-2 octagon identification a b a' b' c d c' d'.
PairingWord octagon_pairing();

// --- filling graphs --------------------------------------------------------

// Twelve-sided boundary word of the first genus-2 filling graph
// (three 4-valent vertices, symmetry group of order 2).
std::vector<SignedLabel> filling_word_a();

// Twelve-sided boundary word of the second genus-2 filling graph
// (cyclic symmetry group of order 4).
std::vector<SignedLabel> filling_word_b();

// One-vertex torus graph with rotation (a, b, a', b').
FatGraph torus_graph();

} // namespace surfcyc::fixtures
