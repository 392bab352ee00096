#include "surfcyc/fixtures.hpp"

namespace surfcyc::fixtures {

std::vector<DataSet> chain_beads() {
    return {
        DataSet{42, 0, 0, {{2, 21}, {19, 42}, {19, 42}}},
        DataSet{42, 0, 0, {{5, 6}, {13, 21}, {23, 42}}},
        DataSet{42, 0, 0, {{1, 14}, {8, 21}, {23, 42}}},
        DataSet{42, 0, 0, {{1, 6}, {11, 21}, {13, 42}}},
        DataSet{42, 0, 0, {{13, 14}, {10, 21}, {25, 42}}},
        DataSet{42, 0, 0, {{19, 21}, {17, 42}, {29, 42}}},
    };
}

std::vector<ChainLink> chain_links() {
    return {{3, 3}, {2, 2}, {0, 0}, {2, 2}, {3, 2}};
}

DataSet ten_pair_composite() {
    return DataSet{42,
                   0,
                   0,
                   {{1, 6},
                    {5, 6},
                    {1, 14},
                    {13, 14},
                    {2, 21},
                    {19, 21},
                    {13, 42},
                    {19, 42},
                    {23, 42},
                    {29, 42}}};
}

Necklace chain_necklace() {
    Necklace nk;
    nk.beads = chain_beads();
    nk.links = chain_links();
    return nk;
}

Necklace handle_necklace() {
    Necklace nk = chain_necklace();
    nk.self_pairs = {{1, 9}, {2, 4}, {5, 8}, {7, 10}};
    nk.g_sub = 3;
    return nk;
}

DataSet reduced_target() { return DataSet{42, 1, 0, {{1, 6}, {5, 6}}}; }

Necklace pentagonal_single() {
    Necklace nk;
    nk.beads = {DataSet{5, 0, 0, {{1, 5}, {2, 5}, {2, 5}}}};
    nk.g_add = 1;
    return nk;
}

Necklace pentagonal_triple() {
    Necklace nk;
    nk.beads = {
        DataSet{5, 0, 0, {{1, 5}, {1, 5}, {3, 5}}},
        DataSet{5, 0, 0, {{2, 5}, {4, 5}, {4, 5}}},
        DataSet{5, 0, 0, {{1, 5}, {2, 5}, {2, 5}}},
    };
    nk.links = {{3, 1}, {2, 1}};
    nk.self_pairs = {{1, 3}};
    return nk;
}

DataSet pentagonal_target() { return DataSet{5, 1, 0, {{1, 5}, {2, 5}, {2, 5}}}; }

DataSet fourteen_gon_action() { return DataSet{14, 0, 0, {{1, 2}, {1, 7}, {5, 14}}}; }

DataSet twelve_gon_action() { return DataSet{6, 0, 0, {{2, 3}, {1, 6}, {1, 6}}}; }

PairingWord octagon_pairing() {
    PairingWord w;
    w.sides = 8;
    w.partner = {3, 4, 1, 2, 7, 8, 5, 6};
    w.rotation_steps = 1;
    w.interpretation = "fixture";
    return w;
}

std::vector<SignedLabel> filling_word_a() {
    return {{1, false}, {2, true}, {3, false}, {6, true},  {3, true},  {4, false},
            {1, true},  {2, false}, {5, true}, {6, false}, {5, false}, {4, true}};
}

std::vector<SignedLabel> filling_word_b() {
    return {{1, false}, {3, false}, {5, false}, {6, true}, {5, true},  {2, true},
            {1, true},  {2, false}, {4, false}, {6, false}, {4, true}, {3, true}};
}

FatGraph torus_graph() {
    return FatGraph{{{0, 2, 1, 3}}, {{0, 1}, {2, 3}}};
}

} // namespace surfcyc::fixtures
