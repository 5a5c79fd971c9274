#pragma once

#include <cstdint>

#include "diagsynth/circuit.hpp"

namespace diagsynth {

// Ladder of 2*|i-j| - 1 adjacent CX gates that XORs every initial signature
// between i and j (inclusive) onto wire j and restores all other wires.
Circuit v_circuit(int i, int j, int n);

// Recursive circuit placing every signature containing e_m (m = floor(n/2))
// on the middle wire, leaving all other wires unchanged.
Circuit gray_circuit(int n);
std::int64_t gray_circuit_cx_count(int n);

// Linear-topology SPA: GRAY_n, cyclic rotation of the upper half, then
// recursion on the first n - 1 wires. swap_opt replaces each 3-CX SWAP with
// the 2-CX pair CX(i, i+1); CX(i+1, i).
Circuit synth_spa_linear(int n, bool swap_opt = false);
std::int64_t synth_spa_linear_cx_count(int n, bool swap_opt);

// Shortest-known-form reachability: a linear-topology circuit of at most
// 2*n^2 CX gates whose final wire signatures equal the target exactly.
Circuit reach(const Basis& target);

// SPA followed by a reach-based fix-up returning the wires to the standard
// basis (NPA) or to the cheapest cyclic wire shift of it (WPA).
Circuit synth_npa_linear(int n);
Circuit synth_wpa_linear(int n);

// Fix-up helpers shared with the circular module: append the reversed reach
// circuit taking the current final basis to the identity (or to the best
// cyclic permutation of it). Gates emitted are linear-adjacent.
Circuit extend_to_npa(Circuit c);
Circuit extend_to_wpa_cyclic(Circuit c);

}  // namespace diagsynth
