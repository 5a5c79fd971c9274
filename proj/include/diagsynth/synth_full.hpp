#pragma once

#include <cstdint>
#include <vector>

#include "diagsynth/circuit.hpp"

namespace diagsynth {

// Binary-reflected Gray flip positions: starting from the zero mask, the
// 2^n flips visit every n-bit mask once and return to zero.
std::vector<int> gray_flip_sequence(int n);

// Fully-connected constructions. NPA/WPA have 2^n - 2 CX gates,
// SPA has 2^n - n - 1 (both optimal).
Circuit synth_npa_full(int n);
Circuit synth_spa_full(int n);
Circuit synth_wpa_full(int n);

}  // namespace diagsynth
