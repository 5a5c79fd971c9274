#pragma once

#include <cstdint>

#include "diagsynth/circuit.hpp"
#include "diagsynth/f2.hpp"

namespace diagsynth {

// Matrices of the trinomial field construction: B adds row 0 to row 1,
// C cyclically shifts all rows, A = C^k * B drives one gate of the stream,
// and G is a primitive element of the field generated by A (G = A when the
// trinomial itself is primitive).
struct CompanionState {
  F2Matrix A, B, C, G;
};

CompanionState make_companion_state(const TrinomialParams& params,
                                    std::uint64_t seed = 0);

// Characteristic polynomial over F_2 via Hessenberg reduction.
F2Poly char_poly(const F2Matrix& a);

// Gate stream CX(k*j mod n, k*j + 1 mod n). The full 2^n - 1 gates solve
// WPA; truncating the last n gates solves SPA optimally. Both require a
// primitive trinomial for n.
Circuit synth_wpa_circular(int n);
Circuit synth_spa_circular(int n);

struct CircularSynthesis {
  Circuit circuit;
  TrinomialParams params;
  std::uint64_t seed = 0;
};

// Irreducible (possibly non-primitive) trinomial path: q rounds of the
// r-step gate stream, each prepared at the rows of G^s by a reach-based
// reconfiguration. Solves SPA; degenerates to the plain stream when q = 1.
CircularSynthesis synth_circular_nonprimitive(int n, std::uint64_t seed = 0);

// WPA/NPA assemblies: the strongest available stream plus a reach fix-up
// (valid on the circle since linear adjacency is a subset).
Circuit synth_npa_circular(int n, std::uint64_t seed = 0);
Circuit synth_wpa_circular_any(int n, std::uint64_t seed = 0);

}  // namespace diagsynth
