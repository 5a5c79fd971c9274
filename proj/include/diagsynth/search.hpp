#pragma once

#include <cstdint>
#include <optional>

#include "diagsynth/circuit.hpp"

namespace diagsynth {

struct ExactMinResult {
  bool budget_exceeded = false;
  int length = -1;                 // provably minimal when a witness exists
  std::optional<Circuit> witness;  // deterministic: lexicographic DFS order
  std::uint64_t nodes = 0;
};

// Iterative-deepening A* over (wire basis, visited-signature set) states.
// The heuristic is the unvisited-signature count, plus one for NPA when the
// basis is not yet standard; root moves are quotiented by the topology's
// automorphisms. Thresholds above depth_budget report budget exhaustion.
// jobs > 1 fans the root branches out over threads; the result is
// scheduling-independent.
ExactMinResult exact_min(Variant variant, const Topology& topology,
                         int depth_budget, int jobs = 1);

// Analytic lower bound: 2^n - n - 1 for SPA anywhere, 2^n - 2 for WPA/NPA on
// the fully-connected topology, the SPA bound otherwise.
std::int64_t verify_lower_bound(Variant variant, TopologyKind kind, int n);

}  // namespace diagsynth
