#pragma once

#include <cstdint>
#include <vector>

#include "diagsynth/angles.hpp"
#include "diagsynth/circuit.hpp"

namespace diagsynth {

// Signatures whose angles are negligible (|theta| < epsilon) and therefore
// need not be visited.
struct SkipSet {
  double epsilon = 0.0;
  std::vector<SigVec> sigs;  // sorted ascending, never contains 0

  bool contains(SigVec v) const;
};

SkipSet discover_skip_set(const AngleVector& theta, double epsilon);

struct SkippingResult {
  Circuit circuit;
  int general_cx = 0;      // CX count of the general SPA construction
  bool from_search = false;
  std::uint64_t nodes = 0;
};

// CX-only circuit visiting every signature outside S (elements of S may
// still appear). Best-first search with the remaining-count heuristic and a
// node budget; falls back to the general construction, so the result never
// exceeds it.
SkippingResult synth_skipping(const SkipSet& skip, const Topology& topology,
                              std::uint64_t node_budget = 1000000);

// The general SPA construction for a standard topology, used as the
// skipping fallback and the savings baseline.
Circuit general_spa(const Topology& topology);

// Completes alpha over the non-support states so that 2^n - 1 - |support|
// theta coordinates vanish; the zero-set is chosen greedily in descending
// Hamming weight among rows keeping the linear system nonsingular.
PhaseTargets generate_symmetries(const std::vector<SigVec>& support,
                                 const std::vector<double>& alpha_on_support,
                                 int n);

}  // namespace diagsynth
