#pragma once

#include <cstdint>
#include <optional>

#include "diagsynth/circuit.hpp"
#include "diagsynth/f2.hpp"

namespace diagsynth {

struct SynthOptions {
  bool swap_opt = false;        // linear SPA swap optimization
  bool fallback_linear = false; // embed the linear construction on the circle
  std::uint64_t seed = 0;       // primitive-element search
};

struct SynthOutput {
  Circuit circuit;
  std::optional<TrinomialParams> trinomial;
  bool used_linear_fallback = false;
};

// Dispatch to the construction for (variant, topology, n). Throws
// unsupported_error when the circular topology has no trinomial and the
// linear fallback was not requested.
SynthOutput synthesize(Variant variant, TopologyKind kind, int n,
                       const SynthOptions& opts = {});

}  // namespace diagsynth
