#include "diagsynth/synth.hpp"

#include "diagsynth/synth_circular.hpp"
#include "diagsynth/synth_full.hpp"
#include "diagsynth/synth_linear.hpp"

namespace diagsynth {

namespace {

Circuit synth_linear_variant(Variant variant, int n, bool swap_opt) {
  switch (variant) {
    case Variant::SPA: return synth_spa_linear(n, swap_opt);
    case Variant::WPA: return synth_wpa_linear(n);
    case Variant::NPA: return synth_npa_linear(n);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SynthOutput synthesize(Variant variant, TopologyKind kind, int n,
                       const SynthOptions& opts) {
  SynthOutput out;
  switch (kind) {
    case TopologyKind::Full:
      switch (variant) {
        case Variant::SPA: out.circuit = synth_spa_full(n); break;
        case Variant::WPA: out.circuit = synth_wpa_full(n); break;
        case Variant::NPA: out.circuit = synth_npa_full(n); break;
      }
      return out;
    case TopologyKind::Linear:
      out.circuit = synth_linear_variant(variant, n, opts.swap_opt);
      return out;
    case TopologyKind::Circular: {
      if (n == 1) {
        out.circuit = Circuit(Topology::circular(1));
        return out;
      }
      out.trinomial = find_circular_params(n);
      if (!out.trinomial) {
        if (!opts.fallback_linear) {
          throw unsupported_error(
              "no irreducible trinomial x^" + std::to_string(n) +
              " + x^l + 1 exists; rerun with --fallback linear to embed the "
              "linear construction on the circle");
        }
        out.used_linear_fallback = true;
        out.circuit = with_topology(
            synth_linear_variant(variant, n, opts.swap_opt),
            Topology::circular(n));
        return out;
      }
      switch (variant) {
        case Variant::SPA:
          out.circuit = out.trinomial->primitive()
                            ? synth_spa_circular(n)
                            : synth_circular_nonprimitive(n, opts.seed).circuit;
          break;
        case Variant::WPA:
          out.circuit = synth_wpa_circular_any(n, opts.seed);
          break;
        case Variant::NPA:
          out.circuit = synth_npa_circular(n, opts.seed);
          break;
      }
      return out;
    }
    case TopologyKind::Custom:
      throw unsupported_error(
          "no construction for custom topologies; use verify/search");
  }
  throw std::logic_error("unreachable");
}

}  // namespace diagsynth
