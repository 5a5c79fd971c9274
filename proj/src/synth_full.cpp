#include "diagsynth/synth_full.hpp"

#include <bit>
#include <stdexcept>

namespace diagsynth {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxWires) {
    throw std::invalid_argument("synth: wire count must be in [1, 24]");
  }
}

}  // namespace

std::vector<int> gray_flip_sequence(int n) {
  check_n(n);
  std::vector<int> flips;
  flips.reserve(std::size_t(1) << n);
  for (std::uint32_t i = 1; i < (std::uint32_t(1) << n); ++i) {
    flips.push_back(std::countr_zero(i));
  }
  flips.push_back(n - 1);  // closes the cycle back to the zero mask
  return flips;
}

Circuit synth_npa_full(int n) {
  check_n(n);
  Circuit c(Topology::full(n));
  // Sub-solution on the low m-1 wires, then a full Gray sweep of the
  // controls targeting wire m-1.
  for (int m = 2; m <= n; ++m) {
    for (int p : gray_flip_sequence(m - 1)) c.add_cx(p, m - 1);
  }
  return c;
}

Circuit synth_spa_full(int n) {
  check_n(n);
  Circuit c(Topology::full(n));
  // Gray sweep minus its last gate, then recursion on the low wires.
  for (int m = n; m >= 2; --m) {
    std::vector<int> flips = gray_flip_sequence(m - 1);
    for (std::size_t i = 0; i + 1 < flips.size(); ++i) c.add_cx(flips[i], m - 1);
  }
  return c;
}

Circuit synth_wpa_full(int n) { return synth_npa_full(n); }

}  // namespace diagsynth
