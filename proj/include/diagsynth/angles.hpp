#pragma once

#include <vector>

#include "diagsynth/circuit.hpp"

namespace diagsynth {

// Target phases alpha_b, one per basis state. The global phase is removed on
// ingest by subtracting alpha[0] from every entry.
struct PhaseTargets {
  int n = 0;
  std::vector<double> alpha;  // size 2^n, alpha[0] == 0

  static PhaseTargets from_raw(std::vector<double> raw);
};

// The 2^n - 1 phase-gate parameters, indexed by their nonzero signature.
struct AngleVector {
  int n = 0;
  std::vector<double> theta;  // size 2^n, theta[0] unused and zero

  double at(SigVec v) const { return theta[v]; }
};

// In-place Walsh-Hadamard butterfly; size must be a power of two.
void fwht_inplace(std::vector<double>& data);

// theta_v = -(H alpha)_v / 2^(n-1) for v != 0, via the fast transform.
AngleVector compute_theta(const PhaseTargets& targets);

// Direct O(4^n) evaluation of alpha_b = sum over v with <v,b> = 1 of
// theta_v; the independent oracle for compute_theta.
PhaseTargets reconstruct_alpha(const AngleVector& theta);

// Replace each symbolic phase reference by its numeric angle.
Circuit bind_angles(const Circuit& c, const AngleVector& theta);

}  // namespace diagsynth
