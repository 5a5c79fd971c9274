#include "diagsynth/angles.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace diagsynth {

PhaseTargets PhaseTargets::from_raw(std::vector<double> raw) {
  if (raw.empty() || !std::has_single_bit(raw.size())) {
    throw std::invalid_argument("PhaseTargets: length must be a power of two");
  }
  PhaseTargets t;
  t.n = std::countr_zero(raw.size());
  if (t.n < 1 || t.n > kMaxWires) {
    throw std::invalid_argument("PhaseTargets: need 2 <= length <= 2^24");
  }
  double global = raw[0];
  for (double& a : raw) a -= global;
  t.alpha = std::move(raw);
  return t;
}

void fwht_inplace(std::vector<double>& data) {
  if (data.empty() || !std::has_single_bit(data.size())) {
    throw std::invalid_argument("fwht: length must be a power of two");
  }
  for (std::size_t len = 1; len < data.size(); len <<= 1) {
    for (std::size_t i = 0; i < data.size(); i += 2 * len) {
      for (std::size_t j = i; j < i + len; ++j) {
        double a = data[j];
        double b = data[j + len];
        data[j] = a + b;
        data[j + len] = a - b;
      }
    }
  }
}

AngleVector compute_theta(const PhaseTargets& targets) {
  if (targets.alpha.empty() ||
      targets.alpha.size() != (std::size_t(1) << targets.n)) {
    throw std::invalid_argument("compute_theta: malformed targets");
  }
  if (targets.alpha[0] != 0.0) {
    throw std::invalid_argument("compute_theta: alpha[0] must be zero");
  }
  std::vector<double> buf = targets.alpha;
  fwht_inplace(buf);
  AngleVector out;
  out.n = targets.n;
  out.theta.assign(buf.size(), 0.0);
  double scale = -1.0 / double(std::size_t(1) << (targets.n - 1));
  for (std::size_t v = 1; v < buf.size(); ++v) out.theta[v] = buf[v] * scale;
  return out;
}

PhaseTargets reconstruct_alpha(const AngleVector& theta) {
  std::size_t size = std::size_t(1) << theta.n;
  PhaseTargets out;
  out.n = theta.n;
  out.alpha.assign(size, 0.0);
  for (std::size_t b = 1; b < size; ++b) {
    double sum = 0.0;
    for (std::size_t v = 1; v < size; ++v) {
      if (f2_dot(static_cast<SigVec>(v), static_cast<SigVec>(b))) {
        sum += theta.theta[v];
      }
    }
    out.alpha[b] = sum;
  }
  return out;
}

Circuit bind_angles(const Circuit& c, const AngleVector& theta) {
  Circuit out(c.topology);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Phase && g.symbolic) {
      if (g.sym == 0 || g.sym >= (SigVec(1) << theta.n)) {
        throw std::invalid_argument("bind_angles: unknown signature reference");
      }
      out.add_phase(g.wire, theta.at(g.sym));
    } else {
      out.add(g);
    }
  }
  return out;
}

}  // namespace diagsynth
