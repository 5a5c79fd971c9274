#include "diagsynth/synth_linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace diagsynth {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxWires) {
    throw std::invalid_argument("synth: wire count must be in [1, 24]");
  }
}

void emit_v(Circuit& c, int i, int j) {
  if (i == j) throw std::invalid_argument("v_circuit: i and j must differ");
  int d = (j > i) ? 1 : -1;
  if (std::abs(i - j) == 1) {
    c.add_cx(i, j);
    return;
  }
  c.add_cx(i, i + d);
  emit_v(c, i + d, j);
  c.add_cx(i, i + d);
}

// GRAY_m on wires [offset, offset + m).
void emit_gray(Circuit& c, int offset, int m) {
  if (m == 1) return;
  if (m % 2 == 0) {
    emit_gray(c, offset + 1, m - 1);
    emit_v(c, offset, offset + m / 2);
    emit_gray(c, offset + 1, m - 1);
  } else {
    emit_gray(c, offset, m - 1);
    emit_v(c, offset + m - 1, offset + m / 2);
    emit_gray(c, offset, m - 1);
  }
}

// Reduction gates taking the target rows back to the standard basis, in
// elimination order. The forward circuit is this list reversed.
std::vector<std::pair<int, int>> reach_reduction(const Basis& target) {
  int n = target.n;
  std::vector<SigVec> v = target.vecs;
  std::vector<std::pair<int, int>> ops;
  auto apply = [&](int a, int b) {
    v[b] ^= v[a];
    ops.emplace_back(a, b);
  };
  auto bit = [&](int row, int col) -> bool { return (v[row] >> col) & 1u; };

  // Phase 1: for each k, make wire k the only wire at or above k carrying
  // e_k (rows below the diagonal cleared, unit diagonal).
  for (int k = 0; k < n; ++k) {
    int i1 = -1;
    for (int j = k; j < n; ++j) {
      if (bit(j, k)) {
        i1 = j;
        break;
      }
    }
    // Some row >= k must carry e_k, else the lower rows would be dependent.
    if (i1 < 0) throw std::invalid_argument("reach: target is not a basis");
    for (int s = 0; s < i1 - k; ++s) apply(i1 - s, i1 - s - 1);
    int i2 = i1;
    for (int j = i1; j < n; ++j) {
      if (bit(j, k)) i2 = j;
    }
    for (int j = i1; j < i2; ++j) {
      if (!bit(j + 1, k)) apply(j, j + 1);
    }
    for (int j = i2; j > k; --j) apply(j - 1, j);
  }

  // Phase 2: clear e_k from the rows above k, highest k first; all gates
  // point upward so the phase-1 shape is preserved.
  for (int k = n - 1; k >= 0; --k) {
    int i3 = -1;
    for (int j = 0; j < k; ++j) {
      if (bit(j, k)) {
        i3 = j;
        break;
      }
    }
    if (i3 < 0) continue;
    for (int j = k - 1; j >= i3; --j) {
      if (!bit(j, k)) apply(j + 1, j);
    }
    for (int j = i3; j < k; ++j) apply(j + 1, j);
  }

  for (int k = 0; k < n; ++k) {
    if (v[k] != (SigVec(1) << k)) {
      throw std::logic_error("reach: elimination did not reach the identity");
    }
  }
  return ops;
}

Basis column_permuted(const Basis& x, int shift) {
  Basis z;
  z.n = x.n;
  z.vecs.resize(x.n);
  for (int i = 0; i < x.n; ++i) {
    SigVec out = 0;
    for (int j = 0; j < x.n; ++j) {
      int sj = (j + shift) % x.n;
      if ((x.vecs[i] >> sj) & 1u) out |= SigVec(1) << j;
    }
    z.vecs[i] = out;
  }
  return z;
}

}  // namespace

Circuit v_circuit(int i, int j, int n) {
  check_n(n);
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw std::invalid_argument("v_circuit: wires out of range");
  }
  Circuit c(Topology::linear(n));
  emit_v(c, i, j);
  return c;
}

Circuit gray_circuit(int n) {
  check_n(n);
  Circuit c(Topology::linear(n));
  emit_gray(c, 0, n);
  return c;
}

std::int64_t gray_circuit_cx_count(int n) {
  std::int64_t sign = (n % 2 == 0) ? 1 : -1;
  return (5 * (std::int64_t(1) << n) + sign - 3) / 6 - n;
}

Circuit synth_spa_linear(int n, bool swap_opt) {
  check_n(n);
  Circuit c(Topology::linear(n));
  for (int m = n; m >= 2; --m) {
    emit_gray(c, 0, m);
    for (int i = m / 2; i + 1 <= m - 1; ++i) {
      c.add_cx(i, i + 1);
      c.add_cx(i + 1, i);
      if (!swap_opt) c.add_cx(i, i + 1);
    }
  }
  return c;
}

std::int64_t synth_spa_linear_cx_count(int n, bool swap_opt) {
  std::int64_t pow2 = std::int64_t(1) << n;
  std::int64_t sign = (n % 2 == 0) ? 1 : -1;
  if (swap_opt) return (10 * pow2 - 12 * n - sign - 9) / 6;
  return (40 * pow2 + 6 * std::int64_t(n) * n - 60 * n - 33 - 7 * sign) / 24;
}

Circuit reach(const Basis& target) {
  check_n(target.n);
  if (!is_basis(target.vecs)) {
    throw std::invalid_argument("reach: target is not a basis");
  }
  std::vector<std::pair<int, int>> ops = reach_reduction(target);
  Circuit c(Topology::linear(target.n));
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    c.add_cx(it->first, it->second);
  }
  return c;
}

Circuit extend_to_npa(Circuit c) {
  Basis x = simulate_signatures(c).final_basis();
  Circuit r = reach(x);
  for (auto it = r.gates.rbegin(); it != r.gates.rend(); ++it) {
    c.add_cx(it->control, it->target);
  }
  return c;
}

Circuit extend_to_wpa_cyclic(Circuit c) {
  Basis x = simulate_signatures(c).final_basis();
  int best_shift = 0;
  std::size_t best_len = std::size_t(-1);
  for (int s = 0; s < c.n; ++s) {
    std::size_t len = reach(column_permuted(x, s)).gates.size();
    if (len < best_len) {
      best_len = len;
      best_shift = s;
    }
  }
  Circuit r = reach(column_permuted(x, best_shift));
  for (auto it = r.gates.rbegin(); it != r.gates.rend(); ++it) {
    c.add_cx(it->control, it->target);
  }
  return c;
}

Circuit synth_npa_linear(int n) {
  return extend_to_npa(synth_spa_linear(n, /*swap_opt=*/true));
}

Circuit synth_wpa_linear(int n) {
  return extend_to_wpa_cyclic(synth_spa_linear(n, /*swap_opt=*/true));
}

}  // namespace diagsynth
