#include "diagsynth/synth_circular.hpp"

#include <random>
#include <stdexcept>

#include "diagsynth/synth_linear.hpp"

namespace diagsynth {

namespace {

F2Matrix make_b(int n) {
  F2Matrix b = F2Matrix::identity(n);
  if (n >= 2) b.rows[1] ^= b.rows[0];
  return b;
}

F2Matrix make_c(int n) {
  std::vector<SigVec> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = SigVec(1) << ((i + 1) % n);
  return F2Matrix(n, std::move(rows));
}

TrinomialParams require_params(int n, bool need_primitive) {
  auto params = find_circular_params(n);
  if (!params) {
    throw unsupported_error("no irreducible trinomial x^n + x^l + 1 for n = " +
                            std::to_string(n));
  }
  if (need_primitive && !params->primitive()) {
    throw unsupported_error("no primitive trinomial for n = " +
                            std::to_string(n));
  }
  return *params;
}

void emit_stream(Circuit& c, int n, int k, std::uint64_t steps) {
  for (std::uint64_t j = 0; j < steps; ++j) {
    std::uint64_t kj = (std::uint64_t(k) * j) % n;
    c.add_cx(static_cast<int>(kj), static_cast<int>((kj + 1) % n));
  }
}

}  // namespace

CompanionState make_companion_state(const TrinomialParams& params,
                                    std::uint64_t seed) {
  int n = params.n;
  CompanionState st;
  st.B = make_b(n);
  st.C = make_c(n);
  st.A = f2_mul(f2_pow(st.C, params.k), st.B);
  if (params.primitive()) {
    st.G = st.A;
    return st;
  }
  // Random field elements eps_0 + eps_1*A + ... + eps_{n-1}*A^{n-1} until
  // one has maximal order 2^n - 1.
  std::vector<F2Matrix> powers(n);
  powers[0] = F2Matrix::identity(n);
  for (int i = 1; i < n; ++i) powers[i] = f2_mul(powers[i - 1], st.A);
  std::uint64_t group = (std::uint64_t(1) << n) - 1;
  std::vector<std::uint64_t> primes = prime_factors(group);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1, (1u << n) - 1);
  const F2Matrix ident = F2Matrix::identity(n);
  for (;;) {
    std::uint32_t eps = dist(rng);
    F2Matrix g(n, std::vector<SigVec>(n, 0));
    for (int i = 0; i < n; ++i) {
      if ((eps >> i) & 1u) {
        for (int row = 0; row < n; ++row) g.rows[row] ^= powers[i].rows[row];
      }
    }
    bool maximal = true;
    for (std::uint64_t p : primes) {
      if (f2_pow(g, group / p) == ident) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      st.G = g;
      return st;
    }
  }
}

F2Poly char_poly(const F2Matrix& a) {
  int n = a.n;
  std::vector<SigVec> h = a.rows;
  auto bit = [&](int i, int j) -> bool { return (h[i] >> j) & 1u; };
  auto flip = [&](int i, int j) { h[i] ^= SigVec(1) << j; };

  // Similarity reduction to upper Hessenberg form: every row operation is
  // paired with the matching column operation.
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i) {
      if (bit(i, j)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (int r = 0; r < n; ++r) {
        bool bp = bit(r, pivot), bq = bit(r, j + 1);
        if (bp != bq) {
          flip(r, pivot);
          flip(r, j + 1);
        }
      }
    }
    for (int i = j + 2; i < n; ++i) {
      if (!bit(i, j)) continue;
      h[i] ^= h[j + 1];
      for (int r = 0; r < n; ++r) {
        if (bit(r, i)) flip(r, j + 1);
      }
    }
  }

  // Char polys of the leading principal submatrices of a Hessenberg matrix.
  std::vector<F2Poly> p(n + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    F2Poly term = (p[m - 1] << 1) ^ (bit(m - 1, m - 1) ? p[m - 1] : 0);
    bool prod = true;
    for (int k = m - 1; k >= 1; --k) {
      prod = prod && bit(k, k - 1);
      if (!prod) break;
      if (bit(k - 1, m - 1)) term ^= p[k - 1];
    }
    p[m] = term;
  }
  return p[n];
}

Circuit synth_wpa_circular(int n) {
  TrinomialParams params = require_params(n, /*need_primitive=*/true);
  Circuit c(Topology::circular(n));
  emit_stream(c, n, params.k, (std::uint64_t(1) << n) - 1);
  return c;
}

Circuit synth_spa_circular(int n) {
  TrinomialParams params = require_params(n, /*need_primitive=*/true);
  Circuit c(Topology::circular(n));
  emit_stream(c, n, params.k, (std::uint64_t(1) << n) - 1 - n);
  return c;
}

CircularSynthesis synth_circular_nonprimitive(int n, std::uint64_t seed) {
  TrinomialParams params = require_params(n, /*need_primitive=*/false);
  CompanionState st = make_companion_state(params, seed);
  Circuit c(Topology::circular(n));
  if (params.q == 1) {
    emit_stream(c, n, params.k, params.r);
    return {std::move(c), params, seed};
  }
  F2Matrix state = F2Matrix::identity(n);  // rows track the wire signatures
  F2Matrix g_inv = f2_inverse(st.G);
  for (std::uint64_t s = 0; s < params.q; ++s) {
    if (s > 0) {
      // Reconfigure the wires to the rows of G^s: appending the reversed
      // reach circuit for Z at state M lands on Z^{-1} M, so Z = M * G^{-s}.
      F2Matrix target = f2_pow(st.G, s);
      F2Matrix z = f2_mul(state, f2_pow(g_inv, s));
      Circuit r = reach(Basis{n, z.rows});
      for (auto it = r.gates.rbegin(); it != r.gates.rend(); ++it) {
        c.add_cx(it->control, it->target);
      }
      state = target;
    }
    for (std::uint64_t j = 0; j < params.r; ++j) {
      std::uint64_t kj = (std::uint64_t(params.k) * j) % n;
      int control = static_cast<int>(kj);
      int target_wire = static_cast<int>((kj + 1) % n);
      c.add_cx(control, target_wire);
      state.rows[target_wire] ^= state.rows[control];
    }
  }
  return {std::move(c), params, seed};
}

Circuit synth_npa_circular(int n, std::uint64_t seed) {
  TrinomialParams params = require_params(n, /*need_primitive=*/false);
  Circuit c = params.primitive() ? synth_wpa_circular(n)
                                 : synth_circular_nonprimitive(n, seed).circuit;
  return extend_to_npa(std::move(c));
}

Circuit synth_wpa_circular_any(int n, std::uint64_t seed) {
  TrinomialParams params = require_params(n, /*need_primitive=*/false);
  if (params.primitive()) return synth_wpa_circular(n);
  return extend_to_wpa_cyclic(synth_circular_nonprimitive(n, seed).circuit);
}

}  // namespace diagsynth
