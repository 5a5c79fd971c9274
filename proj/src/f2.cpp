#include "diagsynth/f2.hpp"

#include <numeric>
#include <stdexcept>

namespace diagsynth {

namespace {

SigVec low_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

int poly_degree(F2Poly p) {
  return p == 0 ? -1 : 63 - std::countl_zero(p);
}

F2Poly poly_mod(F2Poly a, F2Poly f) {
  int df = poly_degree(f);
  for (int d = poly_degree(a); d >= df; d = poly_degree(a)) {
    a ^= f << (d - df);
  }
  return a;
}

// Degrees stay below kMaxWires, so the carry-less product fits in 64 bits.
F2Poly poly_mulmod(F2Poly a, F2Poly b, F2Poly f) {
  F2Poly acc = 0;
  while (b) {
    int i = std::countr_zero(b);
    acc ^= a << i;
    b &= b - 1;
  }
  return poly_mod(acc, f);
}

F2Poly poly_powmod(F2Poly base, std::uint64_t e, F2Poly f) {
  F2Poly acc = 1;
  base = poly_mod(base, f);
  while (e) {
    if (e & 1) acc = poly_mulmod(acc, base, f);
    base = poly_mulmod(base, base, f);
    e >>= 1;
  }
  return acc;
}

F2Poly poly_gcd(F2Poly a, F2Poly b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

F2Poly trinomial(int n, int l) {
  return (F2Poly(1) << n) | (F2Poly(1) << l) | 1u;
}

void check_trinomial_args(int n, int l) {
  if (n < 2 || n > kMaxWires || l < 1 || l >= n) {
    throw std::invalid_argument("trinomial: need 1 <= l < n <= 24");
  }
}

// Multiplicative inverse of a modulo m (gcd(a, m) = 1).
int mod_inverse(int a, int m) {
  int t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    int qt = r / new_r;
    t -= qt * new_t;
    std::swap(t, new_t);
    r -= qt * new_r;
    std::swap(r, new_r);
  }
  return ((t % m) + m) % m;
}

}  // namespace

F2Matrix::F2Matrix(int n_, std::vector<SigVec> rows_)
    : n(n_), rows(std::move(rows_)) {
  if (n < 1 || n > kMaxWires) {
    throw std::invalid_argument("F2Matrix: dimension out of range");
  }
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("F2Matrix: row count must equal dimension");
  }
  for (SigVec r : rows) {
    if (r & ~low_mask(n)) {
      throw std::invalid_argument("F2Matrix: row has bits above dimension");
    }
  }
}

F2Matrix F2Matrix::identity(int n) {
  std::vector<SigVec> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = SigVec(1) << i;
  return F2Matrix(n, std::move(rows));
}

F2Matrix f2_mul(const F2Matrix& a, const F2Matrix& b) {
  if (a.n != b.n) throw std::invalid_argument("f2_mul: dimension mismatch");
  std::vector<SigVec> rows(a.n, 0);
  for (int i = 0; i < a.n; ++i) {
    SigVec m = a.rows[i];
    SigVec acc = 0;
    while (m) {
      acc ^= b.rows[std::countr_zero(m)];
      m &= m - 1;
    }
    rows[i] = acc;
  }
  return F2Matrix(a.n, std::move(rows));
}

F2Matrix f2_pow(const F2Matrix& a, std::uint64_t e) {
  F2Matrix acc = F2Matrix::identity(a.n);
  F2Matrix base = a;
  while (e) {
    if (e & 1) acc = f2_mul(acc, base);
    base = f2_mul(base, base);
    e >>= 1;
  }
  return acc;
}

F2Matrix f2_inverse(const F2Matrix& a) {
  int n = a.n;
  std::vector<SigVec> m = a.rows;
  std::vector<SigVec> inv = F2Matrix::identity(n).rows;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if ((m[i] >> col) & 1u) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("f2_inverse: singular matrix");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int i = 0; i < n; ++i) {
      if (i != col && ((m[i] >> col) & 1u)) {
        m[i] ^= m[col];
        inv[i] ^= inv[col];
      }
    }
  }
  return F2Matrix(n, std::move(inv));
}

int rank(const F2Matrix& m) {
  std::vector<SigVec> rows = m.rows;
  int r = 0;
  for (int col = 0; col < m.n && r < m.n; ++col) {
    int pivot = -1;
    for (int i = r; i < m.n; ++i) {
      if ((rows[i] >> col) & 1u) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = r + 1; i < m.n; ++i) {
      if ((rows[i] >> col) & 1u) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

bool is_basis(const std::vector<SigVec>& vs) {
  int n = static_cast<int>(vs.size());
  return rank(F2Matrix(n, vs)) == n;
}

bool trinomial_is_irreducible(int n, int l) {
  check_trinomial_args(n, l);
  F2Poly f = trinomial(n, l);
  // x^(2^n) must equal x mod f, and x^(2^(n/p)) - x must be coprime to f
  // for every prime p dividing n.
  F2Poly x = 0b10;
  F2Poly t = x;
  for (int i = 0; i < n; ++i) t = poly_mulmod(t, t, f);
  if (t != x) return false;
  for (std::uint64_t p : prime_factors(static_cast<std::uint64_t>(n))) {
    F2Poly u = x;
    int reps = n / static_cast<int>(p);
    for (int i = 0; i < reps; ++i) u = poly_mulmod(u, u, f);
    if (poly_gcd(u ^ x, f) != 1) return false;
  }
  return true;
}

std::uint64_t trinomial_root_order(int n, int l) {
  check_trinomial_args(n, l);
  if (!trinomial_is_irreducible(n, l)) {
    throw std::invalid_argument("trinomial_root_order: reducible trinomial");
  }
  F2Poly f = trinomial(n, l);
  std::uint64_t group = (std::uint64_t(1) << n) - 1;
  std::uint64_t r = group;
  for (std::uint64_t p : prime_factors(group)) {
    while (r % p == 0 && poly_powmod(0b10, r / p, f) == 1) r /= p;
  }
  return r;
}

std::optional<TrinomialParams> find_circular_params(int n) {
  if (n < 2) throw std::invalid_argument("find_circular_params: n >= 2");
  if (n > kMaxWires) {
    throw std::invalid_argument(
        "find_circular_params: n > 24 unsupported (2^n - 1 factorization "
        "is capped at trial-division scale)");
  }
  std::uint64_t group = (std::uint64_t(1) << n) - 1;
  std::optional<TrinomialParams> fallback;
  for (int l = 1; l < n; ++l) {
    // The construction needs k with k*l = -1 (mod n), so l must be a unit.
    if (std::gcd(l, n) != 1) continue;
    if (!trinomial_is_irreducible(n, l)) continue;
    std::uint64_t r = trinomial_root_order(n, l);
    // k = -l^(-1) mod n; the inverse lies in [1, n-1], so k does too.
    TrinomialParams params{n, l, n - mod_inverse(l, n), r, group / r};
    if (r == group) return params;
    if (!fallback) fallback = params;
  }
  return fallback;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace diagsynth
