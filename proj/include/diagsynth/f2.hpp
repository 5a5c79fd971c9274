#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace diagsynth {

// Element of F_2^n stored as an n-bit mask; bit k holds the coefficient of
// e_k, so the binary shorthand "011" for e_0 + e_1 is literally the mask 0b011.
using SigVec = std::uint32_t;

// Polynomial over F_2 stored as a bitmask; bit i is the coefficient of x^i.
using F2Poly = std::uint64_t;

// Upper limit on the wire count, set by the mask representation and by the
// trial-division factorization of 2^n - 1 used for root-order tests.
inline constexpr int kMaxWires = 24;

// F_2 inner product <a, b>: parity of the bitwise AND.
inline int f2_dot(SigVec a, SigVec b) { return std::popcount(a & b) & 1; }

// Square bit matrix over F_2; rows[i] is the mask of row i.
struct F2Matrix {
  int n = 0;
  std::vector<SigVec> rows;

  F2Matrix() = default;
  F2Matrix(int n, std::vector<SigVec> rows);
  static F2Matrix identity(int n);

  bool get(int i, int j) const { return (rows[i] >> j) & 1u; }
  bool operator==(const F2Matrix&) const = default;
};

F2Matrix f2_mul(const F2Matrix& a, const F2Matrix& b);
F2Matrix f2_pow(const F2Matrix& a, std::uint64_t e);
// Throws std::invalid_argument when the matrix is singular.
F2Matrix f2_inverse(const F2Matrix& a);

int rank(const F2Matrix& m);

// n signature vectors ordered by wire index; valid when they span F_2^n.
struct Basis {
  int n = 0;
  std::vector<SigVec> vecs;
  bool operator==(const Basis&) const = default;
};

// True iff the vectors form a basis of F_2^(|vs|). Throws on vectors with
// bits at or above the implied dimension.
bool is_basis(const std::vector<SigVec>& vs);

// Parameters of the trinomial x^n + x^l + 1 driving the circular
// constructions: k solves k*l = -1 (mod n), r is the multiplicative order of
// a root, and q = (2^n - 1) / r.
struct TrinomialParams {
  int n = 0;
  int l = 0;
  int k = 0;
  std::uint64_t r = 0;
  std::uint64_t q = 0;
  bool primitive() const { return q == 1; }
  bool operator==(const TrinomialParams&) const = default;
};

// Deterministic irreducibility test for x^n + x^l + 1 over F_2.
bool trinomial_is_irreducible(int n, int l);

// Multiplicative order of x in F_2[x]/(x^n + x^l + 1); requires the
// trinomial to be irreducible.
std::uint64_t trinomial_root_order(int n, int l);

// Smallest-l irreducible trinomial admitting a stepping constant k
// (k*l = -1 mod n), preferring primitive ones; nullopt when none exists.
std::optional<TrinomialParams> find_circular_params(int n);

// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace diagsynth
