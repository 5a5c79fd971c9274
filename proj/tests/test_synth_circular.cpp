#include <doctest.h>

#include "diagsynth/synth_circular.hpp"
#include "diagsynth/synth_linear.hpp"

using namespace diagsynth;

namespace {

std::vector<SigVec> rotated_rows(const SignatureTrace& tr, int t, int k, int n) {
  // Row i of A^j corresponds to wire (k*j + i) mod n at time j.
  std::vector<SigVec> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i] = tr.at(int((std::int64_t(k) * t + i) % n), t);
  }
  return rows;
}

}  // namespace

TEST_CASE("companion matrices") {
  auto params = find_circular_params(3);
  REQUIRE(params.has_value());
  CompanionState st = make_companion_state(*params);
  CHECK(st.B.rows == std::vector<SigVec>{0b001, 0b011, 0b100});
  CHECK(st.C.rows == std::vector<SigVec>{0b010, 0b100, 0b001});
  // A = C^2 B for n = 3, k = 2.
  CHECK(st.A == f2_mul(f2_pow(st.C, 2), st.B));
  CHECK(st.G == st.A);
}

TEST_CASE("char_poly") {
  CHECK(char_poly(F2Matrix::identity(2)) == 0b101);  // (x + 1)^2 = x^2 + 1

  auto params = find_circular_params(3);
  CompanionState st = make_companion_state(*params);
  CHECK(char_poly(st.A) == 0b1011);  // x^3 + x + 1

  // Pure cyclic shift on 4 wires: x^4 + 1.
  std::vector<SigVec> c4(4);
  for (int i = 0; i < 4; ++i) c4[i] = SigVec(1) << ((i + 1) % 4);
  CHECK(char_poly(F2Matrix(4, c4)) == 0b10001);

  // det(xI - A) = x^n + x^l + 1 for the stream matrix, across trinomial n.
  for (int n : {2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 14}) {
    CAPTURE(n);
    auto p = find_circular_params(n);
    REQUIRE(p.has_value());
    CompanionState s = make_companion_state(*p);
    CHECK(char_poly(s.A) == ((F2Poly(1) << n) | (F2Poly(1) << p->l) | 1));
  }
}

TEST_CASE("companion matrix order for primitive trinomials") {
  for (int n = 2; n <= 12; ++n) {
    auto params = find_circular_params(n);
    if (!params || !params->primitive()) continue;
    CAPTURE(n);
    CompanionState st = make_companion_state(*params);
    std::uint64_t group = (std::uint64_t(1) << n) - 1;
    CHECK(f2_pow(st.A, group) == F2Matrix::identity(n));
    for (std::uint64_t p : prime_factors(group)) {
      CHECK_FALSE(f2_pow(st.A, group / p) == F2Matrix::identity(n));
    }
  }
}

TEST_CASE("synth_wpa_circular") {
  Circuit c3 = synth_wpa_circular(3);
  std::vector<Gate> expected = {Gate::cx(0, 1), Gate::cx(2, 0), Gate::cx(1, 2),
                                Gate::cx(0, 1), Gate::cx(2, 0), Gate::cx(1, 2),
                                Gate::cx(0, 1)};
  CHECK(c3.gates == expected);
  CHECK(check_variant(c3, Variant::WPA).pass);

  Circuit c5 = synth_wpa_circular(5);
  CHECK(c5.cx_count() == 31);
  CHECK(check_variant(c5, Variant::WPA).pass);

  Circuit c2 = synth_wpa_circular(2);
  CHECK(c2.cx_count() == 3);
  CHECK(check_variant(c2, Variant::WPA).pass);

  CHECK_THROWS_AS(synth_wpa_circular(8), unsupported_error);
  CHECK_THROWS_AS(synth_wpa_circular(12), unsupported_error);
}

TEST_CASE("synth_spa_circular") {
  CHECK(synth_spa_circular(3).cx_count() == 4);
  CHECK(synth_spa_circular(5).cx_count() == 26);
  CHECK(synth_spa_circular(7).cx_count() == 120);
  for (int n : {2, 3, 4, 5, 6, 7}) {
    CAPTURE(n);
    CHECK(check_variant(synth_spa_circular(n), Variant::SPA).pass);
  }
}

TEST_CASE("row correspondence between the gate stream and powers of A") {
  for (int n : {2, 3, 4, 5, 6, 7}) {
    CAPTURE(n);
    auto params = find_circular_params(n);
    REQUIRE(params.has_value());
    CompanionState st = make_companion_state(*params);
    Circuit c = synth_wpa_circular(n);
    SignatureTrace tr = simulate_signatures(c);
    F2Matrix power = F2Matrix::identity(n);
    for (int t = 0; t <= tr.steps; ++t) {
      CHECK(power.rows == rotated_rows(tr, t, params->k, n));
      power = f2_mul(st.A, power);
    }
  }
}

TEST_CASE("the last n gates of the WPA stream add no new signatures") {
  for (int n : {2, 3, 4, 5, 6, 7, 9, 10}) {
    CAPTURE(n);
    Circuit wpa = synth_wpa_circular(n);
    Circuit spa = synth_spa_circular(n);
    auto all = visited_signatures(simulate_signatures(wpa));
    auto trunc = visited_signatures(simulate_signatures(spa));
    CHECK(all == trunc);
    CHECK(wpa.cx_count() == spa.cx_count() + n);
  }
}

TEST_CASE("synth_circular_nonprimitive") {
  CircularSynthesis s12 = synth_circular_nonprimitive(12);
  CHECK(s12.params.q == 5);
  CHECK(s12.circuit.cx_count() <= 4095 + 4 * 2 * 144);
  CHECK(check_variant(s12.circuit, Variant::SPA).pass);

  CircularSynthesis s14 = synth_circular_nonprimitive(14);
  CHECK(s14.params.q == 3);
  CHECK(check_variant(s14.circuit, Variant::SPA).pass);

  // Primitive n degenerates to the full WPA stream.
  CircularSynthesis s5 = synth_circular_nonprimitive(5);
  CHECK(s5.circuit.gates == synth_wpa_circular(5).gates);

  CHECK_THROWS_AS(synth_circular_nonprimitive(8), unsupported_error);
}

TEST_CASE("circular WPA and NPA assemblies") {
  for (int n : {2, 3, 4, 5, 6, 7, 12}) {
    CAPTURE(n);
    CHECK(check_variant(synth_npa_circular(n), Variant::NPA).pass);
    CHECK(check_variant(synth_wpa_circular_any(n), Variant::WPA).pass);
  }
}
