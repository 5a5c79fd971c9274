#include <doctest.h>

#include <random>

#include "diagsynth/synth_linear.hpp"

using namespace diagsynth;

namespace {

Basis random_basis(int n, std::mt19937& rng) {
  std::vector<SigVec> rows(n);
  for (int k = 0; k < n; ++k) rows[k] = SigVec(1) << k;
  std::uniform_int_distribution<int> wire(0, n - 1);
  for (int step = 0; step < 12 * n; ++step) {
    int a = wire(rng), b = wire(rng);
    if (a != b) rows[b] ^= rows[a];
  }
  return Basis{n, rows};
}

}  // namespace

TEST_CASE("v_circuit") {
  Circuit v01 = v_circuit(0, 1, 2);
  CHECK(v01.gates == std::vector<Gate>{Gate::cx(0, 1)});

  Circuit v04 = v_circuit(0, 4, 5);
  CHECK(v04.cx_count() == 7);
  CHECK(simulate_signatures(v04).final_basis().vecs ==
        std::vector<SigVec>{0b00001, 0b00010, 0b00100, 0b01000, 0b11111});

  Circuit v41 = v_circuit(4, 1, 5);
  CHECK(v41.cx_count() == 5);
  CHECK(simulate_signatures(v41).final_basis().vecs ==
        std::vector<SigVec>{0b00001, 0b11110, 0b00100, 0b01000, 0b10000});

  CHECK_THROWS_AS(v_circuit(2, 2, 4), std::invalid_argument);
}

TEST_CASE("v_circuit postcondition for all wire pairs") {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CAPTURE(n); CAPTURE(i); CAPTURE(j);
        Circuit v = v_circuit(i, j, n);
        CHECK(v.cx_count() == 2 * std::abs(i - j) - 1);
        Basis fin = simulate_signatures(v).final_basis();
        SigVec range = 0;
        for (int k = std::min(i, j); k <= std::max(i, j); ++k) {
          range |= SigVec(1) << k;
        }
        for (int k = 0; k < n; ++k) {
          CHECK(fin.vecs[k] == (k == j ? range : SigVec(1) << k));
        }
      }
    }
  }
}

TEST_CASE("gray_circuit basics") {
  CHECK(gray_circuit(1).gates.empty());
  CHECK(gray_circuit(2).cx_count() == 1);
  CHECK(gray_circuit(5).cx_count() == 21);
  CHECK(gray_circuit_cx_count(5) == 21);
}

TEST_CASE("gray_circuit middle-wire coverage") {
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    Circuit g = gray_circuit(n);
    CHECK(g.cx_count() == gray_circuit_cx_count(n));
    int m = n / 2;
    SignatureTrace tr = simulate_signatures(g);
    // Every signature containing e_m appears, all of them on wire m.
    std::vector<char> on_middle(std::size_t(1) << n, 0);
    for (int t = 0; t <= tr.steps; ++t) on_middle[tr.at(m, t)] = 1;
    for (SigVec v = 1; v < (SigVec(1) << n); ++v) {
      if ((v >> m) & 1u) CHECK(on_middle[v]);
    }
    // Wires other than m end unchanged, and no other wire ever carries e_m.
    for (int k = 0; k < n; ++k) {
      if (k == m) continue;
      CHECK(tr.at(k, tr.steps) == SigVec(1) << k);
      for (int t = 0; t <= tr.steps; ++t) {
        CHECK(((tr.at(k, t) >> m) & 1u) == 0);
      }
    }
  }
}

TEST_CASE("synth_spa_linear gate counts") {
  CHECK(synth_spa_linear(3, false).cx_count() == 7);
  CHECK(synth_spa_linear(4, false).cx_count() == 19);
  CHECK(synth_spa_linear(8, true).cx_count() == 409);
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(synth_spa_linear(n, false).cx_count() ==
          synth_spa_linear_cx_count(n, false));
    CHECK(synth_spa_linear(n, true).cx_count() ==
          synth_spa_linear_cx_count(n, true));
  }
}

TEST_CASE("synth_spa_linear passes SPA in both flavors") {
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(check_variant(synth_spa_linear(n, false), Variant::SPA).pass);
    CHECK(check_variant(synth_spa_linear(n, true), Variant::SPA).pass);
  }
}

TEST_CASE("reach") {
  Basis standard{4, {0b0001, 0b0010, 0b0100, 0b1000}};
  CHECK(reach(standard).gates.empty());

  Basis spa4 = simulate_signatures(synth_spa_linear(4, false)).final_basis();
  Circuit fix = reach(spa4);
  CHECK(fix.cx_count() <= 32);
  CHECK(simulate_signatures(fix).final_basis() == spa4);

  CHECK_THROWS_AS(reach(Basis{3, {0b011, 0b101, 0b110}}), std::invalid_argument);

  std::mt19937 rng(17);
  for (int rep = 0; rep < 1000; ++rep) {
    Basis target = random_basis(8, rng);
    Circuit c = reach(target);
    CHECK(c.cx_count() <= 2 * 8 * 8);
    CHECK(simulate_signatures(c).final_basis() == target);
  }
}

TEST_CASE("synth_npa_linear") {
  CHECK(synth_npa_linear(1).gates.empty());

  Circuit c3 = synth_npa_linear(3);
  CHECK(check_variant(c3, Variant::NPA).pass);
  CHECK(c3.cx_count() >= 8);  // optimum from the optimal-counts table
  CHECK(c3.cx_count() <= synth_spa_linear_cx_count(3, true) + 2 * 9);

  Circuit c6 = synth_npa_linear(6);
  CHECK(check_variant(c6, Variant::NPA).pass);
  CHECK(c6.cx_count() <= synth_spa_linear_cx_count(6, true) + 2 * 36);
}

TEST_CASE("synth_wpa_linear") {
  CHECK(synth_wpa_linear(2).cx_count() == 2);
  CHECK(check_variant(synth_wpa_linear(2), Variant::WPA).pass);

  Circuit c3 = synth_wpa_linear(3);
  CHECK(check_variant(c3, Variant::WPA).pass);
  CHECK(c3.cx_count() >= 7);  // optimum from the optimal-counts table

  CHECK(synth_wpa_linear(5).cx_count() <= synth_npa_linear(5).cx_count());
}

TEST_CASE("linear constructions verify up to n = 12") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(check_variant(synth_npa_linear(n), Variant::NPA).pass);
    CHECK(check_variant(synth_wpa_linear(n), Variant::WPA).pass);
  }
}
