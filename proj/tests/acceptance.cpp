// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diagsynth/adaptive.hpp"
#include "diagsynth/angles.hpp"
#include "diagsynth/search.hpp"
#include "diagsynth/synth.hpp"
#include "diagsynth/synth_circular.hpp"
#include "diagsynth/synth_full.hpp"
#include "diagsynth/synth_linear.hpp"

using namespace diagsynth;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

double angle_distance(double a, double b) {
  constexpr double tau = 2.0 * std::numbers::pi;
  double d = std::fmod(std::abs(a - b), tau);
  return std::min(d, tau - d);
}

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

Circuit random_circuit(int n, int cx_gates, std::mt19937& rng) {
  Circuit c(Topology::full(n));
  std::uniform_int_distribution<int> wire(0, n - 1);
  for (int i = 0; i < cx_gates; ++i) {
    int a = wire(rng), b = wire(rng);
    if (a == b) b = (b + 1) % n;
    c.add_cx(a, b);
  }
  return c;
}

const std::vector<int> kPrimitiveN = {2, 3, 4, 5, 6, 7, 9, 10, 11, 15};

// ---- criterion 1: closed-form gate counts, exact for 1 <= n <= 16 ----
Check criterion1() {
  Check c;
  for (int n = 1; n <= 16; ++n) {
    std::int64_t pow2 = std::int64_t(1) << n;
    c.expect(synth_npa_full(n).cx_count() == pow2 - 2,
             "npa_full(" + std::to_string(n) + ")");
    c.expect(synth_spa_full(n).cx_count() == pow2 - n - 1,
             "spa_full(" + std::to_string(n) + ")");
    std::int64_t sign = (n % 2 == 0) ? 1 : -1;
    std::int64_t gray = (5 * pow2 + sign - 3) / 6 - n;
    c.expect(gray_circuit(n).cx_count() == gray,
             "gray(" + std::to_string(n) + ")");
    std::int64_t spa_plain =
        (40 * pow2 + 6 * std::int64_t(n) * n - 60 * n - 33 - 7 * sign) / 24;
    std::int64_t spa_opt = (10 * pow2 - 12 * n - sign - 9) / 6;
    c.expect(synth_spa_linear(n, false).cx_count() == spa_plain,
             "spa_linear(" + std::to_string(n) + ")");
    c.expect(synth_spa_linear(n, true).cx_count() == spa_opt,
             "spa_linear_opt(" + std::to_string(n) + ")");
  }
  for (int n : kPrimitiveN) {
    std::int64_t pow2 = std::int64_t(1) << n;
    c.expect(synth_wpa_circular(n).cx_count() == pow2 - 1,
             "wpa_circular(" + std::to_string(n) + ")");
    c.expect(synth_spa_circular(n).cx_count() == pow2 - n - 1,
             "spa_circular(" + std::to_string(n) + ")");
  }
  return c;
}

// ---- criterion 2: every synthesized circuit passes its variant, n <= 12 ----
Check criterion2() {
  Check c;
  const Variant variants[] = {Variant::NPA, Variant::WPA, Variant::SPA};
  for (int n = 1; n <= 12; ++n) {
    for (Variant v : variants) {
      for (TopologyKind kind : {TopologyKind::Full, TopologyKind::Linear}) {
        Circuit circ = synthesize(v, kind, n).circuit;
        c.expect(check_variant(circ, v).pass,
                 variant_name(v) + "/" + topology_kind_name(kind) + "/n=" +
                     std::to_string(n));
      }
      bool has_trinomial = n == 1 || find_circular_params(n).has_value();
      if (!has_trinomial) continue;  // circular: trinomial n only
      Circuit circ = synthesize(v, TopologyKind::Circular, n).circuit;
      c.expect(check_variant(circ, v).pass,
               variant_name(v) + "/circular/n=" + std::to_string(n));
    }
    c.expect(check_variant(synth_spa_linear(n, /*swap_opt=*/true),
                           Variant::SPA).pass,
             "spa/linear-swap-opt/n=" + std::to_string(n));
  }
  return c;
}

// ---- criterion 3: optimal-count table cells via exact_min ----
Check criterion3() {
  Check c;
  struct Cell {
    Variant v;
    TopologyKind kind;
    int n;
    int expected;
  };
  const std::vector<Cell> cells = {
      {Variant::SPA, TopologyKind::Full, 2, 1},
      {Variant::WPA, TopologyKind::Full, 2, 2},
      {Variant::NPA, TopologyKind::Full, 2, 2},
      {Variant::SPA, TopologyKind::Linear, 2, 1},
      {Variant::WPA, TopologyKind::Linear, 2, 2},
      {Variant::NPA, TopologyKind::Linear, 2, 2},
      {Variant::SPA, TopologyKind::Circular, 2, 1},
      {Variant::WPA, TopologyKind::Circular, 2, 2},
      {Variant::NPA, TopologyKind::Circular, 2, 2},
      {Variant::SPA, TopologyKind::Full, 3, 4},
      {Variant::WPA, TopologyKind::Full, 3, 6},
      {Variant::NPA, TopologyKind::Full, 3, 6},
      {Variant::SPA, TopologyKind::Linear, 3, 5},
      {Variant::WPA, TopologyKind::Linear, 3, 7},
      {Variant::NPA, TopologyKind::Linear, 3, 8},
      {Variant::SPA, TopologyKind::Circular, 3, 4},
      {Variant::WPA, TopologyKind::Circular, 3, 6},
      {Variant::NPA, TopologyKind::Circular, 3, 6},
      {Variant::SPA, TopologyKind::Full, 4, 11},
      {Variant::SPA, TopologyKind::Circular, 4, 11},
  };
  for (const Cell& cell : cells) {
    Topology topo{cell.kind, cell.n, {}};
    ExactMinResult r = exact_min(cell.v, topo, cell.expected + 3);
    std::string tag = variant_name(cell.v) + "/" +
                      topology_kind_name(cell.kind) + "/n=" +
                      std::to_string(cell.n);
    c.expect(!r.budget_exceeded && r.length == cell.expected,
             tag + " expected " + std::to_string(cell.expected) + " got " +
                 std::to_string(r.length));
    if (r.witness) {
      c.expect(check_variant(*r.witness, cell.v).pass, tag + " witness");
    }
  }
  return c;
}

// ---- criterion 4: linear SPA_8 with swap optimization = 409 CX ----
Check criterion4() {
  Check c;
  Circuit spa8 = synth_spa_linear(8, /*swap_opt=*/true);
  c.expect(spa8.cx_count() == 409,
           "count " + std::to_string(spa8.cx_count()));
  c.expect(check_variant(spa8, Variant::SPA).pass, "verification");
  return c;
}

// ---- criterion 5: angle roundtrip through every topology's SPA skeleton ----
Check criterion5() {
  Check c;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  SynthOptions opts;
  opts.swap_opt = true;
  opts.fallback_linear = true;  // circular n = 8 has no trinomial
  for (int n = 2; n <= 8; ++n) {
    std::vector<Circuit> skeletons;
    for (TopologyKind kind : {TopologyKind::Full, TopologyKind::Linear,
                              TopologyKind::Circular}) {
      skeletons.push_back(
          place_phases(synthesize(Variant::SPA, kind, n, opts).circuit));
    }
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> raw(std::size_t(1) << n);
      for (double& a : raw) a = dist(rng);
      PhaseTargets targets = PhaseTargets::from_raw(std::move(raw));
      AngleVector theta = compute_theta(targets);
      for (const Circuit& skel : skeletons) {
        Circuit bound = bind_angles(skel, theta);
        double worst = 0.0;
        for (SigVec b = 0; b < (SigVec(1) << n); ++b) {
          worst = std::max(worst,
                           angle_distance(phase_profile(bound, b),
                                          targets.alpha[b]));
        }
        if (worst >= 1e-9) {
          c.expect(false, "n=" + std::to_string(n) + " worst " +
                              std::to_string(worst));
          return c;
        }
      }
    }
  }
  return c;
}

// ---- criterion 6: reachability on 1000 random bases per n in 3..8 ----
Check criterion6() {
  Check c;
  std::mt19937 rng(99);
  for (int n = 3; n <= 8; ++n) {
    for (int rep = 0; rep < 1000; ++rep) {
      Basis target = random_basis(n, rng);
      Circuit circ = reach(target);
      bool ok = circ.cx_count() <= 2 * n * n &&
                simulate_signatures(circ).final_basis() == target;
      if (!ok) {
        c.expect(false, "n=" + std::to_string(n) + " rep " +
                            std::to_string(rep));
        return c;
      }
    }
  }
  return c;
}

// ---- criterion 7: property suites ----
Check criterion7() {
  Check c;

  // Basis invariance + visited-count bound on synthesized circuits.
  std::vector<Circuit> synthesized;
  for (int n = 1; n <= 10; ++n) {
    for (Variant v : {Variant::NPA, Variant::WPA, Variant::SPA}) {
      synthesized.push_back(synthesize(v, TopologyKind::Full, n).circuit);
      synthesized.push_back(synthesize(v, TopologyKind::Linear, n).circuit);
      if (n == 1 || find_circular_params(n)) {
        synthesized.push_back(synthesize(v, TopologyKind::Circular, n).circuit);
      }
    }
  }
  for (const Circuit& circ : synthesized) {
    SignatureTrace tr = simulate_signatures(circ);
    for (int t = 0; t <= tr.steps; ++t) {
      if (!is_basis(tr.row(t))) {
        c.expect(false, "synthesized basis invariance");
        return c;
      }
    }
    c.expect(visited_signatures(tr).size() <=
                 std::size_t(circ.n + circ.cx_count()),
             "visited bound on synthesized circuit");
  }

  // The same two properties on 1000 random circuits, n <= 8.
  std::mt19937 rng(4242);
  for (int rep = 0; rep < 1000; ++rep) {
    int n = 2 + rep % 7;
    Circuit circ = random_circuit(n, rep % 32, rng);
    SignatureTrace tr = simulate_signatures(circ);
    for (int t = 0; t <= tr.steps; ++t) {
      if (!is_basis(tr.row(t))) {
        c.expect(false, "random basis invariance");
        return c;
      }
    }
    c.expect(visited_signatures(tr).size() <=
                 std::size_t(n + circ.cx_count()),
             "visited bound on random circuit");
  }

  // merge_phase_gates preserves the phase profile and the permutation.
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int rep = 0; rep < 25; ++rep) {
    int n = 5;
    Circuit base = random_circuit(n, 10, rng);
    Circuit mixed(base.topology);
    std::uniform_int_distribution<int> wire(0, n - 1);
    std::size_t gi = 0;
    for (int p = 0; p < 30; ++p) {
      if (gi < base.gates.size() && p % 2 == 0) mixed.add(base.gates[gi++]);
      mixed.add_phase(wire(rng), angle(rng));
    }
    while (gi < base.gates.size()) mixed.add(base.gates[gi++]);
    Circuit merged = merge_phase_gates(mixed);
    c.expect(merged.phase_count() <= (1 << n) - 1, "merged phase count");
    for (SigVec b = 0; b < (SigVec(1) << n); ++b) {
      if (angle_distance(phase_profile(mixed, b), phase_profile(merged, b)) >=
              1e-9 ||
          final_permutation(mixed, b) != final_permutation(merged, b)) {
        c.expect(false, "merge preservation");
        return c;
      }
    }
  }

  // GRAY middle-wire coverage for n <= 10.
  for (int n = 1; n <= 10; ++n) {
    Circuit g = gray_circuit(n);
    int m = n / 2;
    SignatureTrace tr = simulate_signatures(g);
    std::vector<char> on_middle(std::size_t(1) << n, 0);
    for (int t = 0; t <= tr.steps; ++t) on_middle[tr.at(m, t)] = 1;
    for (SigVec v = 1; v < (SigVec(1) << n); ++v) {
      if (((v >> m) & 1u) && !on_middle[v]) {
        c.expect(false, "gray coverage n=" + std::to_string(n));
        return c;
      }
    }
    for (int k = 0; k < n; ++k) {
      if (k != m) {
        c.expect(tr.at(k, tr.steps) == SigVec(1) << k,
                 "gray non-middle wire changed");
      }
    }
  }

  // Row correspondence between the circular stream and powers of A, n <= 8.
  for (int n : {2, 3, 4, 5, 6, 7}) {
    auto params = find_circular_params(n);
    CompanionState st = make_companion_state(*params);
    Circuit stream = synth_wpa_circular(n);
    SignatureTrace tr = simulate_signatures(stream);
    F2Matrix power = F2Matrix::identity(n);
    for (int t = 0; t <= tr.steps; ++t) {
      for (int i = 0; i < n; ++i) {
        int wire = int((std::int64_t(params->k) * t + i) % n);
        if (power.rows[i] != tr.at(wire, t)) {
          c.expect(false, "row correspondence n=" + std::to_string(n));
          return c;
        }
      }
      power = f2_mul(st.A, power);
    }
  }

  // SPA truncation introduces no new signatures, n <= 10.
  for (int n : {2, 3, 4, 5, 6, 7, 9, 10}) {
    auto full_sigs = visited_signatures(simulate_signatures(synth_wpa_circular(n)));
    auto trunc_sigs = visited_signatures(simulate_signatures(synth_spa_circular(n)));
    c.expect(full_sigs == trunc_sigs,
             "truncation changed coverage n=" + std::to_string(n));
  }
  return c;
}

// ---- criterion 8: adaptive skip-set example on linear n = 4 ----
Check criterion8() {
  Check c;
  std::vector<SigVec> skip_sigs = {0b1001, 0b1010, 0b1110, 0b1111};
  AngleVector theta{4, std::vector<double>(16, 0.0)};
  for (SigVec v = 1; v < 16; ++v) theta.theta[v] = 0.11 * v;
  for (SigVec v : skip_sigs) theta.theta[v] = 0.0;
  SkipSet skip = discover_skip_set(theta, 1e-9);
  c.expect(skip.sigs == skip_sigs, "skip set discovery");

  // A hand-built 7-CX circuit visits exactly the required signatures.
  Circuit reference(Topology::linear(4));
  reference.add_cx(0, 1);
  reference.add_cx(2, 1);
  reference.add_cx(3, 2);
  reference.add_cx(1, 2);
  reference.add_cx(0, 1);
  reference.add_cx(1, 2);
  reference.add_cx(2, 3);
  auto fig_visited = visited_signatures(simulate_signatures(reference));
  for (SigVec v = 1; v < 16; ++v) {
    bool visited = std::binary_search(fig_visited.begin(), fig_visited.end(), v);
    if (skip.contains(v)) {
      c.expect(!visited, "reference circuit visits a skipped signature");
    } else {
      c.expect(visited, "reference circuit misses a required signature");
    }
  }

  SkippingResult r = synth_skipping(skip, Topology::linear(4));
  c.expect(r.circuit.cx_count() <= 11,
           "skipping count " + std::to_string(r.circuit.cx_count()));
  auto visited = visited_signatures(simulate_signatures(r.circuit));
  for (SigVec v = 1; v < 16; ++v) {
    if (!skip.contains(v)) {
      c.expect(std::binary_search(visited.begin(), visited.end(), v),
               "skipping circuit misses a signature");
    }
  }
  Circuit bound = bind_angles(
      place_phases(r.circuit, /*require_spa_complete=*/false), theta);
  PhaseTargets oracle = reconstruct_alpha(theta);
  for (SigVec b = 0; b < 16; ++b) {
    c.expect(angle_distance(phase_profile(bound, b), oracle.alpha[b]) < 1e-9,
             "phase profile under skipping");
  }
  if (r.circuit.cx_count() <= 7) {
    c.detail << "search matched the 7-CX reference";
  }
  return c;
}

// ---- criterion 9: lower-bound consistency for the searched cells ----
Check criterion9() {
  Check c;
  for (int n = 1; n <= 3; ++n) {
    for (Variant v : {Variant::NPA, Variant::WPA, Variant::SPA}) {
      for (TopologyKind kind : {TopologyKind::Full, TopologyKind::Linear,
                                TopologyKind::Circular}) {
        Topology topo{kind, n, {}};
        ExactMinResult r = exact_min(v, topo, 12);
        std::string tag = variant_name(v) + "/" + topology_kind_name(kind) +
                          "/n=" + std::to_string(n);
        c.expect(!r.budget_exceeded, tag + " budget");
        c.expect(r.length >= verify_lower_bound(v, kind, n), tag + " bound");
        if (v != Variant::SPA && kind == TopologyKind::Full) {
          c.expect(r.length == (std::int64_t(1) << n) - 2,
                   tag + " full-topology optimum");
        }
      }
    }
  }
  return c;
}

struct Criterion {
  int number;
  std::string name;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form gate counts exact for n <= 16", criterion1},
      {2, "synthesized circuits verify for their variant, n <= 12", criterion2},
      {3, "optimal-count table cells reproduced by exact search", criterion3},
      {4, "linear SPA_8 with swap optimization has 409 CX", criterion4},
      {5, "angle roundtrip < 1e-9 on SPA skeletons, n = 2..8", criterion5},
      {6, "reachability: 1000 random bases per n in 3..8", criterion6},
      {7, "property suites (bases, counting, merge, GRAY, stream, truncation)",
       criterion7},
      {8, "adaptive skip-set example on linear n = 4", criterion8},
      {9, "exact search respects the analytic lower bounds", criterion9},
  };
  int failures = 0;
  for (const Criterion& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check result = cr.run();
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::string detail = result.detail.str();
    std::printf("[%s] criterion %d (%.2fs): %s%s%s\n",
                result.ok ? "PASS" : "FAIL", cr.number, secs, cr.name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!result.ok) ++failures;
  }
  return failures;
}
