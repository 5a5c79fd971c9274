#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diagsynth/f2.hpp"

namespace diagsynth {

// Raised when a requested (variant, topology, n) combination has no
// construction; the CLI maps it to its "unsupported" exit code.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TopologyKind { Full, Linear, Circular, Custom };

std::string topology_kind_name(TopologyKind k);
TopologyKind parse_topology_kind(const std::string& s);

struct Topology {
  TopologyKind kind = TopologyKind::Full;
  int n = 0;
  // Custom only: unordered adjacent pairs, normalized a < b.
  std::vector<std::pair<int, int>> edges;

  static Topology full(int n);
  static Topology linear(int n);
  static Topology circular(int n);
  static Topology custom(int n, std::vector<std::pair<int, int>> edges);

  // Whether CX(a, b) is allowed; adjacency is unordered.
  bool allows(int a, int b) const;
  bool operator==(const Topology&) const = default;
};

enum class GateKind { CX, Phase };

struct Gate {
  GateKind kind = GateKind::CX;
  int control = -1;
  int target = -1;
  int wire = -1;
  bool symbolic = false;
  double theta = 0.0;
  SigVec sym = 0;  // symbolic reference: index into theta-hat, as a signature

  static Gate cx(int control, int target);
  static Gate phase(int wire, double theta);
  static Gate phase_sym(int wire, SigVec sym);
  bool operator==(const Gate&) const = default;
};

// Ordered CX + phase gate list over a topology. Time counts CX gates only;
// phase gates sit between time steps.
struct Circuit {
  int n = 0;
  Topology topology;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(Topology t);

  void add(const Gate& g);  // validates wire range and topology adjacency
  void add_cx(int control, int target);
  void add_phase(int wire, double theta);
  void add_phase_sym(int wire, SigVec sym);

  int cx_count() const;
  int phase_count() const;
  bool has_symbolic() const;
};

// Same gates on a different topology (every CX must stay adjacent).
Circuit with_topology(const Circuit& c, Topology t);

// Wire signatures v_k(t) for every wire k and time t in [0, #CX].
struct SignatureTrace {
  int n = 0;
  int steps = 0;
  std::vector<SigVec> table;  // (steps + 1) * n, row-major by time

  SigVec at(int wire, int t) const { return table[std::size_t(t) * n + wire]; }
  std::vector<SigVec> row(int t) const;
  Basis final_basis() const;
};

enum class Variant { NPA, WPA, SPA };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

struct VariantReport {
  Variant variant = Variant::SPA;
  bool pass = false;
  std::vector<SigVec> visited;  // sorted ascending
  std::vector<SigVec> missing;  // nonzero signatures never visited, sorted
  Basis final_basis;
  // sigma with v_k(end) = e_{sigma(k)}, when the final basis is a
  // wire permutation of the standard basis.
  std::optional<std::vector<int>> wire_permutation;
};

SignatureTrace simulate_signatures(const Circuit& c);
std::vector<SigVec> visited_signatures(const SignatureTrace& tr);
VariantReport check_variant(const Circuit& c, Variant variant);

// One phase gate per distinct signature, angles summed onto the first
// placement; CX gates and their relative order are untouched.
Circuit merge_phase_gates(const Circuit& c);

// Inserts one symbolic phase gate per visited signature at its first
// (wire, time) appearance: e_k at time 0 on wire k, every other signature
// right after the CX introducing it. With require_spa_complete the skeleton
// must visit all 2^n - 1 signatures (the adaptive path places fewer).
Circuit place_phases(const Circuit& skeleton, bool require_spa_complete = true);

// Total phase picked up by basis state b, reduced into [0, 2*pi).
double phase_profile(const Circuit& c, SigVec b);

// Image of basis state b under the circuit's CX permutation:
// bit k of the result is <v_k(end), b>.
SigVec final_permutation(const Circuit& c, SigVec b);

}  // namespace diagsynth
