#include "diagsynth/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

namespace diagsynth {

namespace {

void check_wire_count(int n) {
  if (n < 1 || n > kMaxWires) {
    throw std::invalid_argument("Topology: wire count must be in [1, 24]");
  }
}

std::vector<SigVec> standard_rows(int n) {
  std::vector<SigVec> rows(n);
  for (int k = 0; k < n; ++k) rows[k] = SigVec(1) << k;
  return rows;
}

}  // namespace

std::string topology_kind_name(TopologyKind k) {
  switch (k) {
    case TopologyKind::Full: return "full";
    case TopologyKind::Linear: return "linear";
    case TopologyKind::Circular: return "circular";
    case TopologyKind::Custom: return "custom";
  }
  return "?";
}

TopologyKind parse_topology_kind(const std::string& s) {
  if (s == "full") return TopologyKind::Full;
  if (s == "linear") return TopologyKind::Linear;
  if (s == "circular") return TopologyKind::Circular;
  if (s == "custom") return TopologyKind::Custom;
  throw std::invalid_argument("unknown topology kind: " + s);
}

Topology Topology::full(int n) {
  check_wire_count(n);
  return Topology{TopologyKind::Full, n, {}};
}

Topology Topology::linear(int n) {
  check_wire_count(n);
  return Topology{TopologyKind::Linear, n, {}};
}

Topology Topology::circular(int n) {
  check_wire_count(n);
  return Topology{TopologyKind::Circular, n, {}};
}

Topology Topology::custom(int n, std::vector<std::pair<int, int>> edges) {
  check_wire_count(n);
  for (auto& [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
      throw std::invalid_argument("Topology: bad custom edge");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Topology{TopologyKind::Custom, n, std::move(edges)};
}

bool Topology::allows(int a, int b) const {
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) return false;
  switch (kind) {
    case TopologyKind::Full:
      return true;
    case TopologyKind::Linear:
      return std::abs(a - b) == 1;
    case TopologyKind::Circular: {
      int d = std::abs(a - b);
      return d == 1 || d == n - 1;
    }
    case TopologyKind::Custom: {
      auto e = std::minmax(a, b);
      return std::binary_search(edges.begin(), edges.end(),
                                std::make_pair(e.first, e.second));
    }
  }
  return false;
}

Gate Gate::cx(int control, int target) {
  Gate g;
  g.kind = GateKind::CX;
  g.control = control;
  g.target = target;
  return g;
}

Gate Gate::phase(int wire, double theta) {
  Gate g;
  g.kind = GateKind::Phase;
  g.wire = wire;
  g.theta = theta;
  return g;
}

Gate Gate::phase_sym(int wire, SigVec sym) {
  Gate g;
  g.kind = GateKind::Phase;
  g.wire = wire;
  g.symbolic = true;
  g.sym = sym;
  return g;
}

Circuit::Circuit(Topology t) : n(t.n), topology(std::move(t)) {}

void Circuit::add(const Gate& g) {
  if (g.kind == GateKind::CX) {
    if (!topology.allows(g.control, g.target)) {
      throw std::invalid_argument(
          "CX(" + std::to_string(g.control) + ", " + std::to_string(g.target) +
          ") violates " + topology_kind_name(topology.kind) + " topology");
    }
  } else {
    if (g.wire < 0 || g.wire >= n) {
      throw std::invalid_argument("phase gate wire out of range");
    }
  }
  gates.push_back(g);
}

void Circuit::add_cx(int control, int target) { add(Gate::cx(control, target)); }
void Circuit::add_phase(int wire, double theta) { add(Gate::phase(wire, theta)); }
void Circuit::add_phase_sym(int wire, SigVec sym) { add(Gate::phase_sym(wire, sym)); }

int Circuit::cx_count() const {
  int c = 0;
  for (const Gate& g : gates) c += (g.kind == GateKind::CX);
  return c;
}

int Circuit::phase_count() const {
  return static_cast<int>(gates.size()) - cx_count();
}

bool Circuit::has_symbolic() const {
  for (const Gate& g : gates) {
    if (g.kind == GateKind::Phase && g.symbolic) return true;
  }
  return false;
}

Circuit with_topology(const Circuit& c, Topology t) {
  if (t.n != c.n) throw std::invalid_argument("with_topology: wire mismatch");
  Circuit out(std::move(t));
  for (const Gate& g : c.gates) out.add(g);
  return out;
}

std::vector<SigVec> SignatureTrace::row(int t) const {
  return std::vector<SigVec>(table.begin() + std::size_t(t) * n,
                             table.begin() + std::size_t(t + 1) * n);
}

Basis SignatureTrace::final_basis() const { return Basis{n, row(steps)}; }

SignatureTrace simulate_signatures(const Circuit& c) {
  SignatureTrace tr;
  tr.n = c.n;
  tr.steps = c.cx_count();
  tr.table.reserve(std::size_t(tr.steps + 1) * c.n);
  std::vector<SigVec> sig = standard_rows(c.n);
  tr.table.insert(tr.table.end(), sig.begin(), sig.end());
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::CX) continue;
    sig[g.target] ^= sig[g.control];
    tr.table.insert(tr.table.end(), sig.begin(), sig.end());
  }
  return tr;
}

std::vector<SigVec> visited_signatures(const SignatureTrace& tr) {
  std::vector<char> seen(std::size_t(1) << tr.n, 0);
  for (SigVec v : tr.table) seen[v] = 1;
  std::vector<SigVec> out;
  for (std::size_t v = 1; v < seen.size(); ++v) {
    if (seen[v]) out.push_back(static_cast<SigVec>(v));
  }
  return out;
}

VariantReport check_variant(const Circuit& c, Variant variant) {
  SignatureTrace tr = simulate_signatures(c);
  VariantReport rep;
  rep.variant = variant;
  rep.visited = visited_signatures(tr);
  rep.final_basis = tr.final_basis();

  std::vector<char> seen(std::size_t(1) << c.n, 0);
  for (SigVec v : rep.visited) seen[v] = 1;
  for (std::size_t v = 1; v < seen.size(); ++v) {
    if (!seen[v]) rep.missing.push_back(static_cast<SigVec>(v));
  }

  bool perm = true;
  std::vector<int> sigma(c.n);
  for (int k = 0; k < c.n; ++k) {
    SigVec v = rep.final_basis.vecs[k];
    if (std::popcount(v) != 1) {
      perm = false;
      break;
    }
    sigma[k] = std::countr_zero(v);
  }
  if (perm) rep.wire_permutation = sigma;

  bool spa = rep.missing.empty();
  switch (variant) {
    case Variant::SPA:
      rep.pass = spa;
      break;
    case Variant::WPA:
      rep.pass = spa && perm;
      break;
    case Variant::NPA: {
      bool id = perm;
      for (int k = 0; id && k < c.n; ++k) id = (sigma[k] == k);
      rep.pass = spa && id;
      break;
    }
  }
  return rep;
}

Circuit merge_phase_gates(const Circuit& c) {
  Circuit out(c.topology);
  std::vector<SigVec> sig = standard_rows(c.n);
  std::unordered_map<SigVec, std::size_t> first;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CX) {
      sig[g.target] ^= sig[g.control];
      out.add(g);
      continue;
    }
    SigVec v = sig[g.wire];
    auto it = first.find(v);
    if (it == first.end()) {
      first.emplace(v, out.gates.size());
      out.add(g);
    } else {
      Gate& kept = out.gates[it->second];
      if (!kept.symbolic && !g.symbolic) {
        kept.theta += g.theta;
      } else if (!(kept.symbolic && g.symbolic && kept.sym == g.sym)) {
        throw std::invalid_argument(
            "merge_phase_gates: conflicting phase parameters at one signature");
      }
    }
  }
  return out;
}

Circuit place_phases(const Circuit& skeleton, bool require_spa_complete) {
  for (const Gate& g : skeleton.gates) {
    if (g.kind == GateKind::Phase) {
      throw std::invalid_argument("place_phases: skeleton must be CX-only");
    }
  }
  Circuit out(skeleton.topology);
  std::vector<char> seen(std::size_t(1) << skeleton.n, 0);
  std::vector<SigVec> sig = standard_rows(skeleton.n);
  std::size_t distinct = 0;
  for (int k = 0; k < skeleton.n; ++k) {
    out.add_phase_sym(k, sig[k]);
    seen[sig[k]] = 1;
    ++distinct;
  }
  for (const Gate& g : skeleton.gates) {
    out.add(g);
    sig[g.target] ^= sig[g.control];
    if (!seen[sig[g.target]]) {
      seen[sig[g.target]] = 1;
      ++distinct;
      out.add_phase_sym(g.target, sig[g.target]);
    }
  }
  if (require_spa_complete && distinct != (std::size_t(1) << skeleton.n) - 1) {
    throw std::invalid_argument("place_phases: skeleton does not pass SPA");
  }
  return out;
}

double phase_profile(const Circuit& c, SigVec b) {
  std::vector<SigVec> sig = standard_rows(c.n);
  double sum = 0.0;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CX) {
      sig[g.target] ^= sig[g.control];
    } else {
      if (g.symbolic) {
        throw std::invalid_argument("phase_profile: symbolic angles present");
      }
      if (f2_dot(sig[g.wire], b)) sum += g.theta;
    }
  }
  constexpr double tau = 2.0 * std::numbers::pi;
  double r = std::fmod(sum, tau);
  if (r < 0) r += tau;
  return r;
}

SigVec final_permutation(const Circuit& c, SigVec b) {
  std::vector<SigVec> sig = standard_rows(c.n);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CX) sig[g.target] ^= sig[g.control];
  }
  SigVec out = 0;
  for (int k = 0; k < c.n; ++k) {
    if (f2_dot(sig[k], b)) out |= SigVec(1) << k;
  }
  return out;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::NPA: return "npa";
    case Variant::WPA: return "wpa";
    case Variant::SPA: return "spa";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "npa" || s == "NPA") return Variant::NPA;
  if (s == "wpa" || s == "WPA") return Variant::WPA;
  if (s == "spa" || s == "SPA") return Variant::SPA;
  throw std::invalid_argument("unknown variant: " + s);
}

}  // namespace diagsynth
