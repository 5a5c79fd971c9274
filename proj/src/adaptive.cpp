#include "diagsynth/adaptive.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "diagsynth/synth_circular.hpp"
#include "diagsynth/synth_full.hpp"
#include "diagsynth/synth_linear.hpp"

namespace diagsynth {

namespace {

constexpr int kSearchMaxWires = 6;  // visited masks packed into one word

struct StateKey {
  std::uint64_t basis = 0;
  std::uint64_t remaining = 0;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = k.basis * 0x9e3779b97f4a7c15ull;
    h ^= k.remaining + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t pack_basis(const std::array<SigVec, kSearchMaxWires>& rows,
                         int n) {
  std::uint64_t key = 0;
  for (int k = 0; k < n; ++k) key |= std::uint64_t(rows[k]) << (k * n);
  return key;
}

struct Node {
  std::array<SigVec, kSearchMaxWires> rows{};
  std::uint64_t remaining = 0;
  int g = 0;
  int parent = -1;
  std::int8_t move_control = -1;
  std::int8_t move_target = -1;
};

std::vector<std::pair<int, int>> directed_moves(const Topology& topo) {
  std::vector<std::pair<int, int>> moves;
  for (int c = 0; c < topo.n; ++c) {
    for (int t = 0; t < topo.n; ++t) {
      if (topo.allows(c, t)) moves.emplace_back(c, t);
    }
  }
  return moves;
}

}  // namespace

bool SkipSet::contains(SigVec v) const {
  return std::binary_search(sigs.begin(), sigs.end(), v);
}

SkipSet discover_skip_set(const AngleVector& theta, double epsilon) {
  if (epsilon < 0) throw std::invalid_argument("skip set: epsilon >= 0");
  SkipSet out;
  out.epsilon = epsilon;
  for (std::size_t v = 1; v < theta.theta.size(); ++v) {
    if (std::abs(theta.theta[v]) < epsilon) {
      out.sigs.push_back(static_cast<SigVec>(v));
    }
  }
  return out;
}

Circuit general_spa(const Topology& topology) {
  int n = topology.n;
  switch (topology.kind) {
    case TopologyKind::Full:
      return synth_spa_full(n);
    case TopologyKind::Linear:
      return synth_spa_linear(n, /*swap_opt=*/true);
    case TopologyKind::Circular: {
      if (n == 1) return Circuit(topology);
      auto params = find_circular_params(n);
      if (!params) {
        return with_topology(synth_spa_linear(n, /*swap_opt=*/true), topology);
      }
      if (params->primitive()) return synth_spa_circular(n);
      return synth_circular_nonprimitive(n).circuit;
    }
    case TopologyKind::Custom:
      throw unsupported_error("no general SPA construction for custom topology");
  }
  throw std::logic_error("general_spa: unreachable");
}

SkippingResult synth_skipping(const SkipSet& skip, const Topology& topology,
                              std::uint64_t node_budget) {
  int n = topology.n;
  Circuit general = general_spa(topology);
  SkippingResult res;
  res.general_cx = general.cx_count();
  if (skip.sigs.empty()) {
    res.circuit = std::move(general);
    return res;
  }

  std::uint64_t required = 0;
  for (std::uint64_t v = 1; v < (std::uint64_t(1) << n); ++v) {
    if (!skip.contains(static_cast<SigVec>(v))) required |= std::uint64_t(1) << v;
  }

  // Wide masks would be needed past 6 wires; the budget would be blown there
  // anyway, so go straight to the fallback.
  if (n > kSearchMaxWires) {
    res.circuit = std::move(general);
    return res;
  }

  std::vector<std::pair<int, int>> moves = directed_moves(topology);
  std::vector<Node> arena;
  arena.reserve(1024);
  Node root;
  for (int k = 0; k < n; ++k) root.rows[k] = SigVec(1) << k;
  root.remaining = required;
  for (int k = 0; k < n; ++k) {
    root.remaining &= ~(std::uint64_t(1) << (SigVec(1) << k));
  }
  arena.push_back(root);

  using QueueEntry = std::tuple<int, std::uint64_t, int>;  // f, seq, node
  std::priority_queue<QueueEntry, std::vector<QueueEntry>,
                      std::greater<QueueEntry>>
      open;
  std::unordered_map<StateKey, int, StateKeyHash> best_g;
  std::uint64_t seq = 0;
  open.emplace(std::popcount(root.remaining), seq++, 0);
  best_g[{pack_basis(root.rows, n), root.remaining}] = 0;

  std::uint64_t pops = 0;
  int goal = -1;
  while (!open.empty()) {
    auto [f, tie, idx] = open.top();
    open.pop();
    Node node = arena[idx];
    auto it = best_g.find({pack_basis(node.rows, n), node.remaining});
    if (it != best_g.end() && it->second < node.g) continue;
    if (node.remaining == 0) {
      goal = idx;
      break;
    }
    if (++pops > node_budget) break;
    for (const auto& [mc, mt] : moves) {
      Node child = node;
      child.rows[mt] ^= child.rows[mc];
      child.remaining &= ~(std::uint64_t(1) << child.rows[mt]);
      child.g = node.g + 1;
      child.parent = idx;
      child.move_control = static_cast<std::int8_t>(mc);
      child.move_target = static_cast<std::int8_t>(mt);
      int cf = child.g + std::popcount(child.remaining);
      // Anything no better than the fallback is not worth exploring.
      if (cf >= res.general_cx) continue;
      StateKey key{pack_basis(child.rows, n), child.remaining};
      auto found = best_g.find(key);
      if (found != best_g.end() && found->second <= child.g) continue;
      best_g[key] = child.g;
      arena.push_back(child);
      open.emplace(cf, seq++, static_cast<int>(arena.size()) - 1);
    }
  }

  if (goal < 0) {
    res.circuit = std::move(general);
    res.nodes = pops;
    return res;
  }
  std::vector<std::pair<int, int>> path;
  for (int idx = goal; arena[idx].parent >= 0; idx = arena[idx].parent) {
    path.emplace_back(arena[idx].move_control, arena[idx].move_target);
  }
  std::reverse(path.begin(), path.end());
  Circuit c(topology);
  for (const auto& [mc, mt] : path) c.add_cx(mc, mt);
  res.circuit = std::move(c);
  res.from_search = true;
  res.nodes = pops;
  return res;
}

PhaseTargets generate_symmetries(const std::vector<SigVec>& support,
                                 const std::vector<double>& alpha_on_support,
                                 int n) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("generate_symmetries: supports 1 <= n <= 8");
  }
  if (support.empty() || support.size() != alpha_on_support.size()) {
    throw std::invalid_argument("generate_symmetries: bad support");
  }
  std::size_t size = std::size_t(1) << n;
  std::vector<char> in_support(size, 0);
  for (SigVec b : support) {
    if (b == 0 || b >= size || in_support[b]) {
      throw std::invalid_argument("generate_symmetries: bad support state");
    }
    in_support[b] = 1;
  }

  std::vector<SigVec> free_states;
  for (std::size_t b = 1; b < size; ++b) {
    if (!in_support[b]) free_states.push_back(static_cast<SigVec>(b));
  }

  PhaseTargets out;
  out.n = n;
  out.alpha.assign(size, 0.0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    out.alpha[support[i]] = alpha_on_support[i];
  }
  if (free_states.empty()) return out;

  std::size_t unknowns = free_states.size();
  auto hrow = [&](SigVec v, std::size_t j) -> double {
    return f2_dot(v, free_states[j]) ? -1.0 : 1.0;
  };

  // Candidate zero-set signatures, heaviest first; keep the first rows that
  // stay linearly independent on the free columns.
  std::vector<SigVec> candidates;
  for (std::size_t v = 1; v < size; ++v) candidates.push_back(SigVec(v));
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](SigVec a, SigVec b) {
                     return std::popcount(a) > std::popcount(b);
                   });

  std::vector<std::vector<double>> echelon;
  std::vector<int> pivot_cols;
  std::vector<SigVec> zero_set;
  constexpr double tol = 1e-8;
  for (SigVec v : candidates) {
    if (zero_set.size() == unknowns) break;
    std::vector<double> r(unknowns);
    for (std::size_t j = 0; j < unknowns; ++j) r[j] = hrow(v, j);
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      double factor = r[pivot_cols[e]];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < unknowns; ++j) r[j] -= factor * echelon[e][j];
    }
    int pivot = -1;
    double best = tol;
    for (std::size_t j = 0; j < unknowns; ++j) {
      if (std::abs(r[j]) > best) {
        best = std::abs(r[j]);
        pivot = static_cast<int>(j);
      }
    }
    if (pivot < 0) continue;
    double scale = r[pivot];
    for (double& x : r) x /= scale;
    echelon.push_back(std::move(r));
    pivot_cols.push_back(pivot);
    zero_set.push_back(v);
  }
  if (zero_set.size() != unknowns) {
    throw std::runtime_error("generate_symmetries: zero-set candidates exhausted");
  }

  // Solve sum_{b free} (-1)^<v,b> alpha_b = -sum_{b in support} (-1)^<v,b>
  // alpha_b for every v in the zero set.
  std::vector<std::vector<double>> a(unknowns,
                                     std::vector<double>(unknowns + 1, 0.0));
  for (std::size_t i = 0; i < unknowns; ++i) {
    SigVec v = zero_set[i];
    for (std::size_t j = 0; j < unknowns; ++j) a[i][j] = hrow(v, j);
    double rhs = 0.0;
    for (SigVec b : support) {
      rhs -= (f2_dot(v, b) ? -1.0 : 1.0) * out.alpha[b];
    }
    a[i][unknowns] = rhs;
  }
  for (std::size_t col = 0; col < unknowns; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < unknowns; ++i) {
      if (std::abs(a[i][col]) > std::abs(a[pivot][col])) pivot = i;
    }
    if (std::abs(a[pivot][col]) < 1e-10) {
      throw std::runtime_error("generate_symmetries: singular zero-set system");
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t i = 0; i < unknowns; ++i) {
      if (i == col || a[i][col] == 0.0) continue;
      double factor = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= unknowns; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  for (std::size_t j = 0; j < unknowns; ++j) {
    out.alpha[free_states[j]] = a[j][unknowns] / a[j][j];
  }
  return out;
}

}  // namespace diagsynth
