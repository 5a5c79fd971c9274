#include "diagsynth/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <thread>
#include <unordered_map>

namespace diagsynth {

namespace {

constexpr int kSearchMaxWires = 6;
constexpr std::size_t kTableCap = std::size_t(1) << 25;

struct StateKey {
  std::uint64_t basis = 0;
  std::uint64_t visited = 0;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = k.basis * 0x9e3779b97f4a7c15ull;
    h ^= k.visited + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct Searcher {
  Searcher(Variant variant_, int n_, std::uint64_t full_visited_,
           const std::vector<std::pair<int, int>>& moves_)
      : variant(variant_), n(n_), full_visited(full_visited_), moves(moves_) {}

  Variant variant;
  int n;
  std::uint64_t full_visited;
  std::vector<std::pair<int, int>> moves;
  std::uint64_t nodes = 0;
  int next_threshold = std::numeric_limits<int>::max();
  std::vector<std::pair<int, int>> path;
  std::vector<std::pair<int, int>> solution;
  bool found = false;
  std::unordered_map<StateKey, int, StateKeyHash> table;

  std::uint64_t pack(const std::array<SigVec, kSearchMaxWires>& rows) const {
    std::uint64_t key = 0;
    for (int k = 0; k < n; ++k) key |= std::uint64_t(rows[k]) << (k * n);
    return key;
  }

  bool basis_is_identity(const std::array<SigVec, kSearchMaxWires>& rows) const {
    for (int k = 0; k < n; ++k) {
      if (rows[k] != (SigVec(1) << k)) return false;
    }
    return true;
  }

  bool basis_is_permutation(const std::array<SigVec, kSearchMaxWires>& rows) const {
    for (int k = 0; k < n; ++k) {
      if (std::popcount(rows[k]) != 1) return false;
    }
    return true;
  }

  int heuristic(const std::array<SigVec, kSearchMaxWires>& rows,
                std::uint64_t visited) const {
    int h = std::popcount(full_visited & ~visited);
    if (variant == Variant::NPA && !basis_is_identity(rows)) h += 1;
    return h;
  }

  bool is_goal(const std::array<SigVec, kSearchMaxWires>& rows,
               std::uint64_t visited) const {
    if ((full_visited & ~visited) != 0) return false;
    switch (variant) {
      case Variant::SPA: return true;
      case Variant::WPA: return basis_is_permutation(rows);
      case Variant::NPA: return basis_is_identity(rows);
    }
    return false;
  }

  bool dfs(std::array<SigVec, kSearchMaxWires>& rows, std::uint64_t visited,
           int g, int threshold) {
    int f = g + heuristic(rows, visited);
    if (f > threshold) {
      next_threshold = std::min(next_threshold, f);
      return false;
    }
    if (is_goal(rows, visited)) {
      solution = path;
      found = true;
      return true;
    }
    ++nodes;
    StateKey key{pack(rows), visited};
    auto it = table.find(key);
    if (it != table.end() && it->second <= g) return false;
    if (it != table.end()) {
      it->second = g;
    } else if (table.size() < kTableCap) {
      table.emplace(key, g);
    }
    for (const auto& [c, t] : moves) {
      rows[t] ^= rows[c];
      std::uint64_t child_visited = visited | (std::uint64_t(1) << rows[t]);
      path.emplace_back(c, t);
      bool done = dfs(rows, child_visited, g + 1, threshold);
      path.pop_back();
      rows[t] ^= rows[c];
      if (done) return true;
    }
    return false;
  }
};

// Wire relabelings preserving the topology; applying one to a solution
// yields another solution of the same length, so the root branching can be
// restricted to orbit representatives of the first gate.
std::vector<std::vector<int>> topology_automorphisms(const Topology& topo) {
  int n = topo.n;
  std::vector<std::vector<int>> maps;
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;
  switch (topo.kind) {
    case TopologyKind::Full: {
      // All n! relabelings; every directed pair lands in one orbit, so the
      // root collapses to CX(0, 1).
      std::vector<int> perm = ident;
      std::sort(perm.begin(), perm.end());
      do {
        maps.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()) &&
               maps.size() < 5040);
      break;
    }
    case TopologyKind::Linear: {
      maps.push_back(ident);
      std::vector<int> rev(n);
      for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
      maps.push_back(rev);
      break;
    }
    case TopologyKind::Circular: {
      for (int r = 0; r < n; ++r) {
        std::vector<int> rot(n), refl(n);
        for (int i = 0; i < n; ++i) {
          rot[i] = (i + r) % n;
          refl[i] = ((r - i) % n + n) % n;
        }
        maps.push_back(rot);
        maps.push_back(refl);
      }
      break;
    }
    case TopologyKind::Custom:
      maps.push_back(ident);
      break;
  }
  return maps;
}

std::vector<std::pair<int, int>> root_moves(
    const Topology& topo, const std::vector<std::pair<int, int>>& moves) {
  std::vector<std::vector<int>> autos = topology_automorphisms(topo);
  std::vector<std::pair<int, int>> reps;
  for (const auto& mv : moves) {
    std::pair<int, int> lo = mv;
    for (const auto& pi : autos) {
      lo = std::min(lo, std::make_pair(pi[mv.first], pi[mv.second]));
    }
    if (lo == mv) reps.push_back(mv);
  }
  return reps;
}

}  // namespace

ExactMinResult exact_min(Variant variant, const Topology& topology,
                         int depth_budget, int jobs) {
  int n = topology.n;
  if (n < 1) throw std::invalid_argument("exact_min: n >= 1");
  if (n > kSearchMaxWires) {
    throw unsupported_error(
        "exact_min: supported up to n = 6 (states are packed into 64-bit "
        "words; larger instances are far beyond exact-search scale)");
  }
  std::uint64_t full_visited =
      (n == kSearchMaxWires) ? ~std::uint64_t(1)
                             : (std::uint64_t(1) << (std::uint64_t(1) << n)) - 2;

  std::vector<std::pair<int, int>> moves;
  for (int c = 0; c < n; ++c) {
    for (int t = 0; t < n; ++t) {
      if (topology.allows(c, t)) moves.emplace_back(c, t);
    }
  }

  std::array<SigVec, kSearchMaxWires> root_rows{};
  std::uint64_t root_visited = 0;
  for (int k = 0; k < n; ++k) {
    root_rows[k] = SigVec(1) << k;
    root_visited |= std::uint64_t(1) << root_rows[k];
  }

  ExactMinResult result;
  {
    Searcher probe(variant, n, full_visited, moves);
    if (probe.is_goal(root_rows, root_visited)) {
      result.length = 0;
      result.witness = Circuit(topology);
      return result;
    }
    result.nodes = 0;
    int threshold = probe.heuristic(root_rows, root_visited);

    std::vector<std::pair<int, int>> reps = root_moves(topology, moves);
    if (reps.empty()) {
      result.budget_exceeded = true;  // no moves at all (n = 1 handled above)
      return result;
    }

    while (threshold <= depth_budget) {
      // Lockstep over root branches at this threshold; the lowest branch
      // index with a solution gives the canonical witness.
      std::vector<Searcher> branch;
      branch.reserve(reps.size());
      for (std::size_t i = 0; i < reps.size(); ++i) {
        branch.emplace_back(variant, n, full_visited, moves);
      }
      auto run_branch = [&](std::size_t i) {
        Searcher& s = branch[i];
        auto rows = root_rows;
        const auto& [c, t] = reps[i];
        rows[t] ^= rows[c];
        std::uint64_t visited =
            root_visited | (std::uint64_t(1) << rows[t]);
        s.path.emplace_back(c, t);
        s.dfs(rows, visited, 1, threshold);
      };
      int workers = std::max(1, std::min<int>(jobs, int(reps.size())));
      if (workers <= 1) {
        bool stop = false;
        for (std::size_t i = 0; i < reps.size() && !stop; ++i) {
          run_branch(i);
          stop = branch[i].found;
        }
      } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
          pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < reps.size(); i += workers) run_branch(i);
          });
        }
        for (auto& th : pool) th.join();
      }

      int next_threshold = std::numeric_limits<int>::max();
      for (std::size_t i = 0; i < branch.size(); ++i) {
        result.nodes += branch[i].nodes;
        next_threshold = std::min(next_threshold, branch[i].next_threshold);
        if (branch[i].found && !result.witness) {
          Circuit c(topology);
          for (const auto& [mc, mt] : branch[i].solution) c.add_cx(mc, mt);
          result.length = static_cast<int>(branch[i].solution.size());
          result.witness = std::move(c);
        }
      }
      if (result.witness) return result;
      if (next_threshold == std::numeric_limits<int>::max()) {
        result.budget_exceeded = true;  // search space exhausted (disconnected)
        return result;
      }
      threshold = next_threshold;
    }
    result.budget_exceeded = true;
  }
  return result;
}

std::int64_t verify_lower_bound(Variant variant, TopologyKind kind, int n) {
  std::int64_t spa_bound = (std::int64_t(1) << n) - n - 1;
  if (variant != Variant::SPA && kind == TopologyKind::Full) {
    return std::max(spa_bound, (std::int64_t(1) << n) - 2);
  }
  return std::max<std::int64_t>(spa_bound, 0);
}

}  // namespace diagsynth
