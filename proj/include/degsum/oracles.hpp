#ifndef DEGSUM_ORACLES_HPP
#define DEGSUM_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degsum/errors.hpp"
#include "degsum/feasibility.hpp"
#include "degsum/graph.hpp"

// Brute-force ground truth. Everything here works from a plain adjacency
// matrix and bit masks, sharing no search code with the engines it checks.

namespace degsum {

namespace oracle_detail {

using Mask = std::uint32_t;

struct Matrix {
  int n = 0;
  std::vector<Mask> adj;  // adj[v] bit w set iff vw is an edge

  explicit Matrix(const Graph& g) : n(static_cast<int>(g.order())), adj(g.order(), 0) {
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (u != w && g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(w))) adj[u] |= Mask{1} << w;
  }

  bool edge(int u, int w) const { return (adj[u] >> w) & 1U; }
  int degree_in(int v, Mask within) const { return std::popcount(adj[v] & within); }
};

inline void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw UsageError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds cap " +
                     std::to_string(cap));
}

// Naive sigma2 of the subgraph induced by `within`; nullopt means complete.
inline std::optional<int> sigma2_in(const Matrix& m, Mask within) {
  std::optional<int> best;
  for (int u = 0; u < m.n; ++u) {
    if (!((within >> u) & 1U)) continue;
    for (int w = u + 1; w < m.n; ++w) {
      if (!((within >> w) & 1U) || m.edge(u, w)) continue;
      const int sum = m.degree_in(u, within) + m.degree_in(w, within);
      if (!best || sum < *best) best = sum;
    }
  }
  return best;
}

inline bool sigma2_at_least(const Matrix& m, Mask within, int bound) {
  const auto s = sigma2_in(m, within);
  return !s || *s >= bound;
}

inline VertexSet to_set(Mask mask) {
  VertexSet out;
  for (int v = 0; mask >> v; ++v)
    if ((mask >> v) & 1U) out.insert(static_cast<Vertex>(v));
  return out;
}

}  // namespace oracle_detail

/// The two open partition problems: 1.1 asks |Hi| >= si+1, 1.2 asks
/// |Hi| >= 2si; both ask sigma2(Hi) >= 2si-1 with (H1, H2) covering V(G).
enum class PartitionProblem { kProblem11, kProblem12 };

struct PartitionProbe {
  bool exists = false;
  std::optional<std::pair<VertexSet, VertexSet>> witness;
};

inline constexpr std::size_t kPartitionOracleCap = 16;
inline constexpr std::size_t kFeasibilityOracleCap = 20;
inline constexpr std::size_t kCycleOracleCap = 14;

/// Checks every 2-coloring of V(G).
inline PartitionProbe oracle_partition_exists(const Graph& g, int s1, int s2,
                                              PartitionProblem problem,
                                              std::size_t cap = kPartitionOracleCap) {
  using namespace oracle_detail;
  require_cap(g.order(), cap, "oracle_partition_exists");
  const Matrix m(g);
  const Mask all = m.n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << m.n) - 1);
  const int min1 = problem == PartitionProblem::kProblem11 ? s1 + 1 : 2 * s1;
  const int min2 = problem == PartitionProblem::kProblem11 ? s2 + 1 : 2 * s2;
  for (Mask first = 0;; ++first) {
    const Mask second = all & ~first;
    if (std::popcount(first) >= min1 && std::popcount(second) >= min2 &&
        sigma2_at_least(m, first, 2 * s1 - 1) && sigma2_at_least(m, second, 2 * s2 - 1))
      return {true, std::make_pair(to_set(first), to_set(second))};
    if (first == all) break;
  }
  return {};
}

/// Checks (F1)-(F3) directly on one mask.
inline bool oracle_is_feasible(const Graph& g, const VertexSet& clique, int level, const VertexSet& h) {
  using namespace oracle_detail;
  const Matrix m(g);
  Mask mask = 0;
  for (Vertex v : h) mask |= Mask{1} << v;
  Mask x = 0;
  for (Vertex v : clique) x |= Mask{1} << v;
  bool complete = true;
  for (int u = 0; u < m.n; ++u) {
    if (!((mask >> u) & 1U)) continue;
    for (int w = 0; w < m.n; ++w) {
      if (w == u || !((mask >> w) & 1U)) continue;
      if (!m.edge(u, w)) complete = false;
    }
  }
  if (complete) return false;
  for (int u = 0; u < m.n; ++u) {
    if (!((mask >> u) & 1U) || ((x >> u) & 1U)) continue;
    const int du = m.degree_in(u, mask);
    if (du <= level) return false;
    for (int w = 0; w < m.n; ++w) {
      if (!((mask >> w) & 1U) || !((x >> w) & 1U) || m.edge(u, w)) continue;
      if (du + m.degree_in(w, mask) <= 2 * level) return false;
    }
  }
  return true;
}

/// Every subset of `within`, smallest mask first.
inline DegeneracyVerdict oracle_feasible_enumerate(const FeasibilityContext& ctx,
                                                   const VertexSet& within,
                                                   std::size_t cap = kFeasibilityOracleCap) {
  using namespace oracle_detail;
  require_cap(within.size(), cap, "oracle_feasible_enumerate");
  const std::vector<Vertex> members = within.to_vector();
  const std::size_t k = members.size();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
    VertexSet h;
    for (std::size_t i = 0; i < k; ++i)
      if ((bits >> i) & 1U) h.insert(members[i]);
    if (oracle_is_feasible(ctx.graph(), ctx.clique(), ctx.level(), h))
      return {FeasibleWitness{h, ctx.level(), ctx.clique()}};
  }
  return {};
}

namespace oracle_detail {

// cyclic[S] is true iff G[S] has a Hamiltonian cycle of length |S| = 0 mod 3.
// Held-Karp over paths that start at the lowest vertex of S.
inline std::vector<bool> residue_zero_cycle_sets(const Matrix& m) {
  const std::size_t full = std::size_t{1} << m.n;
  std::vector<Mask> ends(full, 0);  // bit v: a Hamiltonian path of S from min(S) to v
  std::vector<bool> cyclic(full, false);
  for (int v = 0; v < m.n; ++v) ends[std::size_t{1} << v] = Mask{1} << v;
  for (std::size_t s = 1; s < full; ++s) {
    const Mask set = static_cast<Mask>(s);
    const int low = std::countr_zero(set);
    const Mask reach = ends[s];
    if (reach == 0) continue;
    const int size = std::popcount(set);
    if (size >= 3 && size % 3 == 0 && (reach & m.adj[low])) cyclic[s] = true;
    for (int v = 0; v < m.n; ++v) {
      if (!((reach >> v) & 1U)) continue;
      // Only extend with vertices above the start, keeping min(S) the start.
      Mask next = m.adj[v] & ~set;
      next &= ~((Mask{1} << low) - 1);
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        ends[s | (std::size_t{1} << w)] |= Mask{1} << w;
      }
    }
  }
  return cyclic;
}

}  // namespace oracle_detail

/// Maximum number of vertex-disjoint residue-0 cycles: Hamiltonian-cycle DP
/// over vertex subsets, then an exact packing DP over masks.
inline int oracle_max_disjoint_mod3(const Graph& g, std::size_t cap = kCycleOracleCap) {
  using namespace oracle_detail;
  require_cap(g.order(), cap, "oracle_max_disjoint_mod3");
  const Matrix m(g);
  if (m.n == 0) return 0;
  const std::vector<bool> cyclic = residue_zero_cycle_sets(m);
  const std::size_t full = std::size_t{1} << m.n;
  std::vector<int> best(full, 0);
  for (std::size_t s = 1; s < full; ++s) {
    const std::size_t low = s & (~s + 1);
    int value = best[s & ~low];
    // Subsets of s that contain its lowest vertex.
    const std::size_t rest = s & ~low;
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t part = sub | low;
      if (cyclic[part]) value = std::max(value, 1 + best[s & ~part]);
      if (sub == 0) break;
    }
    best[s] = value;
  }
  return best[full - 1];
}

inline bool oracle_has_mod3_cycle(const Graph& g, std::size_t cap = kCycleOracleCap) {
  using namespace oracle_detail;
  require_cap(g.order(), cap, "oracle_has_mod3_cycle");
  const Matrix m(g);
  for (bool c : residue_zero_cycle_sets(m))
    if (c) return true;
  return false;
}

/// Naive sigma2: minimum over every non-adjacent pair.
inline IntOrInf oracle_sigma2(const Graph& g) {
  std::optional<int> best;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w = u + 1; w < g.order(); ++w) {
      if (g.has_edge(u, w)) continue;
      const int sum = static_cast<int>(g.neighbors(u).size() + g.neighbors(w).size());
      if (!best || sum < *best) best = sum;
    }
  return best;
}

/// Clique number by trying every subset, largest first.
inline int oracle_clique_number(const Graph& g, std::size_t cap = kFeasibilityOracleCap) {
  using namespace oracle_detail;
  require_cap(g.order(), cap, "oracle_clique_number");
  const Matrix m(g);
  int best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m.n); ++s) {
    const Mask set = static_cast<Mask>(s);
    const int size = std::popcount(set);
    if (size <= best) continue;
    bool clique = true;
    for (int v = 0; v < m.n && clique; ++v)
      if (((set >> v) & 1U) && (m.adj[v] & set) != (set & ~(Mask{1} << v))) clique = false;
    if (clique) best = size;
  }
  return best;
}

}  // namespace degsum

#endif  // DEGSUM_ORACLES_HPP
