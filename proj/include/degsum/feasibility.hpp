#ifndef DEGSUM_FEASIBILITY_HPP
#define DEGSUM_FEASIBILITY_HPP

#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "degsum/errors.hpp"
#include "degsum/graph.hpp"
#include "degsum/partition.hpp"

namespace degsum {

/// Host graph G, a clique X of G and a level s. An induced subgraph H is
/// (s;X)-feasible when
///   - every u in H \ X has d_H(u) > s,
///   - every non-adjacent u in H \ X, v in H & X has d_H(u) + d_H(v) > 2s,
///   - H is not complete.
/// A non-complete subgraph with no feasible induced subgraph is (s;X)-degenerate.
class FeasibilityContext {
 public:
  FeasibilityContext(const Graph& g, const VertexSet& clique, int level)
      : graph_(&g), clique_(clique), level_(level) {
    if (!is_clique(g, clique)) throw UsageError("feasibility context: X is not a clique");
  }

  const Graph& graph() const { return *graph_; }
  const VertexSet& clique() const { return clique_; }
  int level() const { return level_; }

  FeasibilityContext at_level(int level) const {
    FeasibilityContext ctx = *this;
    ctx.level_ = level;
    return ctx;
  }

 private:
  const Graph* graph_;
  VertexSet clique_;
  int level_;
};

struct FeasibleWitness {
  VertexSet vertices;
  int level = 0;
  VertexSet clique;
};

/// Either "degenerate" (no witness) or a feasible witness.
struct DegeneracyVerdict {
  std::optional<FeasibleWitness> witness;

  bool degenerate() const { return !witness.has_value(); }
};

enum class DegeneracyReason {
  kDegenerate,       // non-complete, no feasible induced subgraph
  kComplete,         // fails non-completeness; says nothing about witnesses
  kContainsWitness,  // non-complete, witness attached
};

struct DegeneracyCheck {
  DegeneracyReason reason = DegeneracyReason::kDegenerate;
  std::optional<FeasibleWitness> witness;

  bool degenerate() const { return reason == DegeneracyReason::kDegenerate; }
};

inline const char* to_string(DegeneracyReason r) {
  switch (r) {
    case DegeneracyReason::kDegenerate: return "degenerate";
    case DegeneracyReason::kComplete: return "complete";
    case DegeneracyReason::kContainsWitness: return "contains-witness";
  }
  return "?";
}

namespace detail {

struct PairViolation {
  Vertex outside;  // in H \ X
  Vertex inside;   // in H & X
};

// Non-adjacent (u, v) with u off X, v on X and d(u) + d(v) <= 2s. With
// `cheapest`, minimizes the sum; otherwise the lexicographically first pair.
inline std::optional<PairViolation> find_pair_violation(const FeasibilityContext& ctx,
                                                        const VertexSet& h, bool cheapest) {
  const Graph& g = ctx.graph();
  const VertexSet on_x = h & ctx.clique();
  const VertexSet off_x = h - ctx.clique();
  std::optional<PairViolation> best;
  int best_sum = std::numeric_limits<int>::max();
  for (Vertex u : off_x) {
    const int du = g.degree_in(u, h);
    for (Vertex v : on_x - g.neighbors(u)) {
      const int sum = du + g.degree_in(v, h);
      if (sum > 2 * ctx.level()) continue;
      if (!cheapest) return PairViolation{u, v};
      if (sum < best_sum) {
        best_sum = sum;
        best = PairViolation{u, v};
      }
    }
  }
  return best;
}

inline std::optional<Vertex> find_low_vertex(const FeasibilityContext& ctx, const VertexSet& h) {
  for (Vertex u : h - ctx.clique())
    if (ctx.graph().degree_in(u, h) <= ctx.level()) return u;
  return std::nullopt;
}

// Remove off-X vertices of degree <= s until none remain. Such a vertex lies in
// no witness inside the current set, since degrees only drop in subsets.
inline VertexSet peel(const FeasibilityContext& ctx, VertexSet w) {
  const Graph& g = ctx.graph();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u : w - ctx.clique()) {
      if (g.degree_in(u, w) <= ctx.level()) {
        w.erase(u);
        changed = true;
      }
    }
  }
  return w;
}

class FeasibleSearch {
 public:
  explicit FeasibleSearch(const FeasibilityContext& ctx) : ctx_(ctx) {}

  std::optional<VertexSet> run(const VertexSet& within) { return search(within); }

 private:
  std::optional<VertexSet> search(VertexSet w) {
    w = peel(ctx_, w);
    if (w.size() < 2) return std::nullopt;
    if (failed_.contains(w)) return std::nullopt;
    std::optional<VertexSet> found;
    if (auto pair = find_pair_violation(ctx_, w, /*cheapest=*/true)) {
      // Any witness inside w omits one side of the violating pair.
      found = search(w.without(pair->inside));
      if (!found) found = search(w.without(pair->outside));
    } else if (!is_clique(ctx_.graph(), w)) {
      found = w;
    }
    if (!found) failed_.insert(w);
    return found;
  }

  const FeasibilityContext& ctx_;
  std::unordered_set<VertexSet> failed_;
};

}  // namespace detail

inline bool check_feasible(const FeasibilityContext& ctx, const VertexSet& h) {
  const Graph& g = ctx.graph();
  check_within(g, h);
  if (is_clique(g, h)) return false;
  if (detail::find_low_vertex(ctx, h)) return false;
  return !detail::find_pair_violation(ctx, h, /*cheapest=*/false).has_value();
}

inline bool check_feasible(const FeasibleWitness& w, const Graph& g) {
  return check_feasible(FeasibilityContext(g, w.clique, w.level), w.vertices);
}

/// Exact decision by branch and reduce: peel low-degree vertices off X, then
/// branch on a violating boundary pair; a violation-free non-complete set is a
/// witness. Returns the first witness found (not necessarily minimal).
inline DegeneracyVerdict find_feasible_subgraph(const FeasibilityContext& ctx,
                                                const VertexSet& within) {
  check_within(ctx.graph(), within);
  detail::FeasibleSearch search(ctx);
  if (auto w = search.run(within)) return {FeasibleWitness{*w, ctx.level(), ctx.clique()}};
  return {};
}

inline DegeneracyCheck is_degenerate(const FeasibilityContext& ctx, const VertexSet& gset) {
  if (is_clique(ctx.graph(), gset)) return {DegeneracyReason::kComplete, std::nullopt};
  DegeneracyVerdict verdict = find_feasible_subgraph(ctx, gset);
  if (verdict.degenerate()) return {DegeneracyReason::kDegenerate, std::nullopt};
  return {DegeneracyReason::kContainsWitness, std::move(verdict.witness)};
}

/// Removing one vertex from an (s;X)-feasible witness leaves an
/// (s-1;X)-feasible one, provided omega(G) <= s. The caller vouches for the
/// clique bound; the result is checked.
inline FeasibleWitness shrink_feasible(const FeasibilityContext& ctx, const FeasibleWitness& h,
                                       Vertex x) {
  if (!h.vertices.contains(x)) throw UsageError("shrink_feasible: vertex not in witness");
  if (!check_feasible(ctx.at_level(h.level), h.vertices))
    throw UsageError("shrink_feasible: input is not (" + std::to_string(h.level) +
                     ";X)-feasible");
  FeasibleWitness out{h.vertices.without(x), h.level - 1, ctx.clique()};
  if (!check_feasible(ctx.at_level(out.level), out.vertices))
    throw InvariantViolation("shrink_feasible: H - x is not (" + std::to_string(out.level) +
                             ";X)-feasible; is omega(G) <= " + std::to_string(h.level) + "?");
  return out;
}

/// Memoized degeneracy verdicts for one fixed (G, X), keyed by (set, level).
class DegeneracyCache {
 public:
  DegeneracyCache(const Graph& g, const VertexSet& clique) : ctx_(g, clique, 0) {}

  const FeasibilityContext& context() const { return ctx_; }

  const DegeneracyCheck& check(const VertexSet& set, int level) {
    Key key{set, level};
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, is_degenerate(ctx_.at_level(level), set)).first;
    return it->second;
  }

  bool degenerate(const VertexSet& set, int level) { return check(set, level).degenerate(); }

  std::size_t size() const { return cache_.size(); }

 private:
  struct Key {
    VertexSet set;
    int level;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.set.hash() ^ (static_cast<std::size_t>(k.level) * 0x9e3779b97f4a7c15ULL);
    }
  };

  FeasibilityContext ctx_;
  std::unordered_map<Key, DegeneracyCheck, KeyHash> cache_;
};

enum class MoveCase { kA, kB };

/// A vertex u on side i whose transfer raises f, plus the certifying vertex v
/// (v == u in case A; in case B, v is a low-degree vertex of X on side i).
struct MovableVertex {
  Vertex u;
  Vertex v;
  MoveCase which;
};

/// Given sigma2(G) >= 2(s1+s2+eps)-1, X = V_{<=s1+s2+eps-1}(G) and side i
/// (s_i-1+eps;X)-degenerate, returns u with
///   e(u, other side) - d_{G_i}(u) >= (s_{3-i} - s_i) + 1.
/// Follows the constructive argument: a low-degree vertex off X first, then a
/// violating boundary pair. Lowest indices win ties.
inline MovableVertex find_movable_vertex(const PartitionState& part, Side i, int epsilon,
                                         const VertexSet& clique) {
  if (epsilon != 0 && epsilon != 1) throw UsageError("find_movable_vertex: epsilon must be 0 or 1");
  const Graph& g = part.graph();
  const int si = part.s(i);
  const int sj = part.s(other(i));
  const int level = si - 1 + epsilon;
  const int need = sj - si + 1;
  const VertexSet& own = part.side(i);

  auto certify = [&](Vertex u, Vertex v, MoveCase which) {
    if (part.surplus(u) < need)
      throw InvariantViolation("find_movable_vertex: vertex " + std::to_string(u) +
                               " has surplus " + std::to_string(part.surplus(u)) + " < " +
                               std::to_string(need));
    return MovableVertex{u, v, which};
  };

  for (Vertex u : own - clique)
    if (part.inside_degree(u) <= level) return certify(u, u, MoveCase::kA);

  const FeasibilityContext ctx(g, clique, level);
  const auto pair = detail::find_pair_violation(ctx, own, /*cheapest=*/false);
  if (!pair || is_clique(g, own))
    throw UsageError("find_movable_vertex: side " + std::to_string(index(i) + 1) + " is not (" +
                     std::to_string(level) + ";X)-degenerate");

  const Vertex u = pair->outside;
  const Vertex v = pair->inside;
  const int slack = si + epsilon - part.inside_degree(v);  // l >= 2
  if (slack < 2)
    throw InvariantViolation("find_movable_vertex: boundary vertex has inside degree " +
                             std::to_string(part.inside_degree(v)));
  if (part.cross_degree(v) >= sj - slack + epsilon + 1) return certify(v, v, MoveCase::kA);
  if (g.degree(v) > si + sj - 2)
    throw InvariantViolation("find_movable_vertex: case (b) vertex " + std::to_string(v) +
                             " has degree " + std::to_string(g.degree(v)));
  return certify(u, v, MoveCase::kB);
}

}  // namespace degsum

#endif  // DEGSUM_FEASIBILITY_HPP
