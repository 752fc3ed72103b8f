#ifndef DEGSUM_DECOMPOSE_HPP
#define DEGSUM_DECOMPOSE_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "degsum/errors.hpp"
#include "degsum/feasibility.hpp"
#include "degsum/graph.hpp"
#include "degsum/partition.hpp"

namespace degsum {

enum class DecompositionMode { kGeneral, kTriangleFree };

inline const char* to_string(DecompositionMode m) {
  return m == DecompositionMode::kGeneral ? "general" : "triangle_free";
}

/// Which conclusion to verify for a pair (H1, H2).
///   kSigma2             sigma2(Hi) >= 2si-1 and |Hi| >= si+1
///   kSigma2TriangleFree sigma2(Hi) >= 2si-1 and |Hi| >= 2si
///   kStrong             degree / pair-sum bounds off X = V_{<=s1+s2}(G), |Hi| >= si+1
///   kStrongTriangleFree same with X = V_{<=s1+s2-1}(G), |Hi| >= 2si
enum class Guarantee { kSigma2, kSigma2TriangleFree, kStrong, kStrongTriangleFree };

inline const char* to_string(Guarantee g) {
  switch (g) {
    case Guarantee::kSigma2: return "sigma2";
    case Guarantee::kSigma2TriangleFree: return "sigma2-tf";
    case Guarantee::kStrong: return "strong";
    case Guarantee::kStrongTriangleFree: return "strong-tf";
  }
  return "?";
}

/// Accepts the names above and the numeric selectors 1.3 / 1.4 / 1.5 / 1.6.
inline Guarantee parse_guarantee(const std::string& name) {
  if (name == "sigma2" || name == "1.3") return Guarantee::kSigma2;
  if (name == "sigma2-tf" || name == "1.4") return Guarantee::kSigma2TriangleFree;
  if (name == "strong" || name == "1.5") return Guarantee::kStrong;
  if (name == "strong-tf" || name == "1.6") return Guarantee::kStrongTriangleFree;
  throw UsageError("unknown conclusion selector '" + name + "'");
}

struct ConditionCheck {
  std::string name;
  bool passed = false;
};

struct ConclusionReport {
  Guarantee guarantee = Guarantee::kSigma2;
  std::vector<ConditionCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.name);
    return out;
  }
};

struct DecompositionResult {
  VertexSet h1;
  VertexSet h2;
  DecompositionMode mode = DecompositionMode::kGeneral;
  int s1 = 0;
  int s2 = 0;
  /// "clique", "low-degree" or "partition": which exit produced the pair.
  std::string route;
  std::vector<ConditionCheck> checks;
  /// The final partition (G1*, G2*) when route == "partition".
  std::optional<std::pair<VertexSet, VertexSet>> partition;
  int iterations = 0;
};

/// Recomputes every condition from definitions; trusts nothing from the engine.
inline ConclusionReport verify_conclusion(const Graph& g, const VertexSet& h1, const VertexSet& h2,
                                          int s1, int s2, Guarantee which) {
  ConclusionReport report{which, {}};
  const bool within = h1.is_subset_of(g.vertices()) && h2.is_subset_of(g.vertices());
  report.checks.push_back({"within", within});
  report.checks.push_back({"disjoint", !h1.intersects(h2)});
  if (!within) return report;

  const bool triangle_free =
      which == Guarantee::kSigma2TriangleFree || which == Guarantee::kStrongTriangleFree;
  const bool strong = which == Guarantee::kStrong || which == Guarantee::kStrongTriangleFree;
  const VertexSet low = low_degree_set(g, triangle_free ? s1 + s2 - 1 : s1 + s2);

  const VertexSet sides[2] = {h1, h2};
  const int targets[2] = {s1, s2};
  for (int i = 0; i < 2; ++i) {
    const VertexSet& h = sides[i];
    const int s = targets[i];
    const std::string prefix = "h" + std::to_string(i + 1) + ".";
    if (strong) {
      bool degree_ok = true;
      bool pair_ok = true;
      for (Vertex u : h - low) {
        const int du = g.degree_in(u, h);
        if (du < s) degree_ok = false;
        for (Vertex v : (h & low) - g.neighbors(u))
          if (du + g.degree_in(v, h) < 2 * s - 1) pair_ok = false;
      }
      report.checks.push_back({prefix + "degree", degree_ok});
      report.checks.push_back({prefix + "pair-sum", pair_ok});
    } else {
      report.checks.push_back({prefix + "sigma2", at_least(sigma2(induced(g, h).graph), 2 * s - 1)});
    }
    const std::size_t min_order = static_cast<std::size_t>(triangle_free ? 2 * s : s + 1);
    report.checks.push_back({prefix + "order", h.size() >= min_order});
  }
  return report;
}

inline ConclusionReport verify_conclusion(const Graph& g, const DecompositionResult& r,
                                          Guarantee which) {
  return verify_conclusion(g, r.h1, r.h2, r.s1, r.s2, which);
}

/// Shrinks `start` by repeatedly replacing it with (witness - lowest vertex)
/// until it is (s;X)-degenerate, s = ctx.level(). Each step keeps the set
/// non-complete and not (s-1;X)-degenerate when omega(G) <= s.
inline VertexSet minimal_nondegenerate(const FeasibilityContext& ctx, const VertexSet& start) {
  const Graph& g = ctx.graph();
  if (is_clique(g, start)) throw UsageError("minimal_nondegenerate: start set is complete");
  VertexSet current = start;
  for (std::size_t step = 0; step <= g.order(); ++step) {
    DegeneracyVerdict verdict = find_feasible_subgraph(ctx, current);
    if (verdict.degenerate()) return current;
    const VertexSet& h = verdict.witness->vertices;
    current = h.without(h.first());
    if (!check_feasible(ctx.at_level(ctx.level() - 1), current))
      throw InvariantViolation("minimal_nondegenerate: witness minus a vertex is not (" +
                               std::to_string(ctx.level() - 1) + ";X)-feasible");
  }
  throw InvariantViolation("minimal_nondegenerate: exceeded " + std::to_string(g.order()) +
                           " shrink steps");
}

/// When omega(G) > min(s1, s2): a clique of order min(s1,s2)+1 on the side with
/// the smaller target, the rest of G on the other side.
inline std::optional<DecompositionResult> handle_large_clique(const Graph& g, int s1, int s2) {
  const int smaller = std::min(s1, s2);
  const VertexSet clique = maximum_clique(g);
  if (static_cast<int>(clique.size()) <= smaller) return std::nullopt;
  VertexSet chosen;
  for (Vertex v : clique) {
    if (static_cast<int>(chosen.size()) == smaller + 1) break;
    chosen.insert(v);
  }
  DecompositionResult r;
  r.mode = DecompositionMode::kGeneral;
  r.s1 = s1;
  r.s2 = s2;
  r.route = "clique";
  if (s1 <= s2) {
    r.h1 = chosen;
    r.h2 = g.vertices() - chosen;
  } else {
    r.h2 = chosen;
    r.h1 = g.vertices() - chosen;
  }
  return r;
}

namespace detail {

inline std::string describe(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

inline std::string dump(const PartitionState& p, Side full) {
  std::ostringstream out;
  out << " [G1=" << describe(p.side(Side::kFirst)) << " G2=" << describe(p.side(Side::kSecond))
      << " f=" << p.potential() << " full-level side=" << index(full) + 1 << "]";
  return out.str();
}

inline void fault(const std::string& what, const PartitionState& p, Side full) {
  throw InvariantViolation(what + dump(p, full));
}

inline std::string sigma2_message(const IntOrInf& sigma, int need, const char* formula) {
  return "σ₂ = " + to_string(sigma) + " < " + std::to_string(need) + " (required σ₂ ≥ " +
         formula + ")";
}

inline void check_targets(int s1, int s2) {
  if (s1 < 2 || s2 < 2)
    throw UsageError("targets must satisfy s1, s2 >= 2 (got " + std::to_string(s1) + ", " +
                     std::to_string(s2) + ")");
}

// Shared by both engines. A state is an ordered partition plus the side
// `full` that is (s_full;X)-degenerate; the other side is (s_other-1;X)-degenerate.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, int s1, int s2, const VertexSet& clique)
      : g_(g), s_{s1, s2}, clique_(clique), cache_(g, clique) {}

  DegeneracyCache& cache() { return cache_; }

  // Non-complete and not (s-1;X)-degenerate.
  bool nondegenerate(const VertexSet& side, int level) {
    return cache_.check(side, level).reason == DegeneracyReason::kContainsWitness;
  }

  // Starting partition: G1 minimal with respect to the shrink loop, G2 = G - G1.
  // Returns the state, or a finished pair if G2 already qualifies.
  PartitionState initial(Side& full, std::optional<std::pair<VertexSet, VertexSet>>& done) {
    const FeasibilityContext ctx(g_, clique_, s_[0]);
    const VertexSet g1 = minimal_nondegenerate(ctx, g_.vertices());
    PartitionState state(g_, g1, s_[0], s_[1]);
    full = Side::kFirst;
    if (is_clique(g_, state.side(Side::kSecond)))
      fault("complement of a degenerate side is complete", state, full);
    if (nondegenerate(state.side(Side::kSecond), s_[1] - 1)) done = finish(state, full);
    return state;
  }

  // The witnesses certifying each side is not (s_i-1;X)-degenerate.
  std::pair<VertexSet, VertexSet> finish(const PartitionState& p, Side full) {
    VertexSet out[2];
    for (Side i : {Side::kFirst, Side::kSecond}) {
      const DegeneracyCheck& c = cache_.check(p.side(i), p.s(i) - 1);
      if (c.reason != DegeneracyReason::kContainsWitness)
        fault("final side " + std::to_string(index(i) + 1) + " has no witness", p, full);
      out[index(i)] = c.witness->vertices;
    }
    return {out[0], out[1]};
  }

  void require_degenerate(const VertexSet& side, int level, const std::string& why,
                          const PartitionState& p, Side full) {
    if (!cache_.degenerate(side, level)) fault(why, p, full);
  }

 private:
  const Graph& g_;
  int s_[2];
  VertexSet clique_;
  DegeneracyCache cache_;
};

inline DecompositionResult finalize(const Graph& g, DecompositionResult r) {
  const bool tf = r.mode == DecompositionMode::kTriangleFree;
  const ConclusionReport strong =
      verify_conclusion(g, r, tf ? Guarantee::kStrongTriangleFree : Guarantee::kStrong);
  const ConclusionReport weak =
      verify_conclusion(g, r, tf ? Guarantee::kSigma2TriangleFree : Guarantee::kSigma2);
  r.checks = strong.checks;
  for (const auto& c : weak.checks) {
    const bool seen = std::any_of(r.checks.begin(), r.checks.end(),
                                  [&](const auto& have) { return have.name == c.name; });
    if (!seen) r.checks.push_back(c);
  }
  for (const auto& c : r.checks)
    if (!c.passed)
      throw InvariantViolation("decomposition result fails '" + c.name + "': H1=" +
                               describe(r.h1) + " H2=" + describe(r.h2));
  return r;
}

}  // namespace detail

/// Two disjoint induced subgraphs H1, H2 of a graph with
/// sigma2(G) >= 2(s1+s2+1)-1 such that, with X = V_{<=s1+s2}(G),
///   d_Hi(u) >= si off X, d_Hi(u) + d_Hi(v) >= 2si-1 across non-adjacent
///   boundary pairs, and |Hi| >= si+1 (hence sigma2(Hi) >= 2si-1).
///
/// Complete graphs of order >= s1+s2+2 are accepted and answered by the clique
/// split. Otherwise the search hill-climbs f over degenerate partitions.
inline DecompositionResult decompose_general(const Graph& g, int s1, int s2) {
  detail::check_targets(s1, s2);
  const int need = 2 * (s1 + s2 + 1) - 1;
  const IntOrInf sigma = sigma2(g);
  if (is_complete(g)) {
    if (static_cast<int>(g.order()) < s1 + s2 + 2)
      throw PreconditionError("complete graph of order " + std::to_string(g.order()) + " < " +
                              std::to_string(s1 + s2 + 2) + " = s1+s2+2");
  } else if (!at_least(sigma, need)) {
    throw PreconditionError(detail::sigma2_message(sigma, need, "2(s1+s2+1)-1"));
  }

  if (auto r = handle_large_clique(g, s1, s2)) return detail::finalize(g, std::move(*r));

  const VertexSet clique = low_degree_set(g, s1 + s2);
  detail::PartitionSearch search(g, s1, s2, clique);
  DecompositionResult result;
  result.mode = DecompositionMode::kGeneral;
  result.s1 = s1;
  result.s2 = s2;
  result.route = "partition";

  Side full = Side::kFirst;
  std::optional<std::pair<VertexSet, VertexSet>> done;
  PartitionState state = search.initial(full, done);

  const long long ceiling = static_cast<long long>(g.edge_count()) +
                            static_cast<long long>(std::max(s1, s2)) *
                                static_cast<long long>(g.order());
  const long long budget = ceiling - state.potential() + 1;
  for (long long iter = 0; !done; ++iter) {
    if (iter > budget) detail::fault("potential loop exceeded its bound", state, full);
    const Side p = full;
    const Side q = other(p);
    const MovableVertex mv = find_movable_vertex(state, p, /*epsilon=*/1, clique);
    PartitionState next = state.moved(p, mv.u);
    if (next.potential() <= state.potential())
      detail::fault("move did not raise the potential", state, full);
    if (is_clique(g, next.side(p)))
      detail::fault("complement of a degenerate side is complete", next, full);
    result.iterations = static_cast<int>(iter + 1);

    if (search.cache().degenerate(next.side(q), next.s(q) - 1)) {
      state = std::move(next);
      continue;
    }
    search.require_degenerate(next.side(q), next.s(q),
                              "enlarged side is not degenerate one level up", next, full);
    if (search.cache().degenerate(next.side(p), next.s(p) - 1)) {
      state = std::move(next);
      full = q;
      continue;
    }
    done = search.finish(next, full);
    state = std::move(next);
  }

  result.h1 = done->first;
  result.h2 = done->second;
  result.partition = std::make_pair(state.side(Side::kFirst), state.side(Side::kSecond));
  return detail::finalize(g, std::move(result));
}

/// Two disjoint induced subgraphs of a triangle-free graph of order >= 3 with
/// sigma2(G) >= 2(s1+s2)-1 satisfying the degree bounds off
/// X = V_{<=s1+s2-1}(G) and |Hi| >= 2si (hence sigma2(Hi) >= 2si-1).
inline DecompositionResult decompose_triangle_free(const Graph& g, int s1, int s2) {
  detail::check_targets(s1, s2);
  if (g.order() < 3)
    throw PreconditionError("graph order " + std::to_string(g.order()) + " < 3");
  if (auto t = find_triangle(g))
    throw UsageError("graph has a triangle (" + std::to_string((*t)[0]) + ", " +
                     std::to_string((*t)[1]) + ", " + std::to_string((*t)[2]) + ")");
  const int need = 2 * (s1 + s2) - 1;
  const IntOrInf sigma = sigma2(g);
  if (!at_least(sigma, need))
    throw PreconditionError(detail::sigma2_message(sigma, need, "2(s1+s2)-1"));

  const VertexSet clique = low_degree_set(g, s1 + s2 - 1);
  const VertexSet very_low = low_degree_set(g, s1 + s2 - 2);
  if (very_low.size() >= 2) {
    // Two vertices of degree <= s1+s2-2 make X an edge whose removal leaves
    // minimum degree >= s1+s2; split G - X with X' empty.
    const Subgraph rest = remove_vertices(g, clique);
    if (min_degree(rest.graph) < s1 + s2)
      throw InvariantViolation("G - X has minimum degree " + std::to_string(min_degree(rest.graph)) +
                               " < s1+s2");
    DecompositionResult inner = decompose_triangle_free(rest.graph, s1, s2);
    inner.h1 = rest.lift(inner.h1);
    inner.h2 = rest.lift(inner.h2);
    inner.partition.reset();
    inner.route = "low-degree";
    return detail::finalize(g, std::move(inner));
  }

  detail::PartitionSearch search(g, s1, s2, clique);
  DecompositionResult result;
  result.mode = DecompositionMode::kTriangleFree;
  result.s1 = s1;
  result.s2 = s2;
  result.route = "partition";

  Side full = Side::kFirst;
  std::optional<std::pair<VertexSet, VertexSet>> done;
  PartitionState state = search.initial(full, done);

  // (max f, then min |full side|) as one integer.
  const long long scale = static_cast<long long>(g.order()) + 1;
  auto key = [&](const PartitionState& p, Side f) {
    return p.potential() * scale - static_cast<long long>(p.side(f).size());
  };
  const long long ceiling = static_cast<long long>(g.edge_count()) +
                            static_cast<long long>(std::max(s1, s2)) *
                                static_cast<long long>(g.order());
  const long long budget = (ceiling - state.potential() + 1) * scale + scale;
  long long iter = 0;
  auto advance = [&](PartitionState next, Side next_full) {
    if (key(next, next_full) <= key(state, full))
      detail::fault("exchange did not raise the (f, -|G1|) key", next, next_full);
    state = std::move(next);
    full = next_full;
  };

  while (!done) {
    if (++iter > budget) detail::fault("potential loop exceeded its bound", state, full);
    result.iterations = static_cast<int>(iter);
    const Side p = full;
    const Side q = other(p);
    const int sp = state.s(p);
    const int sq = state.s(q);

    // Both sides one level down degenerate: pull a vertex over from q.
    if (search.cache().degenerate(state.side(p), sp - 1)) {
      const MovableVertex mv = find_movable_vertex(state, q, /*epsilon=*/0, clique);
      PartitionState next = state.moved(q, mv.u);
      if (is_clique(g, next.side(q)))
        detail::fault("shrunken side became complete", next, full);
      search.require_degenerate(next.side(p), sp, "enlarged side is not degenerate", next, full);
      advance(std::move(next), p);
      continue;
    }

    // Single-vertex exchanges out of the full side.
    bool moved = false;
    for (Vertex x : state.side(p)) {
      const int gain = state.surplus(x) - (sq - sp);
      if (gain < 0) continue;
      PartitionState next = state.moved(p, x);
      if (search.cache().degenerate(next.side(q), sq - 1)) {
        if (is_clique(g, next.side(p)))
          detail::fault("complement of a degenerate side is complete", next, full);
        advance(std::move(next), p);
        moved = true;
        break;
      }
      search.require_degenerate(next.side(q), sq, "enlarged side is not degenerate one level up",
                                next, full);
      const DegeneracyCheck& rest = search.cache().check(next.side(p), sp - 1);
      if (rest.reason == DegeneracyReason::kComplete)
        detail::fault("complement of a degenerate side is complete", next, full);
      if (rest.reason == DegeneracyReason::kContainsWitness) {
        done = search.finish(next, full);
        state = std::move(next);
        moved = true;
        break;
      }
      if (gain >= 1) {
        advance(std::move(next), q);
        moved = true;
        break;
      }
    }
    if (moved) continue;

    // Pivot set: off X, exactly s_p inside and s_q across.
    VertexSet pivots;
    for (Vertex z : state.side(p) - clique)
      if (state.inside_degree(z) == sp && state.cross_degree(z) == sq) pivots.insert(z);
    if (pivots.empty()) detail::fault("pivot set Z is empty", state, full);

    const MovableVertex mv = find_movable_vertex(state, q, /*epsilon=*/0, clique);
    const Vertex u2 = mv.u;
    Vertex z1 = pivots.first();
    for (Vertex z : pivots)
      if (!g.has_edge(z, u2)) {
        z1 = z;
        break;
      }
    const bool adjacent = g.has_edge(z1, u2);
    const int required = sp - sq + (adjacent ? 3 : 1);
    if (state.surplus(u2) < required)
      detail::fault("partner vertex " + std::to_string(u2) + " has surplus " +
                        std::to_string(state.surplus(u2)) + " < " + std::to_string(required),
                    state, full);

    PartitionState next = state.moved(p, z1).moved(q, u2);
    search.require_degenerate(next.side(p), sp, "double move broke degeneracy", next, full);
    if (is_clique(g, next.side(q))) detail::fault("double move left a complete side", next, full);
    search.require_degenerate(next.side(q), sq, "double move broke degeneracy", next, full);
    if (search.cache().degenerate(next.side(q), sq - 1)) {
      advance(std::move(next), p);
      continue;
    }
    if (search.cache().degenerate(next.side(p), sp - 1)) {
      advance(std::move(next), q);
      continue;
    }
    if (next.potential() <= state.potential())
      detail::fault("double move did not raise the potential", next, full);
    done = search.finish(next, full);
    state = std::move(next);
  }

  result.h1 = done->first;
  result.h2 = done->second;
  result.partition = std::make_pair(state.side(Side::kFirst), state.side(Side::kSecond));
  return detail::finalize(g, std::move(result));
}

/// Entry point for the plain sigma2 forms: runs the matching engine.
inline DecompositionResult decompose(const Graph& g, int s1, int s2, DecompositionMode mode) {
  return mode == DecompositionMode::kGeneral ? decompose_general(g, s1, s2)
                                             : decompose_triangle_free(g, s1, s2);
}

}  // namespace degsum

#endif  // DEGSUM_DECOMPOSE_HPP
