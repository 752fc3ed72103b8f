#ifndef DEGSUM_MOD3_CYCLES_HPP
#define DEGSUM_MOD3_CYCLES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "degsum/decompose.hpp"
#include "degsum/errors.hpp"
#include "degsum/graph.hpp"

namespace degsum {

/// A simple cycle as an ordered vertex sequence; consecutive vertices and the
/// last/first pair are adjacent.
struct CycleCertificate {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  int residue() const { return static_cast<int>(vertices.size() % 3); }
};

struct CyclePacking {
  int k = 0;
  std::vector<CycleCertificate> cycles;
};

/// Why `cycle` is not a residue-0 simple cycle of g, or nullopt if it is.
inline std::optional<std::string> cycle_defect(const Graph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) return "cycle has " + std::to_string(cycle.size()) + " vertices";
  VertexSet seen;
  for (Vertex v : cycle) {
    if (v >= g.order()) return "vertex " + std::to_string(v) + " out of range";
    if (seen.contains(v)) return "vertex " + std::to_string(v) + " repeats";
    seen.insert(v);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    if (!g.has_edge(a, b))
      return "no edge between " + std::to_string(a) + " and " + std::to_string(b);
  }
  if (cycle.size() % 3 != 0) return "length " + std::to_string(cycle.size()) + " is not 0 mod 3";
  return std::nullopt;
}

inline bool validate(const Graph& g, const CycleCertificate& c) {
  return !cycle_defect(g, c.vertices).has_value();
}

inline std::optional<std::string> packing_defect(const Graph& g, const CyclePacking& p) {
  if (static_cast<int>(p.cycles.size()) != p.k)
    return "expected " + std::to_string(p.k) + " cycles, found " + std::to_string(p.cycles.size());
  VertexSet used;
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    if (auto bad = cycle_defect(g, p.cycles[i].vertices))
      return "cycle " + std::to_string(i) + ": " + *bad;
    const VertexSet mine = VertexSet::of(p.cycles[i].vertices);
    if (mine.intersects(used)) return "cycle " + std::to_string(i) + " shares a vertex";
    used |= mine;
  }
  return std::nullopt;
}

inline bool validate(const Graph& g, const CyclePacking& p) { return !packing_defect(g, p); }

namespace detail {

// Residue-0 cycles whose smallest vertex is `start`, at most `cap` long.
// Failed states are memoized by (visited set, endpoint); with start and cap
// fixed, those determine the rest of the search.
class Mod3CycleSearch {
 public:
  Mod3CycleSearch(const Graph& g, Vertex start, std::size_t cap)
      : g_(g), start_(start), cap_(cap) {
    for (Vertex v = start + 1; v < g.order(); ++v) allowed_.insert(v);
  }

  std::optional<std::vector<Vertex>> run() {
    path_.assign(1, start_);
    visited_ = VertexSet{start_};
    if (extend(start_)) return path_;
    return std::nullopt;
  }

 private:
  bool extend(Vertex tip) {
    const std::size_t len = path_.size();
    if (len >= 3 && len % 3 == 0 && g_.has_edge(tip, start_)) return true;
    if (len >= cap_) return false;
    if (failed_.contains({visited_, tip})) return false;
    for (Vertex next : (g_.neighbors(tip) & allowed_) - visited_) {
      path_.push_back(next);
      visited_.insert(next);
      if (extend(next)) return true;
      visited_.erase(next);
      path_.pop_back();
    }
    failed_.insert({visited_, tip});
    return false;
  }

  struct State {
    VertexSet visited;
    Vertex tip;
    bool operator==(const State&) const = default;
  };
  struct StateHash {
    std::size_t operator()(const State& s) const { return s.visited.hash() ^ (s.tip * 0x9e37ULL); }
  };

  const Graph& g_;
  Vertex start_;
  std::size_t cap_;
  VertexSet allowed_;
  VertexSet visited_;
  std::vector<Vertex> path_;
  std::unordered_set<State, StateHash> failed_;
};

// Shortest residue-0 length first: caps 3, 6, 9, ... up to n.
inline std::optional<std::vector<Vertex>> search_mod3_cycle(const Graph& g) {
  for (std::size_t cap = 3; cap <= g.order(); cap += 3)
    for (Vertex start = 0; start < g.order(); ++start)
      if (auto c = Mod3CycleSearch(g, start, cap).run()) return c;
  return std::nullopt;
}

inline int count_low_degree(const Graph& g) {
  int low = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < 3) ++low;
  return low;
}

}  // namespace detail

/// Exhaustive search on a graph of order >= 3. A residue-0 cycle is guaranteed
/// when at most one vertex has degree < 3; other graphs are searched too, and
/// the degree condition is reported only when the search comes up empty.
inline CycleCertificate base_mod3_cycle(const Graph& g) {
  if (g.order() < 3) throw UsageError("base_mod3_cycle: graph order " + std::to_string(g.order()) + " < 3");
  if (auto c = detail::search_mod3_cycle(g)) return {*c};
  if (detail::count_low_degree(g) > 1)
    throw UsageError("base_mod3_cycle: no residue-0 cycle, and " +
                     std::to_string(detail::count_low_degree(g)) +
                     " vertices have degree < 3 (at most one allowed)");
  throw InvariantViolation("base_mod3_cycle: no residue-0 cycle in a graph with at most one vertex "
                           "of degree < 3 [" + std::to_string(g.order()) + " vertices, " +
                           std::to_string(g.edge_count()) + " edges]");
}

/// Result of lifting a cycle of G_{u,v} back to G: either a cycle of G or a
/// path from v to u whose vertex count is 1 mod 3, to be closed by the caller.
struct LiftedCycle {
  enum class Kind { kAvoidsMerged, kThroughEndpoint, kOpenPath };
  std::vector<Vertex> vertices;
  Kind kind = Kind::kAvoidsMerged;

  bool closed() const { return kind != Kind::kOpenPath; }
};

/// `cycle` lives in identify(g, u, v). If it avoids the merged vertex it maps
/// straight back. Otherwise u or v is substituted when it is adjacent to both
/// cycle neighbors of the merged vertex; failing that, the result is the open
/// path (v, x2, ..., xr, u).
inline LiftedCycle lift_through_identify(const Graph& g, Vertex u, Vertex v,
                                         const std::vector<Vertex>& cycle) {
  const Contraction c = identify(g, u, v);
  if (auto bad = cycle_defect(c.graph, cycle))
    throw UsageError("lift_through_identify: not a residue-0 cycle of G_{u,v}: " + *bad);
  const auto at = std::find(cycle.begin(), cycle.end(), c.merged);
  if (at == cycle.end()) {
    LiftedCycle out;
    for (Vertex w : cycle) out.vertices.push_back(c.to_parent[w]);
    return out;
  }
  // Rotate so the merged vertex comes first: (m, x2, ..., xr).
  std::vector<Vertex> rest;
  const std::size_t pos = static_cast<std::size_t>(at - cycle.begin());
  for (std::size_t i = 1; i < cycle.size(); ++i)
    rest.push_back(c.to_parent[cycle[(pos + i) % cycle.size()]]);
  const Vertex second = rest.front();
  const Vertex last = rest.back();

  for (Vertex hub : {u, v}) {
    if (g.has_edge(hub, second) && g.has_edge(hub, last)) {
      LiftedCycle out;
      out.kind = LiftedCycle::Kind::kThroughEndpoint;
      out.vertices.push_back(hub);
      out.vertices.insert(out.vertices.end(), rest.begin(), rest.end());
      return out;
    }
  }
  if (!g.has_edge(v, second)) std::reverse(rest.begin(), rest.end());
  if (!g.has_edge(v, rest.front()) || !g.has_edge(u, rest.back()))
    throw InvariantViolation("lift_through_identify: merged vertex neighbors are not split "
                             "between u and v");
  LiftedCycle out;
  out.kind = LiftedCycle::Kind::kOpenPath;
  out.vertices.push_back(v);
  out.vertices.insert(out.vertices.end(), rest.begin(), rest.end());
  out.vertices.push_back(u);
  return out;
}

/// Which step of the inductive argument produced the cycle, outermost first.
enum class Mod3Step {
  kTriangle,
  kBaseSearch,
  kPendantRemoved,
  kAdjacentEnds,
  kHighDegreeEnd,
  kMergedDegree3,
  kHighDegreeCommon,
  kSharedOuterNeighbor,
  kAdjacentOuterNeighbors,
  kAddedEdge,
  kLiftAvoidsMerged,
  kLiftThroughEndpoint,
  kLiftOpenPath,
};
using Mod3Trace = std::vector<Mod3Step>;

namespace detail {

inline void note(Mod3Trace* trace, Mod3Step step) {
  if (trace) trace->push_back(step);
}

inline std::vector<Vertex> to_host(const Subgraph& sub, const std::vector<Vertex>& local) {
  return sub.lift(local);
}

inline std::vector<Vertex> local_index(const Subgraph& sub, std::size_t host_order) {
  std::vector<Vertex> out(host_order, kMaxVertices);
  for (Vertex i = 0; i < sub.to_parent.size(); ++i) out[sub.to_parent[i]] = i;
  return out;
}

// The base finder on a graph the proof guarantees to qualify.
inline std::vector<Vertex> proof_base(const Graph& g, const char* where, Mod3Trace* trace) {
  note(trace, Mod3Step::kBaseSearch);
  if (g.order() < 3 || count_low_degree(g) > 1)
    throw InvariantViolation(std::string("find_mod3_cycle: ") + where +
                             " does not meet the base-case degree condition");
  return base_mod3_cycle(g).vertices;
}

inline std::vector<Vertex> mod3_cycle_rec(const Graph& g, Mod3Trace* trace);

inline std::vector<Vertex> proof_recurse(const Graph& g, const char* where, Mod3Trace* trace) {
  if (g.order() < 3 || !at_least(sigma2(g), 5))
    throw InvariantViolation(std::string("find_mod3_cycle: ") + where +
                             " lost the degree-sum condition");
  return mod3_cycle_rec(g, trace);
}

// Cycle of identify(h, u, v) found by the base finder, lifted to h; an open
// path is closed through x ~ u and y ~ v (x, y outside h, given in host indices).
inline std::vector<Vertex> through_identification(const Graph& host, const Subgraph& h, Vertex u,
                                                  Vertex v, Vertex x, Vertex y, const char* where,
                                                  Mod3Trace* trace) {
  const auto local = local_index(h, host.order());
  const Vertex lu = local[u];
  const Vertex lv = local[v];
  const Contraction c = identify(h.graph, lu, lv);
  const std::vector<Vertex> found = proof_base(c.graph, where, trace);
  const LiftedCycle lifted = lift_through_identify(h.graph, lu, lv, found);
  switch (lifted.kind) {
    case LiftedCycle::Kind::kAvoidsMerged: note(trace, Mod3Step::kLiftAvoidsMerged); break;
    case LiftedCycle::Kind::kThroughEndpoint: note(trace, Mod3Step::kLiftThroughEndpoint); break;
    case LiftedCycle::Kind::kOpenPath: note(trace, Mod3Step::kLiftOpenPath); break;
  }
  std::vector<Vertex> out;
  if (!lifted.closed()) {
    out.push_back(x);
    out.push_back(y);
  }
  for (Vertex w : lifted.vertices) out.push_back(h.to_parent[w]);
  return out;
}

inline Vertex only(const VertexSet& s, const char* what) {
  if (s.size() != 1)
    throw InvariantViolation(std::string("find_mod3_cycle: expected exactly one ") + what +
                             ", found " + std::to_string(s.size()));
  return s.first();
}

inline std::vector<Vertex> mod3_cycle_rec(const Graph& g, Mod3Trace* trace) {
  if (auto t = find_triangle(g)) {
    note(trace, Mod3Step::kTriangle);
    return {(*t)[0], (*t)[1], (*t)[2]};
  }

  const VertexSet low = low_degree_set(g, 2);
  if (low.size() > 2 || !is_clique(g, low))
    throw InvariantViolation("find_mod3_cycle: vertices of degree <= 2 do not form a clique of "
                             "order <= 2");
  if (low.size() <= 1) return proof_base(g, "triangle-free graph", trace);

  Vertex x = low.first();
  Vertex y = low.next(x);
  if (g.degree(x) == 1) std::swap(x, y);
  if (g.degree(y) == 1) {
    note(trace, Mod3Step::kPendantRemoved);
    const Subgraph rest = remove_vertices(g, VertexSet{y});
    return to_host(rest, proof_base(rest.graph, "G - y", trace));
  }

  const Vertex u = only(g.neighbors(x).without(y), "private neighbor of x");
  const Vertex v = only(g.neighbors(y).without(x), "private neighbor of y");
  const Subgraph inner = remove_vertices(g, VertexSet{x, y});

  if (g.has_edge(u, v)) {
    note(trace, Mod3Step::kAdjacentEnds);
    return through_identification(g, inner, u, v, x, y, "G'_{u,v}", trace);
  }

  if (g.degree(u) >= 4 || g.degree(v) >= 4) {
    note(trace, Mod3Step::kHighDegreeEnd);
    return to_host(inner, proof_base(inner.graph, "G - {x, y}", trace));
  }

  {
    const auto local = local_index(inner, g.order());
    const Contraction c = identify(inner.graph, local[u], local[v]);
    if (c.graph.degree(c.merged) >= 3) {
      note(trace, Mod3Step::kMergedDegree3);
      return through_identification(g, inner, u, v, x, y, "G'_{u,v} with degree-3 merge", trace);
    }
  }

  const VertexSet common = (g.neighbors(u) & g.neighbors(v)) - VertexSet{x, y};
  if (common.size() != 2)
    throw InvariantViolation("find_mod3_cycle: u and v have " + std::to_string(common.size()) +
                             " common neighbors, expected 2");
  const Vertex w = common.first();
  const Vertex z = common.next(w);
  if (g.has_edge(w, z)) throw InvariantViolation("find_mod3_cycle: common neighbors are adjacent");

  if (g.degree(w) >= 4 || g.degree(z) >= 4) {
    note(trace, Mod3Step::kHighDegreeCommon);
    const Subgraph rest = remove_vertices(g, VertexSet{x, y, v});
    return to_host(rest, proof_recurse(rest.graph, "G - {x, y, v}", trace));
  }

  const Vertex a = only(g.neighbors(w) - VertexSet{u, v}, "outer neighbor of w");
  const Vertex b = only(g.neighbors(z) - VertexSet{u, v}, "outer neighbor of z");
  const Subgraph outer = remove_vertices(g, VertexSet{x, y, u, v, w, z});
  if (a == b) {
    note(trace, Mod3Step::kSharedOuterNeighbor);
    return to_host(outer, proof_base(outer.graph, "G - {x, y, u, v, w, z}", trace));
  }
  if (g.has_edge(a, b)) {
    note(trace, Mod3Step::kAdjacentOuterNeighbors);
    return to_host(outer, proof_recurse(outer.graph, "G - {x, y, u, v, w, z}", trace));
  }

  const auto local = local_index(outer, g.order());
  const Vertex la = local[a];
  const Vertex lb = local[b];
  note(trace, Mod3Step::kAddedEdge);
  const std::vector<Vertex> found = proof_base(add_edge(outer.graph, la, lb), "G1 + ab", trace);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Vertex cur = found[i];
    const Vertex nxt = found[(i + 1) % found.size()];
    out.push_back(outer.to_parent[cur]);
    if ((cur == la && nxt == lb) || (cur == lb && nxt == la)) {
      // Replace the added edge by the path through w, u, z.
      if (cur == la) {
        out.insert(out.end(), {w, u, z});
      } else {
        out.insert(out.end(), {z, u, w});
      }
    }
  }
  return out;
}

template <class F>
auto as_invariant(const char* where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    throw InvariantViolation(std::string(where) + ": " + e.what());
  } catch (const UsageError& e) {
    throw InvariantViolation(std::string(where) + ": " + e.what());
  }
}

inline void check_mod3_preconditions(const Graph& g, int k) {
  if (k < 1) throw UsageError("k must be at least 1 (got " + std::to_string(k) + ")");
  if (static_cast<int>(g.order()) < 3 * k)
    throw PreconditionError("graph order " + std::to_string(g.order()) + " < " +
                            std::to_string(3 * k) + " = 3k");
  const IntOrInf sigma = sigma2(g);
  if (!at_least(sigma, 6 * k - 1))
    throw PreconditionError("σ₂ = " + to_string(sigma) + " < " + std::to_string(6 * k - 1) +
                            " (required σ₂ ≥ 6k-1)");
}

}  // namespace detail

/// A residue-0 cycle in a graph of order >= 3 with sigma2 >= 5. When `trace`
/// is given, it receives the sequence of reduction steps taken.
inline CycleCertificate find_mod3_cycle(const Graph& g, Mod3Trace* trace = nullptr) {
  detail::check_mod3_preconditions(g, 1);
  CycleCertificate c{detail::mod3_cycle_rec(g, trace)};
  if (auto bad = cycle_defect(g, c.vertices))
    throw InvariantViolation("find_mod3_cycle produced an invalid certificate: " + *bad);
  return c;
}

/// k vertex-disjoint residue-0 cycles in a graph with n >= 3k and
/// sigma2 >= 6k-1. Triangles are taken greedily; a triangle-free graph is
/// split by the triangle-free engine with targets (3(k-1), 3).
inline CyclePacking pack_mod3_cycles(const Graph& g, int k) {
  detail::check_mod3_preconditions(g, k);
  CyclePacking out;
  out.k = k;
  if (k == 1) {
    out.cycles.push_back(find_mod3_cycle(g));
    return out;
  }
  if (auto t = find_triangle(g)) {
    const Subgraph rest = remove_vertices(g, VertexSet{(*t)[0], (*t)[1], (*t)[2]});
    const CyclePacking inner =
        detail::as_invariant("pack after removing a triangle", [&] { return pack_mod3_cycles(rest.graph, k - 1); });
    out.cycles.push_back({{(*t)[0], (*t)[1], (*t)[2]}});
    for (const auto& c : inner.cycles) out.cycles.push_back({rest.lift(c.vertices)});
  } else {
    const DecompositionResult split = detail::as_invariant(
        "pack split", [&] { return decompose_triangle_free(g, 3 * (k - 1), 3); });
    const Subgraph h1 = induced(g, split.h1);
    const Subgraph h2 = induced(g, split.h2);
    const CyclePacking inner =
        detail::as_invariant("pack on H1", [&] { return pack_mod3_cycles(h1.graph, k - 1); });
    for (const auto& c : inner.cycles) out.cycles.push_back({h1.lift(c.vertices)});
    const CycleCertificate last =
        detail::as_invariant("cycle on H2", [&] { return find_mod3_cycle(h2.graph); });
    out.cycles.push_back({h2.lift(last.vertices)});
  }
  if (auto bad = packing_defect(g, out))
    throw InvariantViolation("pack_mod3_cycles produced an invalid packing: " + *bad);
  return out;
}

}  // namespace degsum

#endif  // DEGSUM_MOD3_CYCLES_HPP
