#ifndef DEGSUM_GRAPH_HPP
#define DEGSUM_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degsum/errors.hpp"
#include "degsum/vertex_set.hpp"

namespace degsum {

using Edge = std::pair<Vertex, Vertex>;

/// A nonnegative integer or +infinity; std::nullopt is infinity.
using IntOrInf = std::optional<int>;

inline bool at_least(const IntOrInf& value, long long bound) {
  return !value.has_value() || *value >= bound;
}

inline std::string to_string(const IntOrInf& value) {
  return value ? std::to_string(*value) : std::string("inf");
}

/// Immutable simple undirected graph on vertices 0..n-1 with bit-set rows.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adjacency_(check_order(n)) {}

  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& [u, v] : edges) connect(u, v);
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adjacency_.size(); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }
  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adjacency_[u].contains(v);
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  /// Degree of v inside the induced subgraph on `within`.
  int degree_in(Vertex v, const VertexSet& within) const {
    return static_cast<int>(adjacency_[v].count_common(within));
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency_) twice += row.size();
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != order())
      throw UsageError("label count does not match vertex count");
    labels_ = std::move(labels);
  }

  void check_vertex(Vertex v) const {
    if (v >= order())
      throw UsageError("vertex " + std::to_string(v) + " out of range for graph of order " +
                       std::to_string(order()));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  friend Graph add_edge(const Graph&, Vertex, Vertex);

  static std::size_t check_order(std::size_t n) {
    if (n > kMaxVertices)
      throw UsageError("graph order " + std::to_string(n) + " exceeds capacity " +
                       std::to_string(kMaxVertices));
    return n;
  }

  void connect(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }

  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
};

/// An induced subgraph together with the map back to its host's indices.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& local) const {
    VertexSet out;
    for (Vertex v : local) out.insert(to_parent[v]);
    return out;
  }
  std::vector<Vertex> lift(const std::vector<Vertex>& local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_parent[v]);
    return out;
  }
};

/// G_{u,v}: u and v merged into one vertex placed last (index order()-1).
/// to_parent covers the unmerged vertices only.
struct Contraction {
  Graph graph;
  std::vector<Vertex> to_parent;
  Vertex merged = 0;
  Vertex u = 0;
  Vertex v = 0;
};

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }

inline int min_degree(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return g.order() == 0 ? 0 : best;
}

inline bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return n < 2 || g.edge_count() == n * (n - 1) / 2;
}

/// Minimum degree sum over distinct non-adjacent pairs; infinity when complete.
inline IntOrInf sigma2(const Graph& g) {
  IntOrInf best;
  const VertexSet all = g.vertices();
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet non_adjacent = (all - g.neighbors(u)).without(u);
    for (Vertex v = non_adjacent.next(u); v < kMaxVertices; v = non_adjacent.next(v)) {
      const int sum = g.degree(u) + g.degree(v);
      if (!best || sum < *best) best = sum;
    }
  }
  return best;
}

/// The pair realizing sigma2, lexicographically first among ties.
inline std::optional<Edge> sigma2_pair(const Graph& g) {
  std::optional<Edge> best;
  int best_sum = std::numeric_limits<int>::max();
  const VertexSet all = g.vertices();
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet non_adjacent = (all - g.neighbors(u)).without(u);
    for (Vertex v = non_adjacent.next(u); v < kMaxVertices; v = non_adjacent.next(v)) {
      const int sum = g.degree(u) + g.degree(v);
      if (sum < best_sum) {
        best_sum = sum;
        best = Edge{u, v};
      }
    }
  }
  return best;
}

/// Shortest cycle length by BFS from every vertex; infinity for forests.
inline IntOrInf girth(const Graph& g) {
  const std::size_t n = g.order();
  IntOrInf best;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = root;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      if (best && 2 * dist[x] >= *best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent[x] != y) {
          const int len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

/// Lexicographically first triangle, if any.
inline std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    const VertexSet& na = g.neighbors(a);
    for (Vertex b = na.next(a); b < kMaxVertices; b = na.next(b)) {
      const VertexSet common = na & g.neighbors(b);
      const Vertex c = common.next(b);
      if (c < kMaxVertices) return std::array<Vertex, 3>{a, b, c};
    }
  }
  return std::nullopt;
}

/// V_{<=s}(G): vertices of degree at most s.
inline VertexSet low_degree_set(const Graph& g, int s) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= s) out.insert(v);
  return out;
}

inline void check_within(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices())) throw UsageError("vertex set exceeds graph order");
}

/// Number of edges with one end in a and the other in b. The sets must be disjoint.
inline std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_within(g, a);
  check_within(g, b);
  if (a.intersects(b)) throw UsageError("edges_between: sets overlap");
  std::size_t count = 0;
  for (Vertex v : a) count += g.neighbors(v).count_common(b);
  return count;
}

inline std::size_t edges_inside(const Graph& g, const VertexSet& s) {
  std::size_t twice = 0;
  for (Vertex v : s) twice += g.neighbors(v).count_common(s);
  return twice / 2;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  check_within(g, s);
  for (Vertex v : s)
    if (!(s.without(v)).is_subset_of(g.neighbors(v))) return false;
  return true;
}

inline Subgraph induced(const Graph& g, const VertexSet& s) {
  check_within(g, s);
  std::vector<Vertex> to_parent = s.to_vector();
  std::vector<Vertex> to_local(g.order(), kMaxVertices);
  for (Vertex i = 0; i < to_parent.size(); ++i) to_local[to_parent[i]] = i;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < to_parent.size(); ++i)
    for (Vertex w : g.neighbors(to_parent[i]) & s)
      if (to_local[w] > i) edges.emplace_back(i, to_local[w]);
  Subgraph sub{Graph(to_parent.size(), edges), std::move(to_parent)};
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex p : sub.to_parent) labels.push_back(g.labels()[p]);
    sub.graph.set_labels(std::move(labels));
  }
  return sub;
}

/// G - s
inline Subgraph remove_vertices(const Graph& g, const VertexSet& s) {
  return induced(g, g.vertices() - s);
}

inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw UsageError("add_edge: endpoints coincide");
  Graph out = g;
  out.connect(u, v);
  return out;
}

/// Merge u and v. The merged vertex is adjacent to every other x with a
/// neighbor in {u, v}; an edge uv, if present, disappears.
inline Contraction identify(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw UsageError("identify: vertices coincide");
  const VertexSet rest = g.vertices().without(u).without(v);
  Subgraph base = induced(g, rest);
  std::vector<Vertex> to_local(g.order(), kMaxVertices);
  for (Vertex i = 0; i < base.to_parent.size(); ++i) to_local[base.to_parent[i]] = i;

  const Vertex merged = base.to_parent.size();
  std::vector<Edge> edges = base.graph.edges();
  for (Vertex x : (g.neighbors(u) | g.neighbors(v)) & rest) edges.emplace_back(to_local[x], merged);
  return Contraction{Graph(merged + 1, edges), std::move(base.to_parent), merged, u, v};
}

namespace detail {

// Greedy sequential coloring of `candidates`; returns vertices in color order
// with the color bound of each prefix (MCQ style).
inline void color_sort(const Graph& g, VertexSet candidates, std::vector<Vertex>& order,
                       std::vector<int>& bound) {
  order.clear();
  bound.clear();
  int color = 0;
  while (!candidates.empty()) {
    ++color;
    VertexSet available = candidates;
    while (!available.empty()) {
      const Vertex v = available.first();
      available -= g.neighbors(v);
      available.erase(v);
      candidates.erase(v);
      order.push_back(v);
      bound.push_back(color);
    }
  }
}

inline void expand_clique(const Graph& g, VertexSet& current, const VertexSet& candidates,
                          VertexSet& best) {
  std::vector<Vertex> order;
  std::vector<int> bound;
  color_sort(g, candidates, order, bound);
  VertexSet remaining = candidates;
  for (std::size_t i = order.size(); i-- > 0;) {
    if (current.size() + static_cast<std::size_t>(bound[i]) <= best.size()) return;
    const Vertex v = order[i];
    current.insert(v);
    const VertexSet next = remaining & g.neighbors(v);
    if (next.empty()) {
      if (current.size() > best.size()) best = current;
    } else {
      expand_clique(g, current, next, best);
    }
    current.erase(v);
    remaining.erase(v);
  }
}

}  // namespace detail

/// A maximum clique, by branch and bound with a greedy coloring bound.
inline VertexSet maximum_clique(const Graph& g) {
  VertexSet best;
  VertexSet current;
  if (g.order() > 0) detail::expand_clique(g, current, g.vertices(), best);
  return best;
}

inline int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

}  // namespace degsum

#endif  // DEGSUM_GRAPH_HPP
