#ifndef DEGSUM_PARTITION_HPP
#define DEGSUM_PARTITION_HPP

#include <string>
#include <vector>

#include "degsum/errors.hpp"
#include "degsum/graph.hpp"

namespace degsum {

enum class Side : int { kFirst = 0, kSecond = 1 };

constexpr Side other(Side s) { return s == Side::kFirst ? Side::kSecond : Side::kFirst; }
constexpr int index(Side s) { return static_cast<int>(s); }

/// An ordered partition (G1, G2) of V(G) with cached per-vertex degrees and
/// the potential f = |E(G1)| + |E(G2)| + s2|G1| + s1|G2|.
///
/// The graph is held by pointer and must outlive the state.
class PartitionState {
 public:
  PartitionState(const Graph& g, const VertexSet& first, int s1, int s2)
      : graph_(&g), s_{s1, s2}, inside_(g.order()), cross_(g.order()) {
    check_within(g, first);
    sides_[0] = first;
    sides_[1] = g.vertices() - first;
    for (Vertex v = 0; v < g.order(); ++v) {
      const VertexSet& own = sides_[index(side_of(v))];
      inside_[v] = g.degree_in(v, own);
      cross_[v] = g.degree(v) - inside_[v];
    }
    potential_ = recompute_potential();
  }

  const Graph& graph() const { return *graph_; }
  const VertexSet& side(Side i) const { return sides_[index(i)]; }
  int s(Side i) const { return s_[index(i)]; }

  Side side_of(Vertex v) const { return sides_[0].contains(v) ? Side::kFirst : Side::kSecond; }

  /// Degree of v inside its own side.
  int inside_degree(Vertex v) const { return inside_[v]; }
  /// Number of neighbors of v on the opposite side.
  int cross_degree(Vertex v) const { return cross_[v]; }
  int surplus(Vertex v) const { return cross_[v] - inside_[v]; }

  long long potential() const { return potential_; }

  long long recompute_potential() const {
    const Graph& g = *graph_;
    return static_cast<long long>(edges_inside(g, sides_[0]) + edges_inside(g, sides_[1])) +
           static_cast<long long>(s_[1]) * static_cast<long long>(sides_[0].size()) +
           static_cast<long long>(s_[0]) * static_cast<long long>(sides_[1].size());
  }

  /// Change of f when u leaves side i for the other side.
  long long move_delta(Side i, Vertex u) const {
    return static_cast<long long>(surplus(u)) - (s(other(i)) - s(i));
  }

  void move(Side i, Vertex u) {
    if (!side(i).contains(u))
      throw UsageError("move_vertex: vertex " + std::to_string(u) + " is not on side " +
                       std::to_string(index(i) + 1));
    potential_ += move_delta(i, u);
    const Graph& g = *graph_;
    for (Vertex w : g.neighbors(u)) {
      if (sides_[index(i)].contains(w)) {
        --inside_[w];
        ++cross_[w];
      } else {
        ++inside_[w];
        --cross_[w];
      }
    }
    std::swap(inside_[u], cross_[u]);
    sides_[index(i)].erase(u);
    sides_[index(other(i))].insert(u);
  }

  PartitionState moved(Side i, Vertex u) const {
    PartitionState next = *this;
    next.move(i, u);
    return next;
  }

 private:
  const Graph* graph_;
  VertexSet sides_[2];
  int s_[2];
  std::vector<int> inside_;
  std::vector<int> cross_;
  long long potential_ = 0;
};

/// move_vertex as a value-returning operation.
inline PartitionState move_vertex(const PartitionState& p, Side i, Vertex u) {
  return p.moved(i, u);
}

}  // namespace degsum

#endif  // DEGSUM_PARTITION_HPP
