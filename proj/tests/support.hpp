#ifndef DEGSUM_TESTS_SUPPORT_HPP
#define DEGSUM_TESTS_SUPPORT_HPP

#include <vector>

#include "degsum/degsum.hpp"

namespace degsum::fixtures {

inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

// K_{a,b} on {0..a-1} x {a..a+b-1} plus extra edges.
inline std::vector<Edge> biclique_edges(Vertex left, int a, Vertex right, int b) {
  std::vector<Edge> out;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) out.push_back({left + i, right + j});
  return out;
}

// K_{4,4} plus a path 0 - 8 - 9: vertex 9 is a pendant attached to a degree-2 vertex.
inline Graph pendant_gadget() {
  auto e = biclique_edges(0, 4, 4, 4);
  e.push_back({8, 0});
  e.push_back({8, 9});
  return Graph(10, e);
}

// Degree-2 pair 0-1 with private neighbors 2 and 3, both of degree 3 with
// common neighbors 4 and 5, whose outer neighbors 6 and 9 are adjacent inside
// a K_{3,3} on {6,7,8} x {9,10,11}.
inline Graph adjacent_outer_gadget() {
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {5, 9}};
  const auto k33 = biclique_edges(6, 3, 9, 3);
  e.insert(e.end(), k33.begin(), k33.end());
  return Graph(12, e);
}

// Triangle-free, sigma2 = 7, with two adjacent degree-2 vertices 10 and 11
// hanging off a K_{5,5}.
inline Graph low_degree_pair_graph() {
  auto e = biclique_edges(0, 5, 5, 5);
  e.push_back({10, 11});
  e.push_back({10, 5});
  e.push_back({11, 0});
  return Graph(12, e);
}

}  // namespace degsum::fixtures

#endif  // DEGSUM_TESTS_SUPPORT_HPP
