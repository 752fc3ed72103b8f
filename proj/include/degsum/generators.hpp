#ifndef DEGSUM_GENERATORS_HPP
#define DEGSUM_GENERATORS_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "degsum/errors.hpp"
#include "degsum/graph.hpp"
#include "degsum/rng.hpp"

namespace degsum {

struct CompleteBipartite {
  int a = 1;
  int b = 1;
};
/// `parts` independent sets of `size` vertices, all cross edges present.
struct BalancedMultipartite {
  int parts = 1;
  int size = 1;
};
struct RandomGnp {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};
/// G(n, p) repaired by edge insertion until sigma2 >= threshold.
struct RandomSigma2 {
  int n = 0;
  int threshold = 0;
  bool triangle_free = false;
  std::uint64_t seed = 0;
  double p = 0.3;
};
struct CompleteGraph {
  int n = 1;
};
struct CycleGraph {
  int n = 3;
};
struct PathGraph {
  int n = 1;
};
struct PetersenGraph {};

using GeneratorSpec = std::variant<CompleteBipartite, BalancedMultipartite, RandomGnp, RandomSigma2,
                                   CompleteGraph, CycleGraph, PathGraph, PetersenGraph>;

inline constexpr int kSigma2Restarts = 64;

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError("generator: " + what);
}

inline Graph gnp(int n, double p, CounterRng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(static_cast<std::size_t>(n), edges);
}

// Visit vertex pairs in random order, keeping an edge with probability p
// whenever it closes no triangle.
inline Graph random_triangle_free(int n, double p, CounterRng& rng) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) {
    if (!rng.bernoulli(p) || adj[u].intersects(adj[v])) continue;
    adj[u].insert(v);
    adj[v].insert(u);
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

// Random bipartition with each cross pair kept with probability p. Dense
// triangle-free graphs are mostly near-bipartite; this start reaches them.
inline Graph random_bipartite(int n, double p, CounterRng& rng) {
  std::vector<bool> left(static_cast<std::size_t>(n));
  for (auto&& side : left) side = rng.bernoulli(0.5);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
      if (left[u] != left[v] && rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(static_cast<std::size_t>(n), edges);
}

// Lowest-degree partner for t that keeps the graph triangle-free.
inline std::optional<Vertex> triangle_free_partner(const Graph& g, Vertex t) {
  std::optional<Vertex> best;
  for (Vertex c : g.vertices() - g.neighbors(t)) {
    if (c == t || g.neighbors(c).intersects(g.neighbors(t))) continue;
    if (!best || g.degree(c) < g.degree(*best)) best = c;
  }
  return best;
}

inline std::optional<Graph> repair_sigma2(Graph g, int threshold, bool triangle_free) {
  while (!at_least(sigma2(g), threshold)) {
    const auto [a, b] = *sigma2_pair(g);
    if (!triangle_free || !g.neighbors(a).intersects(g.neighbors(b))) {
      g = add_edge(g, a, b);
      continue;
    }
    const Vertex first = g.degree(a) <= g.degree(b) ? a : b;
    const Vertex second = first == a ? b : a;
    std::optional<Vertex> c = triangle_free_partner(g, first);
    Vertex t = first;
    if (!c) {
      c = triangle_free_partner(g, second);
      t = second;
    }
    if (!c) return std::nullopt;
    g = add_edge(g, t, *c);
  }
  return g;
}

}  // namespace detail

inline Graph complete_bipartite(int a, int b) {
  detail::require(a >= 1 && b >= 1, "complete-bipartite sides must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(static_cast<std::size_t>(a + b), edges);
}

inline Graph balanced_multipartite(int parts, int size) {
  detail::require(parts >= 1 && size >= 1, "multipartite needs parts >= 1 and size >= 1");
  const int n = parts * size;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / size != v / size) edges.emplace_back(u, v);
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph complete_graph(int n) {
  detail::require(n >= 0, "complete graph order must be nonnegative");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph cycle_graph(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph path_graph(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(static_cast<std::size_t>(n), edges);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph(10, edges);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

inline Graph random_gnp(int n, double p, std::uint64_t seed) {
  detail::require(n >= 0, "random: n must be nonnegative");
  detail::require(p >= 0.0 && p <= 1.0, "random: p must lie in [0,1]");
  CounterRng rng(seed);
  return detail::gnp(n, p, rng);
}

/// Deterministic in all fields. Restarts with a fresh stream and p raised by
/// 0.1 when the triangle-free repair reaches a dead end. Triangle-free
/// attempts alternate between the random greedy process and a random
/// bipartite start.
inline Graph random_sigma2(const RandomSigma2& spec) {
  detail::require(spec.n >= 1, "random-sigma2: n must be positive");
  detail::require(spec.p >= 0.0 && spec.p <= 1.0, "random-sigma2: p must lie in [0,1]");
  for (int attempt = 0; attempt < kSigma2Restarts; ++attempt) {
    CounterRng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
    const double p = std::min(1.0, spec.p + 0.1 * attempt);
    Graph start = !spec.triangle_free ? detail::gnp(spec.n, p, rng)
                  : attempt % 2 == 0  ? detail::random_triangle_free(spec.n, p, rng)
                                      : detail::random_bipartite(spec.n, p, rng);
    if (auto g = detail::repair_sigma2(std::move(start), spec.threshold, spec.triangle_free))
      return *g;
  }
  throw GenerationFailed(std::string("random-sigma2: no ") +
                         (spec.triangle_free ? "triangle-free " : "") + "graph on " +
                         std::to_string(spec.n) +
                         " vertices reached sigma2 >= " + std::to_string(spec.threshold) +
                         " after " + std::to_string(kSigma2Restarts) + " restarts");
}

inline Graph gen(const GeneratorSpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CompleteBipartite>) return complete_bipartite(s.a, s.b);
        else if constexpr (std::is_same_v<T, BalancedMultipartite>)
          return balanced_multipartite(s.parts, s.size);
        else if constexpr (std::is_same_v<T, RandomGnp>) return random_gnp(s.n, s.p, s.seed);
        else if constexpr (std::is_same_v<T, RandomSigma2>) return random_sigma2(s);
        else if constexpr (std::is_same_v<T, CompleteGraph>) return complete_graph(s.n);
        else if constexpr (std::is_same_v<T, CycleGraph>) return cycle_graph(s.n);
        else if constexpr (std::is_same_v<T, PathGraph>) return path_graph(s.n);
        else return petersen_graph();
      },
      spec);
}

namespace detail {

class SpecArgs {
 public:
  SpecArgs(std::string_view family, std::string_view body) : family_(family) {
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::string_view item = body.substr(0, comma);
      body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw UsageError("--gen " + family_ + ": expected key=value, got '" + std::string(item) + "'");
      values_[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    }
  }

  long long integer(const std::string& key, std::optional<long long> fallback = std::nullopt) {
    auto it = take(key);
    if (!it) {
      if (fallback) return *fallback;
      throw UsageError("--gen " + family_ + ": missing '" + key + "'");
    }
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(it->data(), it->data() + it->size(), out);
    if (ec != std::errc() || ptr != it->data() + it->size())
      throw UsageError("--gen " + family_ + ": '" + key + "' is not an integer");
    return out;
  }

  double real(const std::string& key, std::optional<double> fallback = std::nullopt) {
    auto it = take(key);
    if (!it) {
      if (fallback) return *fallback;
      throw UsageError("--gen " + family_ + ": missing '" + key + "'");
    }
    try {
      std::size_t used = 0;
      const double out = std::stod(*it, &used);
      if (used != it->size()) throw std::invalid_argument(key);
      return out;
    } catch (const std::exception&) {
      throw UsageError("--gen " + family_ + ": '" + key + "' is not a number");
    }
  }

  void finish() const {
    if (!values_.empty())
      throw UsageError("--gen " + family_ + ": unknown key '" + values_.begin()->first + "'");
  }

 private:
  std::optional<std::string> take(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::string v = it->second;
    values_.erase(it);
    return v;
  }

  std::string family_;
  std::map<std::string, std::string> values_;
};

}  // namespace detail

/// Parses the `family:key=val,...` mini-language, e.g.
/// `random-sigma2:n=18,thr=13,seed=7` or `complete-bipartite:a=3,b=4`.
inline GeneratorSpec parse_generator(std::string_view text) {
  const auto colon = text.find(':');
  const std::string family(text.substr(0, colon));
  detail::SpecArgs args(family, colon == std::string_view::npos ? std::string_view{}
                                                                 : text.substr(colon + 1));
  auto as_int = [](long long v) { return static_cast<int>(v); };
  GeneratorSpec spec;
  if (family == "complete-bipartite") {
    spec = CompleteBipartite{as_int(args.integer("a")), as_int(args.integer("b"))};
  } else if (family == "multipartite") {
    spec = BalancedMultipartite{as_int(args.integer("parts")), as_int(args.integer("size"))};
  } else if (family == "random") {
    spec = RandomGnp{as_int(args.integer("n")), args.real("p"),
                     static_cast<std::uint64_t>(args.integer("seed", 0))};
  } else if (family == "random-sigma2") {
    RandomSigma2 s;
    s.n = as_int(args.integer("n"));
    s.threshold = as_int(args.integer("thr"));
    s.triangle_free = args.integer("tf", 0) != 0;
    s.seed = static_cast<std::uint64_t>(args.integer("seed", 0));
    s.p = args.real("p", 0.3);
    spec = s;
  } else if (family == "complete") {
    spec = CompleteGraph{as_int(args.integer("n"))};
  } else if (family == "cycle") {
    spec = CycleGraph{as_int(args.integer("n"))};
  } else if (family == "path") {
    spec = PathGraph{as_int(args.integer("n"))};
  } else if (family == "petersen") {
    spec = PetersenGraph{};
  } else {
    throw UsageError("--gen: unknown family '" + family + "'");
  }
  args.finish();
  return spec;
}

}  // namespace degsum

#endif  // DEGSUM_GENERATORS_HPP
