#ifndef DEGSUM_STRESS_HPP
#define DEGSUM_STRESS_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "degsum/certificates.hpp"
#include "degsum/decompose.hpp"
#include "degsum/errors.hpp"
#include "degsum/feasibility.hpp"
#include "degsum/generators.hpp"
#include "degsum/graph.hpp"
#include "degsum/graph_io.hpp"
#include "degsum/mod3_cycles.hpp"
#include "degsum/oracles.hpp"
#include "degsum/rng.hpp"

namespace degsum {

inline constexpr const char* kStressSchema = "degsum.stress/1";

struct TrialOutcome {
  bool ok = true;
  std::string graph_hash;
  std::string stage;
  std::string detail;
};

struct TrialFailure {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string graph_hash;
  std::string stage;
  std::string detail;
};

struct StressReport {
  std::string suite;
  std::uint64_t seed = 0;
  int max_n = 0;
  int trials = 0;
  int successes = 0;
  std::vector<TrialFailure> failures;
  std::optional<double> wall_ms;
};

inline json to_json(const StressReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(json{{"trial", f.trial},
                            {"seed", f.seed},
                            {"graph_hash", f.graph_hash},
                            {"stage", f.stage},
                            {"detail", f.detail}});
  json out{{"schema", kStressSchema}, {"suite", r.suite},     {"seed", r.seed},
           {"max_n", r.max_n},        {"trials", r.trials},   {"successes", r.successes},
           {"failures", failures}};
  if (r.wall_ms) out["wall_ms"] = *r.wall_ms;
  return out;
}

/// Tracks the stage a trial is in so a thrown error is attributed to it.
class Trial {
 public:
  void stage(std::string name) { outcome_.stage = std::move(name); }
  void graph(const Graph& g) { outcome_.graph_hash = graph_hash(g); }
  void fail(std::string detail) {
    if (!outcome_.ok) return;
    outcome_.ok = false;
    outcome_.detail = std::move(detail);
  }
  void expect(bool ok, const std::string& detail) {
    if (!ok) fail(detail);
  }
  bool ok() const { return outcome_.ok; }
  TrialOutcome& outcome() { return outcome_; }

  template <class F>
  TrialOutcome run(F&& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      fail(e.what());
    }
    if (outcome_.ok) outcome_.stage.clear();
    return outcome_;
  }

 private:
  TrialOutcome outcome_;
};

namespace trials {

inline double pick_density(CounterRng& rng) { return 0.2 + 0.5 * rng.uniform(); }

/// Triangle-free inputs keep omega small, so the general engine runs its
/// exchange loop instead of the clique exit. Falls back to an unrestricted
/// graph when no triangle-free one is found.
inline Graph sigma2_graph(int n, int threshold, bool prefer_triangle_free, std::uint64_t seed, double p) {
  if (prefer_triangle_free) {
    try {
      return random_sigma2({n, threshold, true, seed, p});
    } catch (const GenerationFailed&) {
    }
  }
  return random_sigma2({n, threshold, false, seed, p});
}

/// One decomposition instance: a sigma2-repaired random graph of order n.
/// The triangle-free engine always gets a triangle-free graph; the general
/// engine gets one when `sparse_input` is set and generation succeeds.
inline TrialOutcome decompose_instance(std::uint64_t seed, int s1, int s2, int n, bool triangle_free,
                                       bool sparse_input = false) {
  return Trial().run([&](Trial& t) {
    CounterRng rng(seed);
    t.stage("generate");
    const int threshold = triangle_free ? 2 * (s1 + s2) - 1 : 2 * (s1 + s2 + 1) - 1;
    const double p = pick_density(rng);
    const Graph g = triangle_free
                        ? random_sigma2({n, threshold, true, derive_seed(seed, 1), p})
                        : sigma2_graph(n, threshold, sparse_input, derive_seed(seed, 1), p);
    t.graph(g);
    t.stage("decompose");
    const DecompositionResult r =
        triangle_free ? decompose_triangle_free(g, s1, s2) : decompose_general(g, s1, s2);
    t.stage("verify");
    for (Guarantee which : triangle_free
                               ? std::vector{Guarantee::kSigma2TriangleFree, Guarantee::kStrongTriangleFree}
                               : std::vector{Guarantee::kSigma2, Guarantee::kStrong}) {
      const ConclusionReport report = verify_conclusion(g, r, which);
      if (!report.passed()) {
        t.fail(std::string(to_string(which)) + " fails: " + report.failures().front());
        return;
      }
    }
  });
}

/// find_mod3_cycle on a sigma2 >= 5 graph, confirmed by the cycle oracle.
inline TrialOutcome find_cycle_instance(std::uint64_t seed, int n, bool triangle_free) {
  return Trial().run([&](Trial& t) {
    CounterRng rng(seed);
    t.stage("generate");
    const Graph g = random_sigma2({n, 5, triangle_free, derive_seed(seed, 1), pick_density(rng)});
    t.graph(g);
    t.stage("find");
    const CycleCertificate c = find_mod3_cycle(g);
    t.stage("verify");
    if (auto bad = cycle_defect(g, c.vertices)) {
      t.fail(*bad);
      return;
    }
    if (g.order() <= kCycleOracleCap) {
      t.stage("oracle");
      t.expect(oracle_has_mod3_cycle(g), "oracle finds no residue-0 cycle");
    }
  });
}

/// pack_mod3_cycles on a sigma2 >= 6k-1 graph.
inline TrialOutcome pack_instance(std::uint64_t seed, int k, int n, bool triangle_free) {
  return Trial().run([&](Trial& t) {
    CounterRng rng(seed);
    t.stage("generate");
    const Graph g = random_sigma2({n, 6 * k - 1, triangle_free, derive_seed(seed, 1), pick_density(rng)});
    t.graph(g);
    t.stage("pack");
    const CyclePacking p = pack_mod3_cycles(g, k);
    t.stage("verify");
    if (auto bad = packing_defect(g, p)) {
      t.fail(*bad);
      return;
    }
    if (g.order() <= kCycleOracleCap) {
      t.stage("oracle");
      t.expect(oracle_max_disjoint_mod3(g) >= k, "oracle packs fewer than k cycles");
    }
  });
}

/// A random clique of target size inside g, grown greedily in random order.
inline VertexSet random_clique(const Graph& g, CounterRng& rng, int target) {
  std::vector<Vertex> order = g.vertices().to_vector();
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  VertexSet clique;
  for (Vertex v : order) {
    if (static_cast<int>(clique.size()) >= target) break;
    if (clique.is_subset_of(g.neighbors(v))) clique.insert(v);
  }
  return clique;
}

/// Engine verdict against subset enumeration on a random (G, X, s).
inline TrialOutcome feasibility_instance(std::uint64_t seed, int n) {
  return Trial().run([&](Trial& t) {
    CounterRng rng(seed);
    t.stage("generate");
    const Graph g = random_gnp(n, pick_density(rng) + 0.1, derive_seed(seed, 1));
    t.graph(g);
    const VertexSet clique = random_clique(g, rng, static_cast<int>(rng.between(0, 3)));
    const int level = static_cast<int>(rng.between(0, std::max(1, n / 2)));
    const FeasibilityContext ctx(g, clique, level);
    t.stage("engine");
    const DegeneracyVerdict engine = find_feasible_subgraph(ctx, g.vertices());
    t.stage("oracle");
    const DegeneracyVerdict oracle = oracle_feasible_enumerate(ctx, g.vertices());
    t.stage("compare");
    t.expect(engine.degenerate() == oracle.degenerate(),
             std::string("engine says ") + (engine.degenerate() ? "degenerate" : "feasible") +
                 ", oracle disagrees at s=" + std::to_string(level));
    if (engine.witness) {
      t.expect(check_feasible(ctx, engine.witness->vertices), "engine witness fails check_feasible");
      t.expect(oracle_is_feasible(g, clique, level, engine.witness->vertices),
               "engine witness fails the oracle check");
    }
  });
}

/// sigma2 >= 2s-1 facts: V_{<=s-1} is a clique (size <= 2 if triangle-free),
/// non-complete graphs have n >= s+2, and n >= 2s when also triangle-free.
inline TrialOutcome low_degree_instance(std::uint64_t seed, int s, int n, bool triangle_free) {
  return Trial().run([&](Trial& t) {
    CounterRng rng(seed);
    t.stage("generate");
    const Graph g = random_sigma2({n, 2 * s - 1, triangle_free, derive_seed(seed, 1), pick_density(rng)});
    t.graph(g);
    t.stage("check");
    t.expect(at_least(oracle_sigma2(g), 2 * s - 1), "generator missed the sigma2 threshold");
    const VertexSet low = low_degree_set(g, s - 1);
    t.expect(is_clique(g, low), "low-degree set is not a clique");
    const bool girth4 = !find_triangle(g).has_value();
    if (girth4) t.expect(low.size() <= 2, "triangle-free low-degree set has more than 2 vertices");
    if (!is_complete(g)) {
      t.expect(static_cast<int>(g.order()) >= s + 2, "non-complete graph of order < s+2");
      if (girth4) t.expect(static_cast<int>(g.order()) >= 2 * s, "triangle-free graph of order < 2s");
    }
  });
}

struct ExtremalCase {
  std::string name;
  std::function<void(Trial&)> check;
};

template <class F>
bool rejects_precondition(F&& f) {
  try {
    f();
  } catch (const PreconditionError&) {
    return true;
  }
  return false;
}

/// The sharpness families: each must fail the relevant hypothesis and have
/// no object of the promised kind.
inline const std::vector<ExtremalCase>& extremal_cases() {
  static const std::vector<ExtremalCase> cases = [] {
    std::vector<ExtremalCase> out;
    for (auto [s1, s2] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
      out.push_back({"complete-bipartite(" + std::to_string(s1 + s2 - 1) + "," +
                         std::to_string(s1 + s2) + ")",
                     [s1, s2](Trial& t) {
                       const Graph g = complete_bipartite(s1 + s2 - 1, s1 + s2);
                       t.graph(g);
                       t.stage("sigma2");
                       t.expect(sigma2(g) == IntOrInf(2 * (s1 + s2) - 2), "sigma2 != 2(s1+s2)-2");
                       t.stage("precondition");
                       t.expect(rejects_precondition([&] { decompose_triangle_free(g, s1, s2); }),
                                "triangle-free engine accepted the instance");
                       t.stage("oracle");
                       t.expect(!oracle_partition_exists(g, s1, s2, PartitionProblem::kProblem12).exists,
                                "oracle found a partition");
                     }});
    }
    for (auto [r, s] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 2}}) {
      out.push_back({"multipartite(" + std::to_string(r + 1) + "," + std::to_string(s) + ")",
                     [r, s](Trial& t) {
                       const Graph g = balanced_multipartite(r + 1, s);
                       t.graph(g);
                       const int s1 = r * s - r + 1;
                       const int s2 = r - 1;
                       t.stage("sigma2");
                       t.expect(sigma2(g) == IntOrInf(2 * r * s), "sigma2 != 2rs");
                       if (s2 >= 2) {
                         t.stage("precondition");
                         t.expect(rejects_precondition([&] { decompose_general(g, s1, s2); }),
                                  "general engine accepted the instance");
                       }
                       t.stage("oracle");
                       t.expect(!oracle_partition_exists(g, s1, s2, PartitionProblem::kProblem11).exists,
                                "oracle found a partition");
                     }});
    }
    for (int k : {1, 2}) {
      const int n = 3 * k + 6;
      out.push_back({"complete-bipartite(" + std::to_string(3 * k - 1) + "," +
                         std::to_string(n - 3 * k + 1) + ")",
                     [k, n](Trial& t) {
                       const Graph g = complete_bipartite(3 * k - 1, n - 3 * k + 1);
                       t.graph(g);
                       t.stage("sigma2");
                       t.expect(sigma2(g) == IntOrInf(6 * k - 2), "sigma2 != 6k-2");
                       t.stage("precondition");
                       t.expect(rejects_precondition([&] { pack_mod3_cycles(g, k); }),
                                "packer accepted the instance");
                       t.stage("oracle");
                       t.expect(oracle_max_disjoint_mod3(g) == k - 1, "oracle packs a different count");
                     }});
    }
    return out;
  }();
  return cases;
}

}  // namespace trials

struct StressConfig {
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 1;
  int max_n = 0;  // 0: suite default
  int jobs = 1;
  bool timing = false;
};

struct SuiteDefinition {
  int default_max_n = 0;
  int min_n = 0;
  // (trial seed, trial index, max_n) -> outcome
  std::function<TrialOutcome(std::uint64_t, int, int)> trial;
};

namespace detail {

inline constexpr std::pair<int, int> kTargetPairs[] = {{2, 2}, {2, 3}, {3, 3}};

inline int draw_order(CounterRng& rng, int lo, int hi) {
  return static_cast<int>(rng.between(lo, std::max(lo, hi)));
}

}  // namespace detail

inline const std::map<std::string, SuiteDefinition>& stress_suites() {
  static const std::map<std::string, SuiteDefinition> suites = [] {
    std::map<std::string, SuiteDefinition> out;
    out["decompose-general"] = {20, 10, [](std::uint64_t seed, int trial, int max_n) {
      CounterRng rng(seed);
      const auto [s1, s2] = detail::kTargetPairs[trial % 3];
      const int n = detail::draw_order(rng, 10, max_n);
      return trials::decompose_instance(derive_seed(seed, 2), s1, s2, n, false, (trial / 3) % 2 == 1);
    }};
    out["decompose-tf"] = {20, 10, [](std::uint64_t seed, int trial, int max_n) {
      CounterRng rng(seed);
      const auto [s1, s2] = detail::kTargetPairs[trial % 3];
      const int n = detail::draw_order(rng, std::max(10, 2 * (s1 + s2) + 2), max_n);
      return trials::decompose_instance(derive_seed(seed, 2), s1, s2, n, true);
    }};
    out["cycles-k"] = {20, 4, [](std::uint64_t seed, int trial, int max_n) {
      CounterRng rng(seed);
      const bool triangle_free = rng.bernoulli(0.3);
      if (trial % 2 == 0) {
        const int n = detail::draw_order(rng, triangle_free ? 6 : 4,
                                         std::min<int>(max_n, static_cast<int>(kCycleOracleCap)));
        return trials::find_cycle_instance(derive_seed(seed, 2), n, triangle_free);
      }
      const int n = detail::draw_order(rng, triangle_free ? 12 : 6, max_n);
      return trials::pack_instance(derive_seed(seed, 2), 2, n, triangle_free);
    }};
    out["feasibility-oracle"] = {12, 3, [](std::uint64_t seed, int, int max_n) {
      CounterRng rng(seed);
      const int n = detail::draw_order(rng, 3, max_n);
      return trials::feasibility_instance(derive_seed(seed, 2), n);
    }};
    const SuiteDefinition low_degree = {16, 3, [](std::uint64_t seed, int trial, int max_n) {
      CounterRng rng(seed);
      const int s = 2 + trial % 3;
      const bool triangle_free = rng.bernoulli(0.3);
      const int n = detail::draw_order(rng, triangle_free ? 2 * s : 3, max_n);
      return trials::low_degree_instance(derive_seed(seed, 2), s, n, triangle_free);
    }};
    out["lemma-2.1"] = low_degree;
    out["low-degree-clique"] = low_degree;
    out["extremal-negative"] = {0, 0, [](std::uint64_t, int trial, int) {
      const auto& cases = trials::extremal_cases();
      const auto& c = cases[static_cast<std::size_t>(trial) % cases.size()];
      TrialOutcome o = Trial().run(c.check);
      if (!o.ok) o.detail = c.name + ": " + o.detail;
      return o;
    }};
    return out;
  }();
  return suites;
}

/// Runs cfg.trials seeded trials on a worker pool. Trial i uses
/// derive_seed(cfg.seed, i), so the report does not depend on cfg.jobs.
inline StressReport run_stress(const StressConfig& cfg) {
  const auto& suites = stress_suites();
  const auto it = suites.find(cfg.suite);
  if (it == suites.end()) {
    std::string names;
    for (const auto& [name, _] : suites) names += (names.empty() ? "" : ", ") + name;
    throw UsageError("unknown stress suite '" + cfg.suite + "' (known: " + names + ")");
  }
  if (cfg.trials < 0) throw UsageError("trials must be nonnegative");
  if (cfg.jobs < 1) throw UsageError("jobs must be positive");
  const SuiteDefinition& suite = it->second;
  const int max_n = cfg.max_n > 0 ? cfg.max_n : suite.default_max_n;
  if (suite.default_max_n > 0 && max_n < suite.min_n)
    throw UsageError("max-n " + std::to_string(max_n) + " is below the suite minimum " +
                     std::to_string(suite.min_n));
  if (max_n > static_cast<int>(kMaxVertices))
    throw UsageError("max-n exceeds " + std::to_string(kMaxVertices));

  const auto started = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.trials; i = next++)
      outcomes[static_cast<std::size_t>(i)] =
          suite.trial(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)), i, max_n);
  };
  const int jobs = std::min(cfg.jobs, std::max(1, cfg.trials));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  StressReport report;
  report.suite = cfg.suite;
  report.seed = cfg.seed;
  report.max_n = max_n;
  report.trials = cfg.trials;
  for (int i = 0; i < cfg.trials; ++i) {
    const TrialOutcome& o = outcomes[static_cast<std::size_t>(i)];
    if (o.ok) {
      ++report.successes;
    } else {
      report.failures.push_back(
          {i, derive_seed(cfg.seed, static_cast<std::uint64_t>(i)), o.graph_hash, o.stage, o.detail});
    }
  }
  if (cfg.timing)
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace degsum

#endif  // DEGSUM_STRESS_HPP
