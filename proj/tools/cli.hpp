#ifndef DEGSUM_TOOLS_CLI_HPP
#define DEGSUM_TOOLS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "degsum/degsum.hpp"

namespace degsum::cli {

enum ExitCode : int { kOk = 0, kFault = 1, kPrecondition = 2, kUsage = 64 };

enum class LogLevel { kQuiet, kInfo, kDebug };

inline LogLevel log_level_from_env() {
  const char* raw = std::getenv("DEGSUM_LOG");
  const std::string v = raw ? raw : "";
  if (v == "info") return LogLevel::kInfo;
  if (v == "debug") return LogLevel::kDebug;
  return LogLevel::kQuiet;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  LogLevel level = LogLevel::kQuiet;

  void info(const std::string& line) const {
    if (level != LogLevel::kQuiet) err << "[info] " << line << '\n';
  }
  void debug(const std::string& line) const {
    if (level == LogLevel::kDebug) err << "[debug] " << line << '\n';
  }
};

struct InputOptions {
  std::string path;
  std::string gen;

  void attach(CLI::App* cmd) {
    auto* in = cmd->add_option("--in", path, "graph file (edge list or DIMACS)");
    auto* g = cmd->add_option("--gen", gen, "generator spec, e.g. random-sigma2:n=18,thr=13,seed=7");
    in->excludes(g);
    g->excludes(in);
  }

  Graph load(const Context& ctx) const {
    if (path.empty() == gen.empty()) throw UsageError("give exactly one of --in or --gen");
    Graph g = path.empty() ? degsum::gen(parse_generator(gen)) : read_graph_file(path);
    ctx.info("graph: n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) +
             " hash=" + graph_hash(g));
    return g;
  }
};

inline void emit(const Context& ctx, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    ctx.out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open certificate '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("certificate '" + path + "' is not valid JSON: " + e.what());
  }
}

/// Parses `args` (without the program name) and runs the chosen subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, log_level_from_env()};
  CLI::App app{"Degree-sum decompositions and 0 mod 3 cycle packings with certificates", "degsum"};
  app.require_subcommand(1);

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "split a graph into two disjoint induced subgraphs");
  InputOptions decompose_in;
  int s1 = 0;
  int s2 = 0;
  bool triangle_free = false;
  std::string decompose_out;
  decompose_in.attach(decompose_cmd);
  decompose_cmd->add_option("--s1", s1, "target for H1")->required();
  decompose_cmd->add_option("--s2", s2, "target for H2")->required();
  decompose_cmd->add_flag("--triangle-free", triangle_free, "use the triangle-free engine");
  decompose_cmd->add_option("--out", decompose_out, "certificate path (default stdout)");

  // cycles
  auto* cycles_cmd = app.add_subcommand("cycles", "find k disjoint cycles of length 0 mod 3");
  InputOptions cycles_in;
  int k = 1;
  std::string cycles_out;
  cycles_in.attach(cycles_cmd);
  cycles_cmd->add_option("--k", k, "number of cycles")->required();
  cycles_cmd->add_option("--out", cycles_out, "certificate path (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate against its graph");
  InputOptions verify_in;
  std::string cert_path;
  std::string conclusion;
  verify_in.attach(verify_cmd);
  verify_cmd->add_option("--cert", cert_path, "certificate JSON")->required();
  verify_cmd
      ->add_option("--theorem,--conclusion", conclusion,
                   "sigma2 | sigma2-tf | strong | strong-tf (or 1.3 | 1.4 | 1.5 | 1.6)");

  // stress
  auto* stress_cmd = app.add_subcommand("stress", "seeded property trials against oracles");
  StressConfig stress;
  std::string stress_out;
  stress_cmd->add_option("--suite", stress.suite, "suite name")->required();
  stress_cmd->add_option("--trials", stress.trials, "number of trials");
  stress_cmd->add_option("--seed", stress.seed, "base seed");
  stress_cmd->add_option("--max-n", stress.max_n, "largest graph order (0: suite default)");
  stress_cmd->add_option("--jobs", stress.jobs, "worker threads");
  stress_cmd->add_option("--out", stress_out, "report path (default stdout)");
  stress_cmd->add_flag("--timing", stress.timing, "include wall time in the report");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "emit a generated graph as an edge list");
  std::string gen_spec;
  std::string gen_out;
  gen_cmd->add_option("spec,--spec", gen_spec, "generator spec")->required();
  gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth for small graphs");
  InputOptions oracle_in;
  std::string query;
  int oracle_s1 = 0;
  int oracle_s2 = 0;
  std::string problem = "1.1";
  oracle_in.attach(oracle_cmd);
  oracle_cmd->add_option("query", query, "partition | max-mod3 | sigma2 | clique-number")->required();
  oracle_cmd->add_option("--s1", oracle_s1, "target for H1 (partition)");
  oracle_cmd->add_option("--s2", oracle_s2, "target for H2 (partition)");
  oracle_cmd->add_option("--problem", problem, "1.1 (|Hi| >= si+1) or 1.2 (|Hi| >= 2si)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (decompose_cmd->parsed()) {
      const Graph g = decompose_in.load(ctx);
      const DecompositionResult r =
          triangle_free ? decompose_triangle_free(g, s1, s2) : decompose_general(g, s1, s2);
      const ConclusionReport check = verify_conclusion(
          g, r, triangle_free ? Guarantee::kStrongTriangleFree : Guarantee::kStrong);
      if (!check.passed()) {
        err << "fault: certificate fails " << check.failures().front() << '\n';
        return kFault;
      }
      ctx.info("route=" + r.route + " iterations=" + std::to_string(r.iterations));
      emit(ctx, decompose_out, dump(to_json(r)));
      return kOk;
    }
    if (cycles_cmd->parsed()) {
      const Graph g = cycles_in.load(ctx);
      const CyclePacking p = pack_mod3_cycles(g, k);
      if (auto bad = packing_defect(g, p)) {
        err << "fault: " << *bad << '\n';
        return kFault;
      }
      emit(ctx, cycles_out, dump(to_json(p)));
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const Graph g = verify_in.load(ctx);
      const json cert = read_json_file(cert_path);
      if (cert.contains("cycles")) {
        const CyclePacking p = packing_from_json(cert);
        if (auto bad = packing_defect(g, p)) {
          out << dump(json{{"valid", false}, {"reason", *bad}});
          return kFault;
        }
        out << dump(json{{"valid", true}, {"k", p.k}});
        return kOk;
      }
      const DecompositionResult r = decomposition_from_json(cert);
      const Guarantee which = conclusion.empty()
                                  ? (r.mode == DecompositionMode::kTriangleFree ? Guarantee::kStrongTriangleFree
                                                                                 : Guarantee::kStrong)
                                  : parse_guarantee(conclusion);
      const ConclusionReport report = verify_conclusion(g, r, which);
      out << dump(to_json(report));
      if (!report.passed()) {
        err << "verification failed: " << report.failures().front() << '\n';
        return kFault;
      }
      return kOk;
    }
    if (stress_cmd->parsed()) {
      const StressReport report = run_stress(stress);
      ctx.info(stress.suite + ": " + std::to_string(report.successes) + "/" +
               std::to_string(report.trials));
      emit(ctx, stress_out, dump(to_json(report)));
      return report.failures.empty() ? kOk : kFault;
    }
    if (gen_cmd->parsed()) {
      emit(ctx, gen_out, write_edge_list(degsum::gen(parse_generator(gen_spec))));
      return kOk;
    }
    if (oracle_cmd->parsed()) {
      const Graph g = oracle_in.load(ctx);
      json verdict{{"query", query}};
      if (query == "partition") {
        PartitionProblem which;
        if (problem == "1.1") {
          which = PartitionProblem::kProblem11;
        } else if (problem == "1.2") {
          which = PartitionProblem::kProblem12;
        } else {
          throw UsageError("--problem must be 1.1 or 1.2");
        }
        const PartitionProbe probe = oracle_partition_exists(g, oracle_s1, oracle_s2, which);
        verdict["problem"] = problem;
        verdict["s1"] = oracle_s1;
        verdict["s2"] = oracle_s2;
        verdict["exists"] = probe.exists;
        if (probe.witness) {
          verdict["h1"] = to_json(probe.witness->first);
          verdict["h2"] = to_json(probe.witness->second);
        }
      } else if (query == "max-mod3") {
        verdict["value"] = oracle_max_disjoint_mod3(g);
      } else if (query == "sigma2") {
        const IntOrInf s = oracle_sigma2(g);
        verdict["value"] = s ? json(*s) : json("inf");
      } else if (query == "clique-number") {
        verdict["value"] = oracle_clique_number(g);
      } else {
        throw UsageError("unknown oracle query '" + query + "'");
      }
      out << dump(verdict);
      return kOk;
    }
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GenerationFailed& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "fault: " << e.what() << '\n';
    return kFault;
  }
  return kUsage;
}

}  // namespace degsum::cli

#endif  // DEGSUM_TOOLS_CLI_HPP
