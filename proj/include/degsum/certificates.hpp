#ifndef DEGSUM_CERTIFICATES_HPP
#define DEGSUM_CERTIFICATES_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "degsum/decompose.hpp"
#include "degsum/errors.hpp"
#include "degsum/feasibility.hpp"
#include "degsum/mod3_cycles.hpp"

namespace degsum {

using json = nlohmann::ordered_json;

inline constexpr const char* kDecompositionSchema = "degsum.decomposition/1";
inline constexpr const char* kCyclePackingSchema = "degsum.cycles/1";

inline json to_json(const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

inline VertexSet vertex_set_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw UsageError(std::string("certificate field '") + field + "' must be an array");
  VertexSet out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= kMaxVertices)
      throw UsageError(std::string("certificate field '") + field + "' has an invalid vertex");
    out.insert(v.get<std::size_t>());
  }
  return out;
}

inline json to_json(const FeasibleWitness& w) {
  return json{{"s", w.level}, {"X", to_json(w.clique)}, {"vertices", to_json(w.vertices)}};
}

inline json to_json(const DecompositionResult& r) {
  json checks = json::object();
  for (const auto& c : r.checks) checks[c.name] = c.passed;
  json out{{"schema", kDecompositionSchema},
           {"mode", to_string(r.mode)},
           {"s1", r.s1},
           {"s2", r.s2},
           {"route", r.route},
           {"h1", to_json(r.h1)},
           {"h2", to_json(r.h2)},
           {"checks", checks}};
  if (r.partition) out["partition"] = json::array({to_json(r.partition->first), to_json(r.partition->second)});
  return out;
}

inline json to_json(const ConclusionReport& report) {
  json checks = json::object();
  for (const auto& c : report.checks) checks[c.name] = c.passed;
  return json{{"conclusion", to_string(report.guarantee)}, {"passed", report.passed()}, {"checks", checks}};
}

inline json to_json(const CyclePacking& p) {
  json cycles = json::array();
  for (const auto& c : p.cycles) cycles.push_back(c.vertices);
  return json{{"schema", kCyclePackingSchema}, {"k", p.k}, {"cycles", cycles}};
}

/// The parts of a decomposition certificate that `verify` re-checks.
inline DecompositionResult decomposition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("h1") || !j.contains("h2") || !j.contains("s1") || !j.contains("s2"))
    throw UsageError("decomposition certificate needs h1, h2, s1, s2");
  DecompositionResult r;
  r.h1 = vertex_set_from_json(j.at("h1"), "h1");
  r.h2 = vertex_set_from_json(j.at("h2"), "h2");
  r.s1 = j.at("s1").get<int>();
  r.s2 = j.at("s2").get<int>();
  const std::string mode = j.value("mode", std::string("general"));
  if (mode == "general") {
    r.mode = DecompositionMode::kGeneral;
  } else if (mode == "triangle_free") {
    r.mode = DecompositionMode::kTriangleFree;
  } else {
    throw UsageError("unknown decomposition mode '" + mode + "'");
  }
  r.route = j.value("route", std::string());
  return r;
}

inline CyclePacking packing_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cycles") || !j.at("cycles").is_array())
    throw UsageError("cycle certificate needs a 'cycles' array");
  CyclePacking p;
  for (const auto& c : j.at("cycles")) {
    if (!c.is_array()) throw UsageError("each cycle must be an array of vertices");
    CycleCertificate cert;
    for (const auto& v : c) {
      if (!v.is_number_unsigned()) throw UsageError("cycle vertices must be nonnegative integers");
      cert.vertices.push_back(v.get<std::size_t>());
    }
    p.cycles.push_back(std::move(cert));
  }
  p.k = j.value("k", static_cast<int>(p.cycles.size()));
  return p;
}

}  // namespace degsum

#endif  // DEGSUM_CERTIFICATES_HPP
