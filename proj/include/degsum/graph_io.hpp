#ifndef DEGSUM_GRAPH_IO_HPP
#define DEGSUM_GRAPH_IO_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "degsum/errors.hpp"
#include "degsum/graph.hpp"

namespace degsum {

namespace detail {

inline std::string strip_comment(const std::string& line, char marker) {
  const auto pos = line.find(marker);
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

inline long long read_count(std::istringstream& in, const char* what, std::size_t line) {
  long long value = 0;
  if (!(in >> value)) throw ParseError(std::string("expected ") + what, line);
  if (value < 0) throw ParseError(std::string(what) + " must be nonnegative", line);
  return value;
}

inline void expect_end(std::istringstream& in, std::size_t line) {
  std::string extra;
  if (in >> extra) throw ParseError("unexpected token '" + extra + "'", line);
}

}  // namespace detail

/// Edge-list format: first line "n m", then m lines "u v" with 0-based
/// endpoints. '#' starts a comment. Duplicate edges collapse.
inline Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  long long n = -1;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = detail::strip_comment(raw, '#');
    if (detail::blank(text)) continue;
    std::istringstream fields(text);
    if (n < 0) {
      n = detail::read_count(fields, "vertex count", line);
      m = detail::read_count(fields, "edge count", line);
      detail::expect_end(fields, line);
      if (n > static_cast<long long>(kMaxVertices))
        throw ParseError("vertex count " + std::to_string(n) + " exceeds capacity", line);
      continue;
    }
    const long long u = detail::read_count(fields, "edge endpoint", line);
    const long long v = detail::read_count(fields, "edge endpoint", line);
    detail::expect_end(fields, line);
    if (u >= n || v >= n) throw ParseError("endpoint out of range", line);
    if (u == v) throw ParseError("self-loop", line);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw ParseError("missing header 'n m'", line == 0 ? 1 : line);
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     line);
  return Graph(static_cast<std::size_t>(n), edges);
}

/// DIMACS: "c ..." comments, "p edge n m", then "e u v" with 1-based endpoints.
inline Graph read_dimacs(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    if (detail::blank(raw)) continue;
    std::istringstream fields(raw);
    std::string tag;
    fields >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError("duplicate problem line", line);
      std::string kind;
      fields >> kind;
      if (kind != "edge" && kind != "col") throw ParseError("expected 'p edge n m'", line);
      n = detail::read_count(fields, "vertex count", line);
      detail::read_count(fields, "edge count", line);
      if (n > static_cast<long long>(kMaxVertices))
        throw ParseError("vertex count " + std::to_string(n) + " exceeds capacity", line);
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw ParseError("edge before problem line", line);
      const long long u = detail::read_count(fields, "edge endpoint", line);
      const long long v = detail::read_count(fields, "edge endpoint", line);
      if (u < 1 || v < 1 || u > n || v > n) throw ParseError("endpoint out of range", line);
      if (u == v) throw ParseError("self-loop", line);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError("unknown line tag '" + tag + "'", line);
  }
  if (n < 0) throw ParseError("missing problem line", line == 0 ? 1 : line);
  return Graph(static_cast<std::size_t>(n), edges);
}

/// Deterministic edge-list text: header, then edges sorted lexicographically.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

/// FNV-1a of the canonical edge-list text, as 16 hex digits.
inline std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : write_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Reads either format; DIMACS is recognized by a leading 'c' or 'p' line.
inline Graph read_graph(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream probe(content);
  std::string first;
  probe >> first;
  std::istringstream again(content);
  if (first == "c" || first == "p") return read_dimacs(again);
  return read_edge_list(again);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

}  // namespace degsum

#endif  // DEGSUM_GRAPH_IO_HPP
