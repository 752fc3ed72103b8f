#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "degsum/degsum.hpp"

using namespace degsum;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(EdgeListTest, ParsesWithCommentsAndBlankLines) {
  const Graph g = parse("# triangle plus isolated vertex\n4 3\n0 1\n\n1 2  # middle\n2 0\n");
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_EQ(g.degree(3), 0);
}

TEST(EdgeListTest, ReportsLineNumbers) {
  EXPECT_EQ(error_line("3 2\n0 1\n1 5\n"), 3u);
  EXPECT_EQ(error_line("3 1\n0 0\n"), 2u);
  EXPECT_EQ(error_line("3 1\n0 x\n"), 2u);
  EXPECT_EQ(error_line("3 1\n0 1 2\n"), 2u);
  EXPECT_EQ(error_line("3\n"), 1u);
  EXPECT_EQ(error_line("3 2\n0 1\n"), 2u);
  EXPECT_EQ(error_line("# only a comment\n"), 1u);
}

TEST(EdgeListTest, ParseErrorIsUsageError) {
  EXPECT_THROW(parse("2 1\n0 7\n"), UsageError);
}

TEST(EdgeListTest, WriterIsSortedAndRoundTrips) {
  const Graph g = Graph(4, std::vector<Edge>{{3, 2}, {1, 0}, {2, 0}});
  EXPECT_EQ(write_edge_list(g), "4 3\n0 1\n0 2\n2 3\n");
  EXPECT_EQ(write_edge_list(parse(write_edge_list(g))), write_edge_list(g));
}

TEST(EdgeListTest, HashIsStableAndSensitive) {
  const Graph k34 = complete_bipartite(3, 4);
  EXPECT_EQ(graph_hash(k34), "0cfacef65f0cd675");
  EXPECT_NE(graph_hash(k34), graph_hash(complete_bipartite(4, 3)));
  EXPECT_EQ(graph_hash(k34).size(), 16u);
}

TEST(DimacsTest, ParsesOneBasedEdges) {
  const Graph g = parse("c a path\np edge 3 2\ne 1 2\ne 2 3\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(DimacsTest, ReportsLineNumbers) {
  EXPECT_EQ(error_line("p edge 3 1\ne 1 4\n"), 2u);
  EXPECT_EQ(error_line("c x\ne 1 2\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 1\nq 1 2\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 1\np edge 3 1\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 1\ne 2 2\n"), 2u);
}

TEST(GraphFileTest, ReadsFileAndRejectsMissing) {
  const auto path = std::filesystem::temp_directory_path() / "degsum_io_test.el";
  {
    std::ofstream out(path);
    out << write_edge_list(petersen_graph());
  }
  EXPECT_EQ(graph_hash(read_graph_file(path.string())), graph_hash(petersen_graph()));
  std::filesystem::remove(path);
  EXPECT_THROW(read_graph_file(path.string()), UsageError);
}
