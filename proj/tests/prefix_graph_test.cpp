#include "indet/prefix_graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "indet/oracle.hpp"
#include "test_util.hpp"

namespace indet {
namespace {

using testing::S;
using testing::Y;

std::vector<Edge> edges(std::initializer_list<std::pair<Vertex, Vertex>> list) {
  std::vector<Edge> out;
  for (auto [u, v] : list) out.push_back({u, v});
  return out;
}

std::vector<Edge> to_vector(std::span<const Edge> s) { return {s.begin(), s.end()}; }

TEST(BuildPrefixGraph, Example50210) {
  const auto g = build_prefix_graph(Y("5 0 2 1 0"));
  EXPECT_EQ(to_vector(g.positive_edges()), edges({{1, 3}, {1, 4}, {2, 4}}));
  EXPECT_EQ(to_vector(g.negative_edges()), edges({{1, 2}, {1, 5}, {2, 5}, {3, 5}}));
  auto n5 = g.negative_neighbors(5);
  EXPECT_EQ(std::vector<Vertex>(n5.begin(), n5.end()), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(g.negative_neighbors(4).empty());
}

TEST(BuildPrefixGraph, Example82014011) {
  const auto g = build_prefix_graph(Y("8 2 0 1 4 0 1 1"));
  EXPECT_EQ(to_vector(g.positive_edges()),
            edges({{1, 2}, {1, 4}, {1, 5}, {1, 7}, {1, 8}, {2, 3}, {2, 6}, {3, 7}, {4, 8}}));
  EXPECT_EQ(to_vector(g.negative_edges()), edges({{1, 3}, {1, 6}, {2, 5}, {2, 8}, {3, 4}}));
}

TEST(BuildPrefixGraph, Example82401300) {
  const auto g = build_prefix_graph(Y("8 2 4 0 1 3 0 0"));
  EXPECT_EQ(to_vector(g.positive_edges()),
            edges({{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 7}, {3, 5},
                   {3, 8}, {4, 6}}));
  EXPECT_EQ(to_vector(g.negative_edges()),
            edges({{1, 4}, {1, 7}, {1, 8}, {2, 6}, {3, 4}, {5, 7}}));
}

TEST(BuildPrefixGraph, ExtremalFamilies) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<std::int64_t> zeros(n, 0), descending(n);
    zeros[0] = static_cast<std::int64_t>(n);
    for (std::size_t i = 0; i < n; ++i) descending[i] = static_cast<std::int64_t>(n - i);
    const auto sparse = build_prefix_graph(validate_feasible(zeros));
    EXPECT_TRUE(sparse.positive_edges().empty());
    EXPECT_EQ(sparse.negative_edges().size(), n - 1);
    const auto dense = build_prefix_graph(validate_feasible(descending));
    EXPECT_EQ(dense.positive_edges().size(), n * (n - 1) / 2);
    EXPECT_TRUE(dense.negative_edges().empty());
  }
  EXPECT_EQ(to_vector(build_prefix_graph(Y("4 0 0 0")).negative_edges()),
            edges({{1, 2}, {1, 3}, {1, 4}}));
}

// Structural invariants over every feasible array of length <= 7.
TEST(BuildPrefixGraph, InvariantsExhaustive) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& y : oracle::enumerate_feasible(n)) {
      const auto g = build_prefix_graph(y);
      const auto pos = g.positive_edges();
      const auto neg = g.negative_edges();
      ASSERT_TRUE(std::is_sorted(pos.begin(), pos.end()));
      ASSERT_TRUE(std::is_sorted(neg.begin(), neg.end()));
      ASSERT_EQ(std::adjacent_find(pos.begin(), pos.end()), pos.end());

      std::size_t expected_pos = 0, expected_neg = 0;
      for (std::size_t i = 2; i <= n; ++i) {
        expected_pos += y.at(i);
        if (i + y.at(i) <= n) ++expected_neg;
      }
      ASSERT_EQ(pos.size(), expected_pos);
      ASSERT_EQ(neg.size(), expected_neg);
      ASSERT_LE(neg.size(), n == 0 ? 0 : n - 1);
      ASSERT_LE(pos.size(), n * (n - 1) / 2);
      if (n >= 1) {
        ASSERT_GE(pos.size() + neg.size(), n - 1);
      }

      std::set<Edge> pos_set(pos.begin(), pos.end());
      for (const auto& e : pos) {
        ASSERT_LT(e.u, e.v);
        ASSERT_GE(y.at(e.v - e.u + 1), e.u);
      }
      for (const auto& e : neg) {
        ASSERT_LT(e.u, e.v);
        ASSERT_EQ(y.at(e.v - e.u + 1), e.u - 1);
        ASSERT_FALSE(pos_set.count(e));
      }

      std::set<Edge> neg_set(neg.begin(), neg.end());
      for (Vertex v = 1; v <= n; ++v) {
        const auto adj = g.negative_neighbors(v);
        ASSERT_TRUE(std::is_sorted(adj.begin(), adj.end()));
        for (Vertex w : adj) {
          ASSERT_TRUE(neg_set.count({std::min(v, w), std::max(v, w)}));
        }
      }
      std::size_t degree_sum = 0;
      for (Vertex v = 1; v <= n; ++v) degree_sum += g.negative_neighbors(v).size();
      ASSERT_EQ(degree_sum, 2 * neg.size());
    }
  }
}

TEST(IsRegular, Examples) {
  EXPECT_TRUE(is_regular(Y("8 0 1 0 3 0 1 0")).regular);
  const auto r = is_regular(Y("5 0 2 1 0"));
  EXPECT_FALSE(r.regular);
  EXPECT_EQ(r.component_count, 2u);
  EXPECT_EQ(r.component, (std::vector<std::size_t>{1, 1, 1, 1, 2}));
  EXPECT_TRUE(is_regular(Y("4 0 0 0")).regular);
  EXPECT_TRUE(is_regular(Y({})).regular);
}

TEST(IsRegular, AgreesWithBruteForceUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& y : oracle::enumerate_feasible(n)) {
      const auto brute = oracle::brute_force_is_regular(y);
      ASSERT_TRUE(std::holds_alternative<bool>(brute));
      ASSERT_EQ(is_regular(y).regular, std::get<bool>(brute)) << format_array(y);
    }
  }
}

TEST(RegularStringFromComponents, Examples) {
  auto witness = [](std::string_view text) {
    const auto g = build_prefix_graph(Y(text));
    return regular_string_from_components(g, is_regular(g));
  };
  EXPECT_EQ(witness("8 0 1 0 3 0 1 0"), S("a b a c a b a d"));
  EXPECT_EQ(witness("4 0 0 0"), S("a b c d"));
  EXPECT_EQ(witness("4 3 2 1"), S("a a a a"));

  const auto g = build_prefix_graph(Y("5 0 2 1 0"));
  EXPECT_THROW(regular_string_from_components(g, is_regular(g)), std::invalid_argument);
}

TEST(RegularStringFromComponents, ReproducesTableWheneverRegular) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& y : oracle::enumerate_feasible(n)) {
      const auto g = build_prefix_graph(y);
      const auto r = is_regular(g);
      if (!r.regular) continue;
      const auto x = regular_string_from_components(g, r);
      ASSERT_TRUE(x.is_regular());
      ASSERT_EQ(compute_prefix_table(x), y) << format_array(y);
    }
  }
}

TEST(EdgeLabelString, Examples) {
  // Edges (1,3),(1,4),(2,4) are ranks 1,2,3; the loop at 5 is rank 4.
  EXPECT_EQ(edge_label_string(build_prefix_graph(Y("5 0 2 1 0"))),
            S("{a,b} c a {b,c} d"));
  EXPECT_EQ(edge_label_string(build_prefix_graph(Y("4 0 0 0"))), S("a b c d"));
  const auto y = Y("4 3 2 1");
  EXPECT_TRUE(verify_prefix_table(edge_label_string(build_prefix_graph(y)), y).ok);
}

TEST(EdgeLabelString, ReproducesTableUpToSeven) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& y : oracle::enumerate_feasible(n)) {
      ASSERT_EQ(compute_prefix_table(edge_label_string(build_prefix_graph(y))), y)
          << format_array(y);
    }
  }
}

TEST(IsolatedVertices, Examples) {
  EXPECT_EQ(isolated_positive_vertices(Y("5 0 2 1 0"), true), (std::vector<Vertex>{5}));
  EXPECT_EQ(isolated_positive_vertices(Y("8 0 1 0 3 0 1 0"), true),
            (std::vector<Vertex>{4, 8}));
  EXPECT_EQ(isolated_positive_vertices(Y({1}), true), (std::vector<Vertex>{1}));
  EXPECT_EQ(isolated_positive_vertices(Y("4 0 0 0"), true),
            (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_TRUE(isolated_positive_vertices(Y("4 3 2 1"), true).empty());
}

TEST(IsolatedVertices, TwoWaysAgreeUpToSeven) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& y : oracle::enumerate_feasible(n)) {
      ASSERT_EQ(isolated_by_conditions(y), isolated_by_degree(build_prefix_graph(y)))
          << format_array(y);
    }
  }
}

TEST(ExportGraph, Json) {
  const auto g = build_prefix_graph(Y("5 0 2 1 0"));
  EXPECT_EQ(export_graph(g, GraphFormat::kJson, EdgeSign::kBoth),
            "{\"n\":5,\"pos\":[[1,3],[1,4],[2,4]],\"neg\":[[1,2],[1,5],[2,5],[3,5]]}\n");
  EXPECT_EQ(export_graph(build_prefix_graph(Y("8 2 0 1 4 0 1 1")), GraphFormat::kJson,
                         EdgeSign::kPositive),
            "{\"n\":8,\"pos\":[[1,2],[1,4],[1,5],[1,7],[1,8],[2,3],[2,6],[3,7],[4,8]]}\n");
  EXPECT_EQ(export_graph(g, GraphFormat::kJson, EdgeSign::kNegative),
            "{\"n\":5,\"neg\":[[1,2],[1,5],[2,5],[3,5]]}\n");
}

TEST(ExportGraph, Dot) {
  EXPECT_EQ(export_graph(build_prefix_graph(Y("4 0 0 0")), GraphFormat::kDot,
                         EdgeSign::kPositive),
            "graph prefix_graph {\n  1;\n  2;\n  3;\n  4;\n}\n");
  EXPECT_EQ(export_graph(build_prefix_graph(Y("2 1")), GraphFormat::kDot, EdgeSign::kBoth),
            "graph prefix_graph {\n  1;\n  2;\n  1 -- 2;\n}\n");
  EXPECT_EQ(export_graph(build_prefix_graph(Y("2 0")), GraphFormat::kDot, EdgeSign::kBoth),
            "graph prefix_graph {\n  1;\n  2;\n  1 -- 2 [style=dashed];\n}\n");
}

TEST(ExportGraph, UnknownFlags) {
  EXPECT_THROW(parse_graph_format("svg"), std::invalid_argument);
  EXPECT_THROW(parse_edge_sign("zero"), std::invalid_argument);
  EXPECT_EQ(parse_graph_format("json"), GraphFormat::kJson);
  EXPECT_EQ(parse_edge_sign("negative"), EdgeSign::kNegative);
}

}  // namespace
}  // namespace indet
