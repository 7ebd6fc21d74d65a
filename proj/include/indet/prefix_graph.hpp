// The prefix graph of a feasible array y[1..n]: vertices are positions 1..n.
// For each i in 2..n,
//   positive edges (h, i+h-1) for h in 1..y[i]   (positions forced to match)
//   negative edge  (1+y[i], i+y[i]) if i+y[i] <= n (positions forced apart)
// The two edge sets are disjoint.

#ifndef INDET_PREFIX_GRAPH_HPP_
#define INDET_PREFIX_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indet/strings.hpp"

namespace indet {

using Vertex = std::size_t;  // 1-based

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class PrefixGraph {
 public:
  PrefixGraph() = default;

  std::size_t vertex_count() const { return n_; }

  /// Sorted ascending by (u, v).
  std::span<const Edge> positive_edges() const { return positive_; }
  std::span<const Edge> negative_edges() const { return negative_; }

  /// Ascending negative-edge neighbourhood of v.
  std::span<const Vertex> negative_neighbors(Vertex v) const;

 private:
  friend PrefixGraph build_prefix_graph(const FeasibleArray& y);

  std::size_t n_ = 0;
  std::vector<Edge> positive_;
  std::vector<Edge> negative_;
  std::vector<std::vector<Vertex>> negative_adj_;
};

/// Edges come out already sorted: both kinds are bucketed by their smaller
/// endpoint while scanning i upwards, and within a bucket the larger endpoint
/// grows with i.
PrefixGraph build_prefix_graph(const FeasibleArray& y);

struct Regularity {
  bool regular = false;
  /// component[v-1] is the component of v in the positive subgraph. Components
  /// are numbered 1, 2, ... in order of their smallest vertex.
  std::vector<std::size_t> component;
  std::size_t component_count = 0;
};

/// y is the prefix table of a regular string iff no negative edge lies inside
/// a connected component of the positive subgraph.
Regularity is_regular(const PrefixGraph& g);
Regularity is_regular(const FeasibleArray& y);

/// One symbol per positive component (component k gets rank k). Throws
/// std::invalid_argument if `r` is not regular.
IndeterminateString regular_string_from_components(const PrefixGraph& g,
                                                   const Regularity& r);

/// Each non-isolated vertex gets the set of its incident positive edges as its
/// letter; isolated vertices get a private loop symbol. Edge k in sorted order
/// is rank k; loops follow after the last edge in vertex order. The result
/// always has prefix table y, but uses a large alphabet.
IndeterminateString edge_label_string(const PrefixGraph& g);

/// Vertices without positive edges, characterised directly from y:
///   (a) y[i] = 0 or i = 1,
///   (b) y[j] < i for every j in 2..n,
///   (c) j + y[j] <= i for every j in 2..i-1.
std::vector<Vertex> isolated_by_conditions(const FeasibleArray& y);

/// Vertices of degree zero in the positive subgraph.
std::vector<Vertex> isolated_by_degree(const PrefixGraph& g);

/// The condition-based set; with `cross_check`, also computes the degree-based
/// set and throws std::logic_error if the two differ.
std::vector<Vertex> isolated_positive_vertices(const FeasibleArray& y,
                                               bool cross_check = false);

enum class GraphFormat { kDot, kJson };
enum class EdgeSign { kPositive, kNegative, kBoth };

/// Throw std::invalid_argument on unknown names.
GraphFormat parse_graph_format(std::string_view name);
EdgeSign parse_edge_sign(std::string_view name);

/// DOT: undirected graph, every vertex declared, negative edges dashed.
/// JSON: {"n":N,"pos":[[u,v],...],"neg":[[u,v],...]} on one line; a key is
/// omitted when its sign is not selected.
std::string export_graph(const PrefixGraph& g, GraphFormat format,
                         EdgeSign sign);

}  // namespace indet

#endif  // INDET_PREFIX_GRAPH_HPP_
