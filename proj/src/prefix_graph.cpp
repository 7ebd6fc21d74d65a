#include "indet/prefix_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "indet/disjoint_set.hpp"
#include "json.hpp"

namespace indet {
namespace {

// Turns bucket sizes into start offsets.
std::size_t exclusive_scan(std::vector<std::size_t>& sizes) {
  std::size_t total = 0;
  for (auto& s : sizes) total += std::exchange(s, total);
  return total;
}

}  // namespace

std::span<const Vertex> PrefixGraph::negative_neighbors(Vertex v) const {
  if (v == 0 || v > n_) throw std::out_of_range("vertex out of range");
  return negative_adj_[v - 1];
}

PrefixGraph build_prefix_graph(const FeasibleArray& y) {
  const std::size_t n = y.size();
  const auto values = y.values();
  // Edges are counting-sorted on the smaller endpoint; within a bucket they
  // arrive with increasing larger endpoint.
  std::vector<std::size_t> pos_start(n, 0), neg_start(n, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    const std::size_t len = values[i - 1];
    if (len > 0) ++pos_start[len - 1];
    if (i + len <= n) ++neg_start[len];
  }
  // pos_start[h - 1] counts i with y[i] = h; bucket h holds those with y[i] >= h.
  for (std::size_t h = n; h-- > 1;) pos_start[h - 1] += pos_start[h];

  PrefixGraph g;
  g.n_ = n;
  g.positive_.resize(exclusive_scan(pos_start));
  g.negative_.resize(exclusive_scan(neg_start));
  for (std::size_t i = 2; i <= n; ++i) {
    const std::size_t len = values[i - 1];
    for (std::size_t h = 1; h <= len; ++h) g.positive_[pos_start[h - 1]++] = {h, i + h - 1};
    if (i + len <= n) g.negative_[neg_start[len]++] = {len + 1, i + len};
  }
  // Scanning sorted edges keeps each list ascending: all (w, x) with w < x
  // precede every (x, z).
  g.negative_adj_.assign(n, {});
  for (const auto& e : g.negative_) {
    g.negative_adj_[e.u - 1].push_back(e.v);
    g.negative_adj_[e.v - 1].push_back(e.u);
  }
  return g;
}

Regularity is_regular(const PrefixGraph& g) {
  const std::size_t n = g.vertex_count();
  DisjointSet sets(n);
  for (const auto& e : g.positive_edges()) sets.unite(e.u - 1, e.v - 1);

  Regularity r;
  r.component.assign(n, 0);
  std::vector<std::size_t> id_of_root(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (id_of_root[root] == 0) id_of_root[root] = ++r.component_count;
    r.component[v] = id_of_root[root];
  }
  r.regular = std::none_of(
      g.negative_edges().begin(), g.negative_edges().end(), [&](const Edge& e) {
        return r.component[e.u - 1] == r.component[e.v - 1];
      });
  return r;
}

Regularity is_regular(const FeasibleArray& y) {
  return is_regular(build_prefix_graph(y));
}

IndeterminateString regular_string_from_components(const PrefixGraph& g,
                                                   const Regularity& r) {
  if (!r.regular) {
    throw std::invalid_argument("array is not the prefix table of a regular string");
  }
  if (r.component.size() != g.vertex_count()) {
    throw std::invalid_argument("component labelling does not fit the graph");
  }
  std::vector<Letter> letters;
  letters.reserve(r.component.size());
  for (auto c : r.component) {
    letters.push_back(Letter::singleton(Symbol(static_cast<Symbol::Rank>(c))));
  }
  return IndeterminateString(std::move(letters));
}

IndeterminateString edge_label_string(const PrefixGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Symbol>> sets(n);
  Symbol::Rank next = 1;
  for (const auto& e : g.positive_edges()) {
    sets[e.u - 1].emplace_back(next);
    sets[e.v - 1].emplace_back(next);
    ++next;
  }
  std::vector<Letter> letters;
  letters.reserve(n);
  for (auto& s : sets) {
    if (s.empty()) s.emplace_back(next++);
    std::sort(s.begin(), s.end());
    letters.emplace_back(std::move(s));
  }
  return IndeterminateString(std::move(letters));
}

std::vector<Vertex> isolated_by_conditions(const FeasibleArray& y) {
  const std::size_t n = y.size();
  const auto values = y.values();
  // (b) holds for i iff i exceeds every y[j], j >= 2.
  std::size_t max_tail = 0;
  for (std::size_t j = 2; j <= n; ++j) max_tail = std::max(max_tail, values[j - 1]);

  std::vector<Vertex> out;
  std::size_t reach = 0;  // max over j in 2..i-1 of j + y[j]
  for (std::size_t i = 1; i <= n; ++i) {
    const bool a = i == 1 || values[i - 1] == 0;
    const bool b = max_tail < i;
    const bool c = reach <= i;
    if (a && b && c) out.push_back(i);
    if (i >= 2) reach = std::max(reach, i + values[i - 1]);
  }
  return out;
}

std::vector<Vertex> isolated_by_degree(const PrefixGraph& g) {
  std::vector<std::size_t> degree(g.vertex_count(), 0);
  for (const auto& e : g.positive_edges()) {
    ++degree[e.u - 1];
    ++degree[e.v - 1];
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < degree.size(); ++v) {
    if (degree[v] == 0) out.push_back(v + 1);
  }
  return out;
}

std::vector<Vertex> isolated_positive_vertices(const FeasibleArray& y,
                                               bool cross_check) {
  auto by_conditions = isolated_by_conditions(y);
  if (cross_check && by_conditions != isolated_by_degree(build_prefix_graph(y))) {
    throw std::logic_error("isolated-vertex characterisation disagrees with degree count");
  }
  return by_conditions;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::kDot;
  if (name == "json") return GraphFormat::kJson;
  throw std::invalid_argument("unknown graph format '" + std::string(name) +
                              "' (expected dot or json)");
}

EdgeSign parse_edge_sign(std::string_view name) {
  if (name == "positive" || name == "pos") return EdgeSign::kPositive;
  if (name == "negative" || name == "neg") return EdgeSign::kNegative;
  if (name == "both") return EdgeSign::kBoth;
  throw std::invalid_argument("unknown edge sign '" + std::string(name) +
                              "' (expected positive, negative or both)");
}

std::string export_graph(const PrefixGraph& g, GraphFormat format,
                         EdgeSign sign) {
  const bool with_pos = sign != EdgeSign::kNegative;
  const bool with_neg = sign != EdgeSign::kPositive;

  if (format == GraphFormat::kJson) {
    auto edge_list = [](std::span<const Edge> edges) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& e : edges) arr.push_back({e.u, e.v});
      return arr;
    };
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    if (with_pos) doc["pos"] = edge_list(g.positive_edges());
    if (with_neg) doc["neg"] = edge_list(g.negative_edges());
    return doc.dump() + "\n";
  }

  std::ostringstream out;
  out << "graph prefix_graph {\n";
  for (std::size_t v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
  if (with_pos) {
    for (const auto& e : g.positive_edges()) {
      out << "  " << e.u << " -- " << e.v << ";\n";
    }
  }
  if (with_neg) {
    for (const auto& e : g.negative_edges()) {
      out << "  " << e.u << " -- " << e.v << " [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace indet
