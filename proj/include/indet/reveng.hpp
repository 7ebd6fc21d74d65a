// Reverse engineering a prefix table: given a feasible array y, build the
// lexicographically least indeterminate string on a minimum alphabet whose
// prefix table is y.
//
// Outline (each step is observable through InferenceTrace):
//   1. Walk the positive edges (i, j) in ascending order.
//   2. Skip the edge if x[i] and x[j] already share a symbol.
//   3. Otherwise collect candidates: every symbol of x[i] could go to j and
//      every symbol of x[j] could go to i; order them by symbol.
//   4. Take the first candidate whose symbol is not forbidden at its target
//      (forbidden = already held by a negative neighbour), and forbid it at
//      the target's negative neighbours.
//   5. If no candidate is allowed, put a fresh symbol on both endpoints.
//   6. Fill each still-empty position, in ascending order, with the least
//      symbol absent from its negative neighbours.

#ifndef INDET_REVENG_HPP_
#define INDET_REVENG_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "indet/prefix_graph.hpp"
#include "indet/strings.hpp"

namespace indet {

/// Per-vertex set of forbidden symbols, grown on demand since the alphabet
/// size is only known once inference ends.
class ForbiddenMatrix {
 public:
  explicit ForbiddenMatrix(std::size_t vertex_count) : rows_(vertex_count) {}

  bool is_forbidden(Vertex v, Symbol s) const;
  void forbid(Vertex v, Symbol s);

 private:
  std::vector<std::vector<std::uint64_t>> rows_;
};

namespace trace {

struct EdgeConsidered { Edge edge; };
struct EdgeSkipped { Edge edge; };
struct CandidateRejected { Symbol symbol; Vertex target; };
struct CandidateAccepted { Symbol symbol; Vertex target; };
struct FreshSymbol { Symbol symbol; Edge edge; };
/// Emitted after every assignment whose vertex has negative neighbours.
struct Forbidden { Symbol symbol; Vertex source; std::vector<Vertex> at; };
struct IsolatedFilled { Vertex vertex; Symbol symbol; };

using Event = std::variant<EdgeConsidered, EdgeSkipped, CandidateRejected,
                           CandidateAccepted, FreshSymbol, Forbidden,
                           IsolatedFilled>;

}  // namespace trace

using InferenceTrace = std::vector<trace::Event>;

/// Mutable working state of one inference run.
struct InferenceState {
  explicit InferenceState(const PrefixGraph& graph)
      : g(&graph),
        x(graph.vertex_count()),
        forbidden(graph.vertex_count()) {}

  const PrefixGraph* g;
  /// x[v-1] is the (possibly empty) sorted symbol list assigned to v so far.
  std::vector<std::vector<Symbol>> x;
  /// Highest rank introduced; symbols are introduced densely from 1.
  Symbol::Rank lambda_max = 0;
  ForbiddenMatrix forbidden;
  InferenceTrace* sink = nullptr;
};

/// Adds `s` to x[v] in order and forbids it at every negative neighbour of v.
void assign_symbol(Vertex v, Symbol s, InferenceState& state);

/// Marks `s` forbidden at every negative neighbour of `v`. Idempotent.
void update_forbidden(Vertex v, Symbol s, InferenceState& state);

/// Least rank in 1..lambda_max+1 held by none of v's negative neighbours.
/// A result of lambda_max+1 means a new symbol is needed.
Symbol least(Vertex v, const InferenceState& state);

IndeterminateString infer(const FeasibleArray& y);
IndeterminateString infer(const PrefixGraph& g, InferenceTrace* sink = nullptr);

/// Renders a trace, one event per line, preceded by a version header and
/// followed by the result line. The layout is stable and covered by golden
/// tests.
std::string format_trace(const InferenceTrace& events,
                         const IndeterminateString& result);

}  // namespace indet

#endif  // INDET_REVENG_HPP_
