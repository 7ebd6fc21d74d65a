#include "indet/reveng.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "indet/text.hpp"

namespace indet {
namespace {

constexpr std::size_t kWordBits = 64;

void emit(InferenceState& state, trace::Event event) {
  if (state.sink != nullptr) state.sink->push_back(std::move(event));
}

bool share_symbol(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

// Symbols of x[i] are offered to j and those of x[j] to i, merged by symbol.
// The two lists are disjoint because x[i] and x[j] do not match here.
// Returns false when every candidate is forbidden.
bool assign_candidate(InferenceState& state, const Edge& e) {
  const auto& xi = state.x[e.u - 1];
  const auto& xj = state.x[e.v - 1];
  std::size_t a = 0, b = 0;
  while (a < xi.size() || b < xj.size()) {
    Symbol symbol;
    Vertex target;
    if (b == xj.size() || (a < xi.size() && xi[a] < xj[b])) {
      symbol = xi[a++];
      target = e.v;
    } else {
      assert(a == xi.size() || xj[b] < xi[a]);
      symbol = xj[b++];
      target = e.u;
    }
    if (state.forbidden.is_forbidden(target, symbol)) {
      emit(state, trace::CandidateRejected{symbol, target});
      continue;
    }
    emit(state, trace::CandidateAccepted{symbol, target});
    assign_symbol(target, symbol, state);
    return true;
  }
  return false;
}

}  // namespace

bool ForbiddenMatrix::is_forbidden(Vertex v, Symbol s) const {
  const auto& row = rows_.at(v - 1);
  const std::size_t bit = s.rank() - 1;
  const std::size_t word = bit / kWordBits;
  return word < row.size() && ((row[word] >> (bit % kWordBits)) & 1U) != 0;
}

void ForbiddenMatrix::forbid(Vertex v, Symbol s) {
  auto& row = rows_.at(v - 1);
  const std::size_t bit = s.rank() - 1;
  const std::size_t word = bit / kWordBits;
  if (word >= row.size()) row.resize(word + 1, 0);
  row[word] |= std::uint64_t{1} << (bit % kWordBits);
}

void update_forbidden(Vertex v, Symbol s, InferenceState& state) {
  const auto neighbours = state.g->negative_neighbors(v);
  if (neighbours.empty()) return;
  for (Vertex w : neighbours) state.forbidden.forbid(w, s);
  if (state.sink != nullptr) {
    emit(state, trace::Forbidden{s, v, {neighbours.begin(), neighbours.end()}});
  }
}

void assign_symbol(Vertex v, Symbol s, InferenceState& state) {
  auto& letter = state.x[v - 1];
  letter.insert(std::upper_bound(letter.begin(), letter.end(), s), s);
  update_forbidden(v, s, state);
}

Symbol least(Vertex v, const InferenceState& state) {
  std::vector<bool> taken(state.lambda_max + 1, false);
  for (Vertex w : state.g->negative_neighbors(v)) {
    for (Symbol s : state.x[w - 1]) taken[s.rank() - 1] = true;
  }
  Symbol::Rank rank = 1;
  while (rank <= state.lambda_max && taken[rank - 1]) ++rank;
  return Symbol(rank);
}

IndeterminateString infer(const PrefixGraph& g, InferenceTrace* sink) {
  InferenceState state(g);
  state.sink = sink;

  for (const Edge& e : g.positive_edges()) {
    emit(state, trace::EdgeConsidered{e});
    if (share_symbol(state.x[e.u - 1], state.x[e.v - 1])) {
      emit(state, trace::EdgeSkipped{e});
      continue;
    }
    if (!assign_candidate(state, e)) {
      const Symbol fresh(++state.lambda_max);
      emit(state, trace::FreshSymbol{fresh, e});
      assign_symbol(e.u, fresh, state);
      assign_symbol(e.v, fresh, state);
    }
  }

  // Positions left empty are exactly the vertices without positive edges.
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (!state.x[v - 1].empty()) continue;
    const Symbol s = least(v, state);
    state.lambda_max = std::max(state.lambda_max, s.rank());
    state.x[v - 1].push_back(s);
    emit(state, trace::IsolatedFilled{v, s});
  }

  std::vector<Letter> letters;
  letters.reserve(state.x.size());
  for (auto& symbols : state.x) letters.emplace_back(std::move(symbols));
  return IndeterminateString(std::move(letters));
}

IndeterminateString infer(const FeasibleArray& y) {
  return infer(build_prefix_graph(y));
}

std::string format_trace(const InferenceTrace& events,
                         const IndeterminateString& result) {
  std::ostringstream out;
  out << "# reveng trace v1\n";
  for (const auto& event : events) {
    std::visit(
        [&out](const auto& ev) {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, trace::EdgeConsidered>) {
            out << "edge " << ev.edge.u << ' ' << ev.edge.v << '\n';
          } else if constexpr (std::is_same_v<T, trace::EdgeSkipped>) {
            out << "  skip (already match)\n";
          } else if constexpr (std::is_same_v<T, trace::CandidateRejected>) {
            out << "  reject " << format_symbol(ev.symbol) << " -> "
                << ev.target << " (forbidden)\n";
          } else if constexpr (std::is_same_v<T, trace::CandidateAccepted>) {
            out << "  accept " << format_symbol(ev.symbol) << " -> "
                << ev.target << '\n';
          } else if constexpr (std::is_same_v<T, trace::FreshSymbol>) {
            out << "  fresh " << format_symbol(ev.symbol) << " -> "
                << ev.edge.u << ' ' << ev.edge.v << '\n';
          } else if constexpr (std::is_same_v<T, trace::Forbidden>) {
            out << "  forbid " << format_symbol(ev.symbol) << " at";
            for (Vertex v : ev.at) out << ' ' << v;
            out << " (from " << ev.source << ")\n";
          } else if constexpr (std::is_same_v<T, trace::IsolatedFilled>) {
            out << "least " << ev.vertex << " -> " << format_symbol(ev.symbol)
                << '\n';
          }
        },
        event);
  }
  out << "result " << format_string(result) << '\n';
  return out.str();
}

}  // namespace indet
