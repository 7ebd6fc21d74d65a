// Brute-force references for small instances. Nothing here is clever on
// purpose: the answers come from exhaustive enumeration and are used to check
// the graph-based routines.

#ifndef INDET_ORACLE_HPP_
#define INDET_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "indet/strings.hpp"

namespace indet::oracle {

struct EnumerationBudget {
  std::size_t max_n = 5;
  std::size_t max_sigma = 5;
  std::uint64_t max_candidates = 50'000'000;
};

/// The search would exceed its budget; no answer is given.
struct BudgetExceeded {
  std::uint64_t required_candidates = 0;  // 0 when n or sigma is over the cap
};

/// Yields every feasible array of length n exactly once, in lexicographic
/// order. There are n! of them for n >= 1 and one (empty) for n = 0.
class FeasibleEnumerator {
 public:
  explicit FeasibleEnumerator(std::size_t n);

  std::optional<FeasibleArray> next();

 private:
  std::size_t n_;
  std::vector<std::int64_t> current_;
  bool done_ = false;
};

std::vector<FeasibleArray> enumerate_feasible(std::size_t n);

/// n! for n >= 1, 1 for n = 0.
std::uint64_t feasible_count(std::size_t n);

struct LexLeast {
  IndeterminateString string;
  std::size_t alphabet_size = 0;
};

/// For sigma = 1, 2, ... tries every string whose letters are nonempty
/// subsets of {1..sigma}; the first sigma with a match is the minimum alphabet
/// size and the least match there (letter order lifted to strings) is
/// returned.
std::variant<LexLeast, BudgetExceeded> brute_force_lex_least(
    const FeasibleArray& y, const EnumerationBudget& budget = {});

/// Whether some regular string has prefix table y. Candidates are regular
/// strings over {1..n} in first-use (restricted growth) form, which covers
/// every regular string up to renaming.
std::variant<bool, BudgetExceeded> brute_force_is_regular(
    const FeasibleArray& y, const EnumerationBudget& budget = {});

}  // namespace indet::oracle

#endif  // INDET_ORACLE_HPP_
