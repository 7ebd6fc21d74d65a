#include "indet/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace indet::oracle {
namespace {

using Mask = std::uint32_t;

// Prefix-table test on bitmask letters, independent of the Letter type.
bool has_prefix_table(const std::vector<Mask>& x,
                      std::span<const std::size_t> y) {
  const std::size_t n = x.size();
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t len = 0;
    while (i + len < n && (x[len] & x[i + len]) != 0) ++len;
    if (len != y[i]) return false;
  }
  return true;
}

std::vector<Symbol> symbols_of(Mask m) {
  std::vector<Symbol> out;
  for (Symbol::Rank r = 1; m != 0; ++r, m >>= 1) {
    if ((m & 1U) != 0) out.emplace_back(r);
  }
  return out;
}

// Position of each mask in the letter order, for cheap string comparison.
std::vector<std::size_t> letter_order_keys(std::size_t sigma) {
  const Mask count = (Mask{1} << sigma) - 1;
  std::vector<Mask> masks(count);
  std::iota(masks.begin(), masks.end(), Mask{1});
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    const auto sa = symbols_of(a);
    const auto sb = symbols_of(b);
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
  });
  std::vector<std::size_t> key(count + 1, 0);
  for (std::size_t k = 0; k < masks.size(); ++k) key[masks[k]] = k;
  return key;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t result = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

}  // namespace

FeasibleEnumerator::FeasibleEnumerator(std::size_t n)
    : n_(n), current_(n, 0) {
  if (n > 0) current_[0] = static_cast<std::int64_t>(n);
}

std::optional<FeasibleArray> FeasibleEnumerator::next() {
  if (done_) return std::nullopt;
  FeasibleArray out = validate_feasible(current_);
  // Odometer: the last position moves fastest; position i (1-based) ranges
  // over 0..n-i+1.
  done_ = true;
  for (std::size_t k = n_; k >= 2; --k) {
    const auto bound = static_cast<std::int64_t>(n_ - k + 1);
    if (current_[k - 1] < bound) {
      ++current_[k - 1];
      done_ = false;
      break;
    }
    current_[k - 1] = 0;
  }
  return out;
}

std::vector<FeasibleArray> enumerate_feasible(std::size_t n) {
  std::vector<FeasibleArray> out;
  FeasibleEnumerator it(n);
  while (auto y = it.next()) out.push_back(std::move(*y));
  return out;
}

std::uint64_t feasible_count(std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t k = 2; k <= n; ++k) count *= k;
  return count;
}

std::variant<LexLeast, BudgetExceeded> brute_force_lex_least(
    const FeasibleArray& y, const EnumerationBudget& budget) {
  const std::size_t n = y.size();
  if (n > budget.max_n) return BudgetExceeded{};
  if (n == 0) return LexLeast{IndeterminateString{}, 0};

  std::uint64_t spent = 0;
  for (std::size_t sigma = 1; sigma <= budget.max_sigma && sigma < 32; ++sigma) {
    const Mask top = (Mask{1} << sigma) - 1;
    const std::uint64_t needed = saturating_pow(top, n);
    if (needed > budget.max_candidates || spent + needed > budget.max_candidates) {
      return BudgetExceeded{needed == UINT64_MAX ? needed : spent + needed};
    }
    spent += needed;

    const auto key = letter_order_keys(sigma);
    auto less = [&key](const std::vector<Mask>& a, const std::vector<Mask>& b) {
      return std::lexicographical_compare(
          a.begin(), a.end(), b.begin(), b.end(),
          [&key](Mask p, Mask q) { return key[p] < key[q]; });
    };

    std::optional<std::vector<Mask>> best;
    std::vector<Mask> x(n, 1);
    while (true) {
      if (has_prefix_table(x, y.values()) && (!best || less(x, *best))) best = x;
      std::size_t k = n;
      while (k > 0 && x[k - 1] == top) x[--k] = 1;
      if (k == 0) break;
      ++x[k - 1];
    }

    if (best) {
      std::vector<Letter> letters;
      letters.reserve(n);
      for (Mask m : *best) letters.emplace_back(symbols_of(m));
      return LexLeast{IndeterminateString(std::move(letters)), sigma};
    }
  }
  return BudgetExceeded{};
}

std::variant<bool, BudgetExceeded> brute_force_is_regular(
    const FeasibleArray& y, const EnumerationBudget& budget) {
  const std::size_t n = y.size();
  if (n > budget.max_n || n >= 32) return BudgetExceeded{};
  if (n == 0) return true;

  // Restricted growth strings: x[0] = 0 and x[k] <= 1 + max(x[0..k-1]).
  std::vector<Mask> x(n, 1);
  std::vector<std::size_t> label(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  std::uint64_t spent = 0;
  while (true) {
    if (++spent > budget.max_candidates) return BudgetExceeded{spent};
    for (std::size_t k = 0; k < n; ++k) x[k] = Mask{1} << label[k];
    if (has_prefix_table(x, y.values())) return true;

    std::size_t k = n - 1;
    while (k > 0 && label[k] == prefix_max[k - 1] + 1) --k;
    if (k == 0) return false;
    ++label[k];
    prefix_max[k] = std::max(prefix_max[k - 1], label[k]);
    for (std::size_t j = k + 1; j < n; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[k];
    }
  }
}

}  // namespace indet::oracle
