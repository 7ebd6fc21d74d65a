#include "indet/strings.hpp"

#include <algorithm>
#include <unordered_set>

namespace indet {

Symbol::Symbol(Rank rank) : rank_(rank) {
  if (rank == 0) throw std::invalid_argument("symbol rank must be >= 1");
}

Letter::Letter(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("letter must be nonempty");
  for (std::size_t k = 1; k < symbols_.size(); ++k) {
    if (!(symbols_[k - 1] < symbols_[k])) {
      throw std::invalid_argument("letter symbols must be strictly increasing");
    }
  }
}

Letter Letter::of(std::initializer_list<Symbol::Rank> ranks) {
  std::vector<Symbol> symbols;
  symbols.reserve(ranks.size());
  for (auto r : ranks) symbols.emplace_back(r);
  std::sort(symbols.begin(), symbols.end());
  return Letter(std::move(symbols));
}

bool Letter::contains(Symbol s) const {
  return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

bool letters_match(const Letter& a, const Letter& b) {
  auto lhs = a.symbols();
  auto rhs = b.symbols();
  std::size_t i = 0, j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (lhs[i] == rhs[j]) return true;
    if (lhs[i] < rhs[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::strong_ordering compare_letters(const Letter& a, const Letter& b) {
  auto lhs = a.symbols();
  auto rhs = b.symbols();
  return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(),
                                                rhs.begin(), rhs.end());
}

const Letter& IndeterminateString::at(std::size_t position) const {
  if (position == 0 || position > letters_.size()) {
    throw std::out_of_range("string position out of range");
  }
  return letters_[position - 1];
}

bool IndeterminateString::is_regular() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const Letter& l) { return l.is_singleton(); });
}

std::size_t IndeterminateString::alphabet_size() const {
  std::unordered_set<Symbol::Rank> seen;
  for (const auto& letter : letters_) {
    for (auto s : letter.symbols()) seen.insert(s.rank());
  }
  return seen.size();
}

std::strong_ordering compare_strings(const IndeterminateString& a,
                                     const IndeterminateString& b) {
  auto lhs = a.letters();
  auto rhs = b.letters();
  return std::lexicographical_compare_three_way(
      lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), compare_letters);
}

std::size_t FeasibleArray::at(std::size_t position) const {
  if (position == 0 || position > values_.size()) {
    throw std::out_of_range("array position out of range");
  }
  return values_[position - 1];
}

FeasibleArray validate_feasible(std::span<const std::int64_t> raw) {
  const auto n = static_cast<std::int64_t>(raw.size());
  std::vector<std::size_t> values;
  values.reserve(raw.size());
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t v = raw[static_cast<std::size_t>(i - 1)];
    const auto index = static_cast<std::size_t>(i);
    if (i == 1 && v != n) {
      throw InfeasibleArray(index, "y[1] = " + std::to_string(v) +
                                       " but must equal n = " +
                                       std::to_string(n));
    }
    if (v < 0) {
      throw InfeasibleArray(index, "y[" + std::to_string(i) + "] = " +
                                       std::to_string(v) + " is negative");
    }
    if (i > 1 && v > n - i + 1) {
      throw InfeasibleArray(
          index, "y[" + std::to_string(i) + "] = " + std::to_string(v) +
                     " exceeds n-i+1 = " + std::to_string(n - i + 1));
    }
    values.push_back(static_cast<std::size_t>(v));
  }
  return FeasibleArray(std::move(values));
}

FeasibleArray validate_feasible(std::initializer_list<std::int64_t> raw) {
  return validate_feasible(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

FeasibleArray compute_prefix_table(const IndeterminateString& x) {
  const auto letters = x.letters();
  const std::size_t n = letters.size();
  std::vector<std::size_t> table(n, 0);
  if (n > 0) table[0] = n;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t len = 0;
    while (i + len < n && letters_match(letters[len], letters[i + len])) ++len;
    table[i] = len;
  }
  return FeasibleArray(std::move(table));
}

PrefixTableCheck verify_prefix_table(const IndeterminateString& x,
                                     const FeasibleArray& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("string length " + std::to_string(x.size()) +
                                " differs from array length " +
                                std::to_string(y.size()));
  }
  const auto letters = x.letters();
  const auto values = y.values();
  const std::size_t n = letters.size();
  using Condition = PrefixTableCheck::Condition;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t len = values[i];
    // Feasibility guarantees i + len <= n.
    for (std::size_t k = 0; k < len; ++k) {
      if (!letters_match(letters[k], letters[i + k])) {
        return {false, i + 1, Condition::kPrefixMatch};
      }
    }
    if (i + len < n && letters_match(letters[len], letters[i + len])) {
      return {false, i + 1, Condition::kMismatchNext};
    }
  }
  return PrefixTableCheck::pass();
}

}  // namespace indet
