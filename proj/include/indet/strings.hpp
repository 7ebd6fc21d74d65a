// Core value types for indeterminate strings: symbols, letters, strings,
// feasible arrays, and the prefix table.
//
// Positions exposed through this API are 1-based. Containers handed out as
// spans are 0-based in the usual C++ way; element k of a span is position k+1.

#ifndef INDET_STRINGS_HPP_
#define INDET_STRINGS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace indet {

/// One element of the alphabet, identified by its 1-based rank.
class Symbol {
 public:
  using Rank = std::uint32_t;

  constexpr Symbol() = default;
  explicit Symbol(Rank rank);

  constexpr Rank rank() const { return rank_; }

  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  Rank rank_ = 1;
};

/// A nonempty set of symbols, stored in strictly increasing order.
class Letter {
 public:
  /// Throws std::invalid_argument if `symbols` is empty or not strictly
  /// increasing.
  explicit Letter(std::vector<Symbol> symbols);

  /// Convenience: builds a letter from ranks, sorting them first. Duplicate
  /// or zero ranks are rejected.
  static Letter of(std::initializer_list<Symbol::Rank> ranks);
  static Letter singleton(Symbol s) { return Letter(std::vector<Symbol>{s}); }

  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool is_singleton() const { return symbols_.size() == 1; }
  bool contains(Symbol s) const;

  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// True iff the two letters share a symbol. Linear merge scan.
bool letters_match(const Letter& a, const Letter& b);

/// Letter order: lexicographic over the ascending symbol sequences, with a
/// strict prefix ordered first. So {a} < {a,b} < {a,c} < {b}.
std::strong_ordering compare_letters(const Letter& a, const Letter& b);

inline std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
  return compare_letters(a, b);
}

class IndeterminateString {
 public:
  IndeterminateString() = default;
  explicit IndeterminateString(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// 1-based access.
  const Letter& at(std::size_t position) const;
  std::span<const Letter> letters() const { return letters_; }

  /// Every position is a single symbol.
  bool is_regular() const;

  /// Number of distinct symbols appearing anywhere in the string.
  std::size_t alphabet_size() const;

  friend bool operator==(const IndeterminateString&,
                         const IndeterminateString&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Positionwise extension of compare_letters; a strict prefix is smaller.
std::strong_ordering compare_strings(const IndeterminateString& a,
                                     const IndeterminateString& b);

inline std::strong_ordering operator<=>(const IndeterminateString& a,
                                        const IndeterminateString& b) {
  return compare_strings(a, b);
}

/// Thrown by validate_feasible. `index()` is the 1-based position of the first
/// offending entry.
class InfeasibleArray : public std::invalid_argument {
 public:
  InfeasibleArray(std::size_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// An integer array y[1..n] with y[1] = n and 0 <= y[i] <= n-i+1. Every
/// prefix table is one of these.
class FeasibleArray {
 public:
  FeasibleArray() = default;

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// 1-based access.
  std::size_t at(std::size_t position) const;
  std::span<const std::size_t> values() const { return values_; }

  friend bool operator==(const FeasibleArray&, const FeasibleArray&) = default;

 private:
  explicit FeasibleArray(std::vector<std::size_t> values)
      : values_(std::move(values)) {}

  friend FeasibleArray validate_feasible(std::span<const std::int64_t> raw);
  friend FeasibleArray compute_prefix_table(const IndeterminateString& x);

  std::vector<std::size_t> values_;
};

/// Checks the feasibility bounds and throws InfeasibleArray naming the first
/// violation. The empty sequence is feasible (prefix table of the empty
/// string).
FeasibleArray validate_feasible(std::span<const std::int64_t> raw);
FeasibleArray validate_feasible(std::initializer_list<std::int64_t> raw);

/// Naive O(n^2 sigma) prefix table: entry i is the length of the longest
/// prefix of x[i..n] matching a prefix of x.
FeasibleArray compute_prefix_table(const IndeterminateString& x);

struct PrefixTableCheck {
  enum class Condition {
    kNone,
    kPrefixMatch,   // (a) x[1..y[i]] must match x[i..i+y[i]-1]
    kMismatchNext,  // (b) x[y[i]+1] must not match x[i+y[i]]
  };

  bool ok = true;
  std::size_t position = 0;  // 1-based, 0 when ok
  Condition condition = Condition::kNone;

  static PrefixTableCheck pass() { return {}; }
};

/// Checks the two per-position conditions characterising a prefix table and
/// reports the first position (then condition) that fails. Throws
/// std::invalid_argument if the lengths differ.
PrefixTableCheck verify_prefix_table(const IndeterminateString& x,
                                     const FeasibleArray& y);

}  // namespace indet

#endif  // INDET_STRINGS_HPP_
