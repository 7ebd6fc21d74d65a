// Text forms used on the command line.
//
//   string   := position (' ' position)* | ""
//   position := symbol | '{' symbol (',' symbol)* '}'
//   symbol   := [a-z] | decimal integer >= 1
//
// Ranks 1..26 print as 'a'..'z', larger ranks as decimal. Singleton letters
// print bare, others braced in ascending order. Arrays are space-separated
// decimal integers.

#ifndef INDET_TEXT_HPP_
#define INDET_TEXT_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indet/strings.hpp"

namespace indet {

/// `column()` is the 1-based character offset of the first bad token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t column, const std::string& what)
      : std::invalid_argument(what + " at column " + std::to_string(column)),
        column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

std::string format_symbol(Symbol s);
std::string format_letter(const Letter& letter);
std::string format_string(const IndeterminateString& x);

/// Positions may be separated by any run of blanks (space, tab, newline);
/// no blanks are allowed inside braces. Symbols inside braces may be given in
/// any order but not repeated.
IndeterminateString parse_string(std::string_view text);

/// Parses whitespace-separated integers without range checks; feed the result
/// to validate_feasible.
std::vector<std::int64_t> parse_integers(std::string_view text);

std::string format_array(const FeasibleArray& y);

}  // namespace indet

#endif  // INDET_TEXT_HPP_
