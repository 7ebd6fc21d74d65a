#include "indet/text.hpp"

#include <algorithm>
#include <charconv>

namespace indet {
namespace {

bool is_blank(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class StringParser {
 public:
  explicit StringParser(std::string_view text) : text_(text) {}

  IndeterminateString parse() {
    std::vector<Letter> letters;
    skip_blanks();
    while (pos_ < text_.size()) {
      letters.push_back(parse_position());
      if (pos_ < text_.size() && !is_blank(text_[pos_])) {
        fail("expected blank between positions");
      }
      skip_blanks();
    }
    return IndeterminateString(std::move(letters));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_ + 1, what);
  }

  void skip_blanks() {
    while (pos_ < text_.size() && is_blank(text_[pos_])) ++pos_;
  }

  Letter parse_position() {
    if (text_[pos_] != '{') return Letter::singleton(parse_symbol());
    const std::size_t open = pos_;
    ++pos_;
    std::vector<Symbol> symbols{parse_symbol()};
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      symbols.push_back(parse_symbol());
    }
    if (pos_ >= text_.size() || text_[pos_] != '}') fail("expected ',' or '}'");
    ++pos_;
    std::sort(symbols.begin(), symbols.end());
    if (std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end()) {
      throw ParseError(open + 1, "repeated symbol in letter");
    }
    return Letter(std::move(symbols));
  }

  Symbol parse_symbol() {
    if (pos_ >= text_.size()) fail("expected symbol");
    const char c = text_[pos_];
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return Symbol(static_cast<Symbol::Rank>(c - 'a' + 1));
    }
    if (!is_digit(c)) fail("expected symbol");
    Symbol::Rank rank = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, rank);
    if (ec != std::errc() || rank == 0) fail("symbol rank must be an integer >= 1");
    pos_ += static_cast<std::size_t>(ptr - first);
    return Symbol(rank);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_symbol(Symbol s) {
  if (s.rank() <= 26) return std::string(1, static_cast<char>('a' + s.rank() - 1));
  return std::to_string(s.rank());
}

std::string format_letter(const Letter& letter) {
  if (letter.is_singleton()) return format_symbol(letter.symbols().front());
  std::string out = "{";
  bool first = true;
  for (auto s : letter.symbols()) {
    if (!first) out += ',';
    out += format_symbol(s);
    first = false;
  }
  out += '}';
  return out;
}

std::string format_string(const IndeterminateString& x) {
  std::string out;
  for (const auto& letter : x.letters()) {
    if (!out.empty()) out += ' ';
    out += format_letter(letter);
  }
  return out;
}

IndeterminateString parse_string(std::string_view text) {
  return StringParser(text).parse();
}

std::vector<std::int64_t> parse_integers(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && is_blank(text[pos])) ++pos;
    if (pos >= text.size()) break;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) throw ParseError(pos + 1, "expected integer");
    pos += static_cast<std::size_t>(ptr - first);
    if (pos < text.size() && !is_blank(text[pos])) {
      throw ParseError(pos + 1, "expected blank after integer");
    }
    out.push_back(value);
  }
  return out;
}

std::string format_array(const FeasibleArray& y) {
  std::string out;
  for (auto v : y.values()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace indet
