#include "tint/parse.hpp"

#include <cctype>
#include <string>

#include "tint/errors.hpp"

namespace tint {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), line_(line), offset_(offset) {}

  Polynomial parse() {
    Polynomial result(ring_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    while (true) {
      Polynomial t = term();
      result = negate ? result - t : result + t;
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
      negate = c == '-';
      ++pos_;
    }
    return result;
  }

 private:
  Polynomial term() {
    skip_ws();
    if (at_end()) fail("expected a term");
    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = static_cast<std::int64_t>(integer() % ring_->characteristic());
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_ident_start(peek())) fail("expected a variable after '*'");
      }
    }
    Monomial m;
    bool have_mono = false;
    while (!at_end() && is_ident_start(peek())) {
      std::size_t start = pos_;
      std::string name = identifier();
      auto idx = ring_->index_of(name);
      if (!idx) fail_at(start, "undeclared variable '" + name + "'");
      std::uint64_t exp = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected an exponent after '^'");
        }
        exp = integer();
      }
      std::uint64_t total = std::uint64_t(m[*idx]) + exp;
      if (total > 0xffffffffull) fail("exponent too large");
      m.set(*idx, static_cast<std::uint32_t>(total));
      have_mono = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_ident_start(peek())) fail("expected a variable after '*'");
      } else {
        break;
      }
    }
    if (!have_coeff && !have_mono) {
      fail(at_end() ? "expected a term" : std::string("unexpected character '") + peek() + "'");
    }
    return Polynomial::monomial(ring_, m, ring_->field().reduce(coeff));
  }

  std::uint64_t integer() {
    std::uint64_t v = 0;
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 0xffffffffull) fail_at(start, "integer too large");
      ++pos_;
    }
    return v;
  }

  std::string identifier() {
    std::string s;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      s += peek();
      ++pos_;
    }
    return s;
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(msg, line_, offset_ + pos + 1);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line,
                            std::size_t column_offset) {
  return PolyParser(text, ring, line, column_offset).parse();
}

}  // namespace tint
