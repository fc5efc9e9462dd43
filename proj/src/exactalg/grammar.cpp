#include "vlines/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace vlines {

namespace {

struct RawTerm {
  mpq_class coeff;
  std::vector<std::pair<int, int>> powers;  // (variable, exponent)
  int degree = 0;
  std::size_t start = 0;
  std::size_t end = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip();
    if (at_end()) fail("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip();
    }
    terms.push_back(term(negative));
    skip();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'", pos_);
      ++pos_;
      skip();
      terms.push_back(term(c == '-'));
      skip();
    }
    return terms;
  }

  char letter() const { return letter_; }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  mpz_class integer() {
    const std::size_t begin = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (begin == pos_) fail("expected a number", begin);
    return mpz_class(std::string(text_.substr(begin, pos_ - begin)));
  }

  int small_integer() {
    const std::size_t begin = pos_;
    const mpz_class v = integer();
    if (v > 255) fail("number too large here", begin);
    return static_cast<int>(v.get_si());
  }

  RawTerm term(bool negative) {
    RawTerm t;
    t.coeff = negative ? -1 : 1;
    t.start = pos_;
    factor(t);
    for (;;) {
      skip();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip();
      factor(t);
    }
    t.end = pos_;
    return t;
  }

  void factor(RawTerm& t) {
    if (at_end()) fail("unexpected end of input", pos_);
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      skip();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        const mpz_class den = integer();
        if (den == 0) fail("zero denominator", at);
        value /= mpq_class(den);
        value.canonicalize();
      }
      t.coeff *= value;
      return;
    }
    if (c == 't' || c == 's') {
      const std::size_t at = pos_;
      if (letter_ != 0 && letter_ != c) fail("variables t and s are mixed", at);
      letter_ = c;
      ++pos_;
      const int index = small_integer();
      int exponent = 1;
      skip();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip();
        exponent = small_integer();
      }
      t.powers.emplace_back(index, exponent);
      t.degree += exponent;
      return;
    }
    fail(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  char letter_ = 0;
};

}  // namespace

HomForm parse_poly(std::string_view text, Field field, const PolyParseOptions& options) {
  Parser parser(text);
  const std::vector<RawTerm> terms = parser.parse();

  int max_index = -1, max_degree = 0;
  for (const auto& t : terms) {
    for (const auto& [v, e] : t.powers) max_index = std::max(max_index, v);
    max_degree = std::max(max_degree, t.degree);
  }
  const int nvars = options.nvars.value_or(std::max(max_index + 1, 1));
  const int degree = options.degree.value_or(max_degree);
  if (max_index >= nvars)
    throw Error(ErrorCode::Parse, "variable index " + std::to_string(max_index) + " out of range for " +
                                      std::to_string(nvars) + " variables");

  HomForm f(field, nvars, degree);
  for (const auto& t : terms) {
    if (t.degree != degree && t.coeff != 0) {
      std::string shown(text.substr(t.start, t.end - t.start));
      while (!shown.empty() && shown.back() == ' ') shown.pop_back();
      parser.fail("inhomogeneous polynomial: term '" + shown + "' has degree " + std::to_string(t.degree) +
                      ", expected " + std::to_string(degree),
                  t.start);
    }
    if (t.coeff == 0) continue;
    Exponents e(static_cast<std::size_t>(nvars), 0);
    for (const auto& [v, k] : t.powers) e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e[v] + k);
    f.add_term(e, field.from_rational(t.coeff));
  }
  return f;
}

std::string format_poly(const HomForm& f, char letter) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += letter + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace vlines
