#include "poly_text.hpp"

#include <cctype>

#include "lucaspoly/errors.hpp"

namespace lucaspoly::detail {

namespace {

class Reader {
 public:
  Reader(std::string_view text, std::string_view variables) : text_(text), vars_(variables) {}

  std::vector<ParsedTerm> run() {
    std::vector<ParsedTerm> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool starts_factor() {
    skip_ws();
    if (at_end()) return false;
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || vars_.find(c) != std::string_view::npos;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  ParsedTerm term(bool negative) {
    ParsedTerm out;
    out.coeff = negative ? -1 : 1;
    skip_ws();
    if (!starts_factor()) throw ParseError("expected a term", pos_);
    bool first = true;
    for (;;) {
      skip_ws();
      if (!first) {
        if (!at_end() && peek() == '*') {
          ++pos_;
          if (!starts_factor()) throw ParseError("expected a factor after '*'", pos_);
        } else if (!starts_factor()) {
          break;
        }
      }
      first = false;
      factor(out);
    }
    return out;
  }

  void factor(ParsedTerm& out) {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      out.coeff *= Integer(digits());
      return;
    }
    const auto var = vars_.find(c);
    ++pos_;
    unsigned exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      const std::size_t where = pos_;
      const std::string e = digits();
      if (e.size() > 9) throw ParseError("exponent too large", where);
      exponent = static_cast<unsigned>(std::stoul(e));
    }
    out.exponents[var] += exponent;
  }

  std::string_view text_;
  std::string_view vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, std::string_view variables) {
  return Reader(text, variables).run();
}

void append_term(std::string& out, const Integer& coeff, std::string_view variables,
                 const std::array<unsigned, 2>& exponents, bool first) {
  const bool negative = sgn(coeff) < 0;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const Integer magnitude = abs(coeff);
  bool constant = true;
  for (std::size_t v = 0; v < variables.size(); ++v) constant = constant && exponents[v] == 0;
  bool need_star = false;
  if (constant || magnitude != 1) {
    out += magnitude.get_str();
    need_star = true;
  }
  for (std::size_t v = 0; v < variables.size(); ++v) {
    if (exponents[v] == 0) continue;
    if (need_star) out += '*';
    out += variables[v];
    if (exponents[v] > 1) out += "^" + std::to_string(exponents[v]);
    need_star = true;
  }
}

}  // namespace lucaspoly::detail
