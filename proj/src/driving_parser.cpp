#include "lkweld/expressions.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace lkweld {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
  }

  // [+-]? digits [. digits] [(e|E) [+-]? digits]
  double number() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t i = pos_;
    if (i < text_.size() && (text_[i] == '+' || text_[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i, ++digits;
    if (i < text_.size() && text_[i] == '.') {
      ++i;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i, ++digits;
    }
    if (digits == 0) fail("expected a decimal number");
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      std::size_t exp_digits = 0;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j, ++exp_digits;
      if (exp_digits == 0) {
        pos_ = j;
        fail("malformed exponent");
      }
      i = j;
    }
    const std::string literal(text_.substr(start, i - start));
    pos_ = i;
    return std::strtod(literal.c_str(), nullptr);
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<int>(v);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

DrivingTerm parse_term(Cursor& c) {
  DrivingTerm term;
  c.expect('(');
  const double re = c.number();
  c.expect(',');
  const double im = c.number();
  c.expect(')');
  term.coeff = {re, im};
  c.expect('*');
  if (c.accept_word("exp")) {
    c.expect('(');
    term.rate = c.number();
    c.expect('*');
    c.expect_word("t");
    c.expect(')');
    c.expect('*');
  }
  c.expect_word("z");
  c.expect('^');
  c.peek();
  const std::size_t at = c.pos();
  term.power = c.integer();
  if (term.power < 1) throw ParseError(at, "power of z must be >= 1");
  return term;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // Keep a decimal point so the literal reads as a real number.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

DrivingFunction parse_driving(std::string_view text, double horizon) {
  Cursor c(text);
  c.expect_word("p");
  c.expect('=');
  c.peek();
  const std::size_t at = c.pos();
  const double lead = c.number();
  if (lead != 1.0) throw ParseError(at, "constant term must be 1");
  std::vector<DrivingTerm> terms;
  while (c.accept('+')) terms.push_back(parse_term(c));
  if (!c.at_end()) c.fail("unexpected trailing input");
  return DrivingFunction(std::move(terms), horizon);
}

std::string format_driving(const DrivingFunction& p) {
  std::string out = "p = 1";
  for (const auto& term : p.terms()) {
    out += " + (" + fmt17(term.coeff.real()) + "," + fmt17(term.coeff.imag()) + ")";
    if (term.rate != 0.0) out += "*exp(" + fmt17(term.rate) + "*t)";
    out += "*z^" + std::to_string(term.power);
  }
  return out;
}

double DeltaShape::operator()(double psi) const {
  double v = 0.0;
  for (const auto& t : terms) {
    v += t.cos_coeff * std::cos(t.k * psi) + t.sin_coeff * std::sin(t.k * psi);
  }
  return v;
}

DeltaShape parse_delta_shape(std::string_view text) {
  Cursor c(text);
  DeltaShape shape;
  double sign = 1.0;
  if (c.accept('-')) sign = -1.0;
  else c.accept('+');
  while (true) {
    const double a = sign * c.number();
    HarmonicTerm term;
    if (c.accept('*')) {
      bool is_cos = true;
      if (c.accept_word("cos")) is_cos = true;
      else if (c.accept_word("sin")) is_cos = false;
      else c.fail("expected 'cos' or 'sin'");
      c.expect('(');
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        term.k = c.integer();
        c.expect('*');
      } else {
        term.k = 1;
      }
      c.expect_word("psi");
      c.expect(')');
      (is_cos ? term.cos_coeff : term.sin_coeff) = a;
    } else {
      term.k = 0;
      term.cos_coeff = a;
    }
    shape.terms.push_back(term);
    if (c.at_end()) break;
    if (c.accept('+')) sign = 1.0;
    else if (c.accept('-')) sign = -1.0;
    else c.fail("expected '+' or '-'");
  }
  return shape;
}

std::string format_delta_shape(const DeltaShape& shape) {
  std::string out;
  for (const auto& t : shape.terms) {
    if (!out.empty()) out += " + ";
    if (t.k == 0) {
      out += fmt17(t.cos_coeff);
      continue;
    }
    const bool is_cos = t.sin_coeff == 0.0;
    out += fmt17(is_cos ? t.cos_coeff : t.sin_coeff);
    out += is_cos ? "*cos(" : "*sin(";
    out += std::to_string(t.k) + "*psi)";
  }
  return out;
}

}  // namespace lkweld
