// Copyright 2026 The Expo Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "expo/parser.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

#include "expo/error.hpp"

namespace expo {
namespace {

using Kind = ExprAst::Kind;

constexpr unsigned kMaxExponent = 64;

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_alnum(char c) { return is_digit(c) || is_alpha(c); }

struct Token {
  enum class Type { kNumber, kIdent, kOp, kEnd };
  Type type;
  std::size_t offset;
  std::string_view text;
  Complex value{};
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Token::Type::kEnd, start, {}};
    const char c = text_[pos_];
    if (is_digit(c) || (c == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
      return number(start);
    }
    if (is_alpha(c)) {
      while (pos_ < text_.size() && is_alnum(text_[pos_])) ++pos_;
      return {Token::Type::kIdent, start, text_.substr(start, pos_ - start)};
    }
    switch (c) {
      case '+': case '-': case '*': case '^': case '(': case ')':
        ++pos_;
        return {Token::Type::kOp, start, text_.substr(start, 1)};
      case '/':
        throw ParseError(ParseError::Kind::kSyntax, start, "division is not supported");
      default:
        throw ParseError(ParseError::Kind::kSyntax, start,
                         std::string("unexpected character '") + c + "'");
    }
  }

 private:
  Token number(std::size_t start) {
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && is_digit(text_[p])) {
        pos_ = p;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      }
    }
    std::string_view lit = text_.substr(start, pos_ - start);
    std::string buf(lit);
    if (buf.front() == '.') buf.insert(buf.begin(), '0');
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{} || ptr != buf.data() + buf.size() || !std::isfinite(v)) {
      throw ParseError(ParseError::Kind::kSyntax, start, "malformed number '" + buf + "'");
    }
    bool imaginary = false;
    if (pos_ < text_.size() && text_[pos_] == 'i' &&
        (pos_ + 1 >= text_.size() || !is_alnum(text_[pos_ + 1]))) {
      imaginary = true;
      ++pos_;
    }
    return {Token::Type::kNumber, start, text_.substr(start, pos_ - start),
            imaginary ? Complex{0.0, v} : Complex{v, 0.0}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  ExprAst parse() {
    ExprAst e = expr();
    if (tok_.type != Token::Type::kEnd) fail("unexpected '" + std::string(tok_.text) + "'");
    return e;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  bool is_op(char c) const {
    return tok_.type == Token::Type::kOp && tok_.text.size() == 1 && tok_.text[0] == c;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::kSyntax, tok_.offset, msg);
  }

  void expect(char c) {
    if (!is_op(c)) {
      fail(std::string("expected '") + c + "'" +
           (tok_.type == Token::Type::kEnd ? " before end of input" : ""));
    }
    advance();
  }

  ExprAst expr() {
    ExprAst lhs = term();
    while (is_op('+') || is_op('-')) {
      const Kind k = is_op('+') ? Kind::kAdd : Kind::kSub;
      const std::size_t at = tok_.offset;
      advance();
      ExprAst rhs = term();
      lhs = ExprAst{k, at, {}, {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  ExprAst term() {
    ExprAst lhs = unary();
    while (is_op('*')) {
      const std::size_t at = tok_.offset;
      advance();
      ExprAst rhs = unary();
      lhs = ExprAst{Kind::kMul, at, {}, {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  ExprAst unary() {
    if (is_op('-')) {
      const std::size_t at = tok_.offset;
      advance();
      return ExprAst{Kind::kNeg, at, {}, {unary()}};
    }
    return power();
  }

  ExprAst power() {
    ExprAst base = atom();
    if (is_op('^')) {
      const std::size_t at = tok_.offset;
      advance();
      ExprAst exponent = unary();
      return ExprAst{Kind::kPow, at, {}, {std::move(base), std::move(exponent)}};
    }
    return base;
  }

  ExprAst atom() {
    const std::size_t at = tok_.offset;
    switch (tok_.type) {
      case Token::Type::kNumber: {
        ExprAst n{Kind::kNumber, at, tok_.value, {}};
        advance();
        return n;
      }
      case Token::Type::kIdent: {
        const std::string_view name = tok_.text;
        if (name == "exp" || name == "sqrt") {
          advance();
          expect('(');
          ExprAst arg = expr();
          expect(')');
          return ExprAst{name == "exp" ? Kind::kExpCall : Kind::kSqrtCall, at, {}, {std::move(arg)}};
        }
        std::optional<Kind> k;
        if (name == "i") k = Kind::kImaginaryUnit;
        if (name == "pi") k = Kind::kPi;
        if (name == "e") k = Kind::kEConst;
        if (name == "z") k = Kind::kVariableZ;
        if (!k) fail("unknown identifier '" + std::string(name) + "'");
        advance();
        return ExprAst{*k, at, {}, {}};
      }
      case Token::Type::kOp:
        if (is_op('(')) {
          advance();
          ExprAst inner = expr();
          expect(')');
          return ExprAst{Kind::kParen, at, {}, {std::move(inner)}};
        }
        fail("unexpected '" + std::string(tok_.text) + "'");
      case Token::Type::kEnd:
        fail("unexpected end of input");
    }
    fail("unreachable");
  }

  Lexer lexer_;
  Token tok_{Token::Type::kEnd, 0, {}};
};

// Constant value of a folded sum, if it is one.
std::optional<Complex> as_constant(const ExpSum& s) {
  if (s.empty()) return Complex{};
  if (!s.is_polynomial() || s.terms()[0].coeff.degree() > 0) return std::nullopt;
  return s.terms()[0].coeff.coeff(0);
}

[[noreturn]] void unsupported(std::size_t at, const std::string& msg) {
  throw ParseError(ParseError::Kind::kUnsupportedForm, at, msg);
}

unsigned fold_exponent(const ExprAst& node, const ExpSum& value) {
  const auto c = as_constant(value);
  if (!c) unsupported(node.offset, "exponent must be a constant");
  const double re = c->real();
  if (std::abs(c->imag()) > 1e-12 * std::max(1.0, std::abs(re))) {
    unsupported(node.offset, "exponent must be real");
  }
  const double rounded = std::round(re);
  if (std::abs(re - rounded) > 1e-9 * std::max(1.0, std::abs(re))) {
    unsupported(node.offset, "exponent must be an integer");
  }
  if (rounded < 0) unsupported(node.offset, "exponent must be nonnegative");
  if (rounded > kMaxExponent) unsupported(node.offset, "exponent exceeds 64");
  return static_cast<unsigned>(rounded);
}

ExpSum fold_node(const ExprAst& node, const Tolerance& tol) {
  switch (node.kind) {
    case Kind::kNumber:
      return ExpSum::constant(node.value, tol);
    case Kind::kImaginaryUnit:
      return ExpSum::constant(Complex{0.0, 1.0}, tol);
    case Kind::kPi:
      return ExpSum::constant(std::numbers::pi, tol);
    case Kind::kEConst:
      return ExpSum::constant(std::numbers::e, tol);
    case Kind::kVariableZ:
      return ExpSum::polynomial(PolyC::identity(), tol);
    case Kind::kParen:
      return fold_node(node.children[0], tol);
    case Kind::kNeg:
      return -fold_node(node.children[0], tol);
    case Kind::kAdd:
      return fold_node(node.children[0], tol) + fold_node(node.children[1], tol);
    case Kind::kSub:
      return fold_node(node.children[0], tol) - fold_node(node.children[1], tol);
    case Kind::kMul:
      try {
        return fold_node(node.children[0], tol) * fold_node(node.children[1], tol);
      } catch (const DegreeOverflow& e) {
        unsupported(node.offset, e.what());
      }
    case Kind::kPow: {
      const ExpSum base = fold_node(node.children[0], tol);
      const unsigned k = fold_exponent(node.children[1], fold_node(node.children[1], tol));
      try {
        return base.pow(k);
      } catch (const DegreeOverflow& e) {
        unsupported(node.offset, e.what());
      }
    }
    case Kind::kExpCall: {
      const ExpSum arg = fold_node(node.children[0], tol);
      if (!arg.is_polynomial() || arg.polynomial_part().degree() > 1) {
        unsupported(node.offset, "exp argument must be affine in z");
      }
      const PolyC p = arg.polynomial_part();
      const Complex scale = std::exp(p.coeff(0));
      if (!std::isfinite(scale.real()) || !std::isfinite(scale.imag())) {
        unsupported(node.offset, "exp of the constant part overflows");
      }
      return ExpSum::exponential(scale, p.coeff(1), tol);
    }
    case Kind::kSqrtCall: {
      const auto c = as_constant(fold_node(node.children[0], tol));
      if (!c) unsupported(node.offset, "sqrt argument must be a constant");
      // Adding 0.0 clears a negative zero so the cut sits on the principal side.
      return ExpSum::constant(std::sqrt(Complex{c->real() + 0.0, c->imag() + 0.0}), tol);
    }
  }
  unsupported(node.offset, "unknown node");
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

ExprAst parse_ast(std::string_view text) { return Parser(text).parse(); }

ExpSum fold(const ExprAst& ast, Tolerance tol) { return fold_node(ast, tol); }

ExpSum parse_expsum(std::string_view text, Tolerance tol) { return fold(parse_ast(text), tol); }

Complex parse_complex(std::string_view text) {
  const auto c = as_constant(parse_expsum(text));
  if (!c) throw ParseError(ParseError::Kind::kNotConstant, 0, "expression is not a constant");
  return *c;
}

PolyC parse_poly(std::string_view text) {
  const ExpSum s = parse_expsum(text);
  if (!s.is_polynomial()) {
    throw ParseError(ParseError::Kind::kNotPolynomial, 0, "expression is not a polynomial in z");
  }
  return s.polynomial_part();
}

std::string render_complex(Complex c) {
  const double re = c.real();
  const double im = c.imag();
  if (im == 0.0) return format_double(re);
  if (re == 0.0) return format_double(im) + "i";
  return format_double(re) + (std::signbit(im) ? "-" : "+") + format_double(std::abs(im)) + "i";
}

std::string render(const ExpSum& a) {
  if (a.empty()) return "0";
  std::string out;
  for (const ExpTerm& t : a.terms()) {
    const auto coeffs = t.coeff.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == Complex{}) continue;
      if (!out.empty()) out += " + ";
      out += "(" + render_complex(coeffs[k]) + ")";
      if (k == 1) out += " * z";
      if (k > 1) out += " * z^" + std::to_string(k);
      if (t.freq != Complex{}) out += " * exp((" + render_complex(t.freq) + ")*z)";
    }
  }
  return out;
}

std::string render(const PolyC& p) { return render(ExpSum::polynomial(p)); }

}  // namespace expo
