#ifndef ORD_EXPR_HPP
#define ORD_EXPR_HPP

// Surface syntax for ordinal expressions.
//
// Grammar (precedence low to high: + < * < ^, with ^ right-associative):
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' factor)?
//   atom   := '0' | nat | 'w' | '(' expr ')'
// Whitespace is insignificant.  Only w may be the base of ^.

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "ord/cnf.hpp"
#include "ord/errors.hpp"

namespace ord {

struct ord_expr;
using ord_expr_ptr = std::shared_ptr<const ord_expr>;

struct ord_expr {
  enum class kind { lit0, lit_nat, omega, add, mul, pow };
  kind k;
  std::uint64_t value = 0;  // lit_nat
  ord_expr_ptr lhs;         // add/mul
  ord_expr_ptr rhs;         // add/mul; pow exponent

  static ord_expr_ptr lit0() { return make(kind::lit0); }
  static ord_expr_ptr lit_nat(std::uint64_t n) {
    auto e = make(kind::lit_nat);
    e->value = n;
    return e;
  }
  static ord_expr_ptr omega() { return make(kind::omega); }
  static ord_expr_ptr add(ord_expr_ptr l, ord_expr_ptr r) {
    auto e = make(kind::add);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }
  static ord_expr_ptr mul(ord_expr_ptr l, ord_expr_ptr r) {
    auto e = make(kind::mul);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }
  static ord_expr_ptr pow(ord_expr_ptr exponent) {
    auto e = make(kind::pow);
    e->rhs = std::move(exponent);
    return e;
  }

 private:
  static std::shared_ptr<ord_expr> make(kind k) {
    auto e = std::make_shared<ord_expr>();
    e->k = k;
    return e;
  }
};

inline constexpr std::uint64_t max_nat_literal = 1000000;  // unary blowup guard

namespace detail {

class expr_parser {
 public:
  explicit expr_parser(std::string_view text) : text_(text) {}

  ord_expr_ptr run() {
    ord_expr_ptr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw syntax_error("unexpected trailing input", pos_);
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ord_expr_ptr expr() {
    ord_expr_ptr e = term();
    while (eat('+')) e = ord_expr::add(std::move(e), term());
    return e;
  }

  ord_expr_ptr term() {
    ord_expr_ptr e = factor();
    while (eat('*')) e = ord_expr::mul(std::move(e), factor());
    return e;
  }

  ord_expr_ptr factor() {
    skip_ws();
    std::size_t base_pos = pos_;
    ord_expr_ptr base = atom();
    if (eat('^')) {
      if (base->k != ord_expr::kind::omega) throw unsupported_base_error(base_pos);
      return ord_expr::pow(factor());  // right-associative
    }
    return base;
  }

  ord_expr_ptr atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw syntax_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ord_expr_ptr e = expr();
      if (!eat(')')) throw syntax_error("expected ')'", pos_);
      return e;
    }
    if (c == 'w') {
      ++pos_;
      return ord_expr::omega();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::uint64_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (n > max_nat_literal) throw syntax_error("natural literal too large", start);
        ++pos_;
      }
      return n == 0 ? ord_expr::lit0() : ord_expr::lit_nat(n);
    }
    throw syntax_error(std::string("unexpected character '") + c + "'", pos_);
  }
};

}  // namespace detail

inline ord_expr_ptr parse(std::string_view text) { return detail::expr_parser(text).run(); }

// Folds the AST through the normal-form arithmetic; the result is always
// a valid normal form because the operations preserve normality.
inline cnf eval_cnf(const ord_expr_ptr& e) {
  switch (e->k) {
    case ord_expr::kind::lit0:
      return cnf();
    case ord_expr::kind::lit_nat:
      return nat(e->value);
    case ord_expr::kind::omega:
      return omega_pow(nat(1));
    case ord_expr::kind::add:
      return add(eval_cnf(e->lhs), eval_cnf(e->rhs));
    case ord_expr::kind::mul:
      return mul(eval_cnf(e->lhs), eval_cnf(e->rhs));
    case ord_expr::kind::pow:
    default:
      return omega_pow(eval_cnf(e->rhs));
  }
}

inline cnf parse_cnf(std::string_view text) { return eval_cnf(parse(text)); }

namespace detail {

// A printed exponent can stay bare when it parses back as a factor:
// a natural, or a tower of single w^... terms.
inline bool prints_as_factor(const cnf& e) {
  if (as_natural(e)) return true;
  return e.rest().is_zero() && prints_as_factor(e.exp());
}

}  // namespace detail

// Canonical, re-parseable text: terms written as w^E*k with equal
// exponents merged into counts, w^0*k collapsed to the bare natural,
// w^1 to w, and *1 elided.
inline std::string print_cnf(const cnf& a) {
  if (a.is_zero()) return "0";
  std::string out;
  cnf t = a;
  bool first = true;
  while (!t.is_zero()) {
    // collect the run of equal exponents
    cnf e = t.exp();
    std::uint64_t count = 0;
    while (!t.is_zero() && t.exp() == e) {
      ++count;
      t = t.rest();
    }
    if (!first) out += "+";
    first = false;
    if (e.is_zero()) {
      out += std::to_string(count);
    } else {
      out += "w";
      if (!(as_natural(e) == std::uint64_t{1})) {
        out += "^";
        if (detail::prints_as_factor(e))
          out += print_cnf(e);
        else
          out += "(" + print_cnf(e) + ")";
      }
      if (count > 1) out += "*" + std::to_string(count);
    }
  }
  return out;
}

}  // namespace ord

#endif  // ORD_EXPR_HPP
