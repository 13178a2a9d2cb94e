#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "paralift/split_complex.hpp"
#include "paralift/symbol.hpp"

namespace paralift {

class Assignment;

// A power product of chart symbols, factors sorted by the fixed symbol
// order, all exponents >= 1. The empty monomial is the constant term.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Symbol s, int exponent = 1);

  bool is_constant() const { return factors_.empty(); }
  int degree() const;
  int exponent_of(const Symbol& s) const;
  const std::vector<std::pair<Symbol, int>>& factors() const {
    return factors_;
  }

  Monomial operator*(const Monomial& o) const;

  // Canonical term order: compare factor lists lexicographically with
  // symbols ascending and, for equal symbols, higher exponents first; a
  // proper prefix sorts after its extensions. Constants therefore sort last
  // and z1^2 precedes z1*zb1 precedes z1.
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

  std::string str() const;  // "z1^2*zb1", "1" for the constant monomial

 private:
  std::vector<std::pair<Symbol, int>> factors_;
};

// Immutable multivariate polynomial over chart symbols with split-complex
// rational coefficients, kept in canonical form: no zero coefficients, terms
// ordered by the fixed monomial order. Structural identity coincides with
// mathematical equality. j never appears as a symbol; it lives only inside
// coefficients.
class Expr {
 public:
  Expr() = default;  // zero

  static Expr zero() { return Expr(); }
  static Expr constant(SplitComplex c);
  static Expr symbol(Symbol s);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  SplitComplex constant_value() const;

  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, SplitComplex>& terms() const { return terms_; }

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }

  friend Expr operator*(const SplitComplex& c, const Expr& e);

  Expr pow(int exponent) const;  // exponent >= 0

  // Formal Wirtinger partial: all distinct symbols are independent.
  Expr differentiate(const Symbol& s) const;

  // Exact value at a point; throws if a symbol is missing from `a`.
  SplitComplex evaluate(const Assignment& a) const;

  // e = p + j*q with real-coefficient p, q.
  std::pair<Expr, Expr> split_parts() const;

  // Symbols occurring in the expression, in canonical order.
  std::vector<Symbol> symbols() const;

  // Structural equality of canonical forms == mathematical equality.
  friend bool operator==(const Expr& a, const Expr& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  // Canonical printing; the exact golden-file format, e.g.
  // "2*z1^2*zb1 + (1+1*j)*u1". parse(str()) reproduces the Expr.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const SplitComplex& c);

  std::map<Monomial, SplitComplex> terms_;
};

inline Expr operator+(const Expr& a, const SplitComplex& c) {
  return a + Expr::constant(c);
}

}  // namespace paralift
