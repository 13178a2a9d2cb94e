#pragma once

#include <string>
#include <utility>

#include "paralift/errors.hpp"
#include "paralift/rational.hpp"

namespace paralift {

// Split-complex number a + b*j with j^2 = 1. The ring has zero divisors:
// (1+j)(1-j) = 0, so a value is invertible iff re^2 != jm^2.
class SplitComplex {
 public:
  SplitComplex() = default;
  SplitComplex(Rational re, Rational jm = 0)
      : re_(std::move(re)), jm_(std::move(jm)) {}
  SplitComplex(int re) : re_(re) {}  // NOLINT: implicit by design

  static SplitComplex j() { return SplitComplex(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& jm() const { return jm_; }

  bool is_zero() const { return re_ == 0 && jm_ == 0; }
  bool is_one() const { return re_ == 1 && jm_ == 0; }
  bool is_real() const { return jm_ == 0; }
  bool is_invertible() const { return re_ * re_ != jm_ * jm_; }

  SplitComplex operator-() const { return SplitComplex(-re_, -jm_); }

  friend SplitComplex operator+(const SplitComplex& a, const SplitComplex& b) {
    return SplitComplex(a.re_ + b.re_, a.jm_ + b.jm_);
  }
  friend SplitComplex operator-(const SplitComplex& a, const SplitComplex& b) {
    return SplitComplex(a.re_ - b.re_, a.jm_ - b.jm_);
  }
  // (a+bj)(c+dj) = (ac+bd) + (ad+bc)j
  friend SplitComplex operator*(const SplitComplex& a, const SplitComplex& b) {
    return SplitComplex(a.re_ * b.re_ + a.jm_ * b.jm_,
                        a.re_ * b.jm_ + a.jm_ * b.re_);
  }

  SplitComplex& operator+=(const SplitComplex& o) { return *this = *this + o; }
  SplitComplex& operator-=(const SplitComplex& o) { return *this = *this - o; }
  SplitComplex& operator*=(const SplitComplex& o) { return *this = *this * o; }

  SplitComplex inverse() const {
    if (!is_invertible()) {
      throw Error("split-complex value " + str() +
                  " is a zero divisor (re^2 == jm^2); no inverse");
    }
    Rational n = re_ * re_ - jm_ * jm_;
    return SplitComplex(re_ / n, -jm_ / n);
  }

  friend SplitComplex operator/(const SplitComplex& a, const SplitComplex& b) {
    return a * b.inverse();
  }

  friend bool operator==(const SplitComplex& a, const SplitComplex& b) {
    return a.re_ == b.re_ && a.jm_ == b.jm_;
  }
  friend bool operator!=(const SplitComplex& a, const SplitComplex& b) {
    return !(a == b);
  }
  // Lexicographic; used only for deterministic container ordering.
  friend bool operator<(const SplitComplex& a, const SplitComplex& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.jm_ < b.jm_;
  }

  SplitComplex pow(unsigned n) const {
    SplitComplex acc(1);
    for (unsigned i = 0; i < n; ++i) acc *= *this;
    return acc;
  }

  // "a", "b*j" or "a+b*j" / "a-b*j"; "0" for zero.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out = to_string(re_);
    if (jm_ != 0) {
      if (!out.empty()) out += (jm_ > 0) ? "+" : "-";
      else if (jm_ < 0) out += "-";
      Rational mag = jm_ > 0 ? jm_ : Rational(-jm_);
      out += to_string(mag) + "*j";
    }
    return out;
  }

 private:
  Rational re_ = 0;
  Rational jm_ = 0;
};

}  // namespace paralift
