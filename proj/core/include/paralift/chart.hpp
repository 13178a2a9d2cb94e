#pragma once

#include <string>
#include <vector>

#include "paralift/errors.hpp"
#include "paralift/symbol.hpp"

namespace paralift {

// A coordinate chart on a paracomplex manifold of paracomplex dimension m.
// A base chart exposes 2m symbols z^1..z^m, zb^1..zb^m. The induced tangent
// chart additionally exposes the fiber coordinates u^1..u^m, ub^1..ub^m and
// has arity 4m.
//
// Unified coordinate index convention (1-based):
//   A in 1..m      <-> z^A
//   A in m+1..2m   <-> zb^{A-m}
//   A in 2m+1..3m  <-> u^{A-2m}     (tangent charts only)
//   A in 3m+1..4m  <-> ub^{A-3m}    (tangent charts only)
class Chart {
 public:
  explicit Chart(int m, bool is_tangent = false)
      : m_(m), tangent_(is_tangent) {
    if (m < 1) throw ChartError("chart dimension m must be >= 1");
  }

  int m() const { return m_; }
  bool is_tangent() const { return tangent_; }
  int arity() const { return tangent_ ? 4 * m_ : 2 * m_; }

  // The induced tangent chart; rejected one level up (no T(TM)).
  Chart tangent() const {
    if (tangent_) throw ChartError("chart is already a tangent chart");
    return Chart(m_, true);
  }

  Chart base() const { return Chart(m_, false); }

  Symbol symbol(int a) const {  // unified index, 1-based
    check_index(a);
    int block = (a - 1) / m_;
    int index = (a - 1) % m_ + 1;
    return Symbol(static_cast<SymbolKind>(block), index);
  }

  int index_of(const Symbol& s) const {
    if (!owns(s)) {
      throw ChartError("symbol " + s.name() + " does not belong to this chart");
    }
    return static_cast<int>(s.kind()) * m_ + s.index();
  }

  bool owns(const Symbol& s) const {
    if (s.index() < 1 || s.index() > m_) return false;
    if (s.is_fiber() && !tangent_) return false;
    return true;
  }

  // Unified index of the fiber coordinate paired with base coordinate A.
  int fiber_index(int a) const {
    if (!tangent_) throw ChartError("fiber indices exist on tangent charts only");
    if (a < 1 || a > 2 * m_) {
      throw ChartError("fiber_index expects a base coordinate index");
    }
    return a + 2 * m_;
  }

  std::vector<Symbol> symbols() const {
    std::vector<Symbol> out;
    out.reserve(arity());
    for (int a = 1; a <= arity(); ++a) out.push_back(symbol(a));
    return out;
  }

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.m_ == b.m_ && a.tangent_ == b.tangent_;
  }
  friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

 private:
  void check_index(int a) const {
    if (a < 1 || a > arity()) {
      throw ChartError("coordinate index " + std::to_string(a) +
                       " out of range 1.." + std::to_string(arity()));
    }
  }

  int m_;
  bool tangent_;
};

inline void require_same_chart(const Chart& a, const Chart& b,
                               const char* what) {
  if (a != b) throw ChartError(std::string(what) + ": chart mismatch");
}

}  // namespace paralift
