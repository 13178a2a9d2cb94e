#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace paralift {

// The four coordinate families of a (tangent) chart. The fixed total order
// base < conjugate-base < fiber < conjugate-fiber, then by index, governs
// canonical forms and printing everywhere.
enum class SymbolKind : std::uint8_t {
  Base = 0,       // z^a
  ConjBase = 1,   // zb^a
  Fiber = 2,      // u^a   (fiber coordinate paired with z^a)
  ConjFiber = 3,  // ub^a  (fiber coordinate paired with zb^a)
};

class Symbol {
 public:
  Symbol(SymbolKind kind, int index) : kind_(kind), index_(index) {}

  SymbolKind kind() const { return kind_; }
  int index() const { return index_; }  // 1-based

  bool is_fiber() const {
    return kind_ == SymbolKind::Fiber || kind_ == SymbolKind::ConjFiber;
  }

  std::string name() const {
    switch (kind_) {
      case SymbolKind::Base:
        return "z" + std::to_string(index_);
      case SymbolKind::ConjBase:
        return "zb" + std::to_string(index_);
      case SymbolKind::Fiber:
        return "u" + std::to_string(index_);
      case SymbolKind::ConjFiber:
        return "ub" + std::to_string(index_);
    }
    return "?";
  }

  friend auto operator<=>(const Symbol& a, const Symbol& b) = default;

 private:
  SymbolKind kind_;
  int index_;
};

// Parses "z3", "zb12", "u1", "ub2". Returns nullopt for anything else;
// chart ownership (index range, fiber availability) is checked separately.
inline std::optional<Symbol> parse_symbol_name(const std::string& name) {
  std::size_t i = 0;
  SymbolKind kind;
  if (name.size() >= 2 && name[0] == 'z' && name[1] == 'b') {
    kind = SymbolKind::ConjBase;
    i = 2;
  } else if (!name.empty() && name[0] == 'z') {
    kind = SymbolKind::Base;
    i = 1;
  } else if (name.size() >= 2 && name[0] == 'u' && name[1] == 'b') {
    kind = SymbolKind::ConjFiber;
    i = 2;
  } else if (!name.empty() && name[0] == 'u') {
    kind = SymbolKind::Fiber;
    i = 1;
  } else {
    return std::nullopt;
  }
  if (i >= name.size()) return std::nullopt;
  int index = 0;
  for (; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    index = index * 10 + (name[i] - '0');
    if (index > 1000000) return std::nullopt;
  }
  if (index < 1) return std::nullopt;
  return Symbol(kind, index);
}

}  // namespace paralift
