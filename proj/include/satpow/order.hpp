#pragma once

#include "satpow/errors.hpp"
#include "satpow/monomial.hpp"

namespace satpow {

enum class OrderKind { Lex, Grevlex, BlockElim };

// How free-module terms weigh position against monomial. Under
// PositionOverTerm the leading-term module splits per component, which is
// what the submodule pipeline relies on throughout.
enum class ModulePos { PositionOverTerm, TermOverPosition };

// Monomial and module-term comparison as a value type. Comparisons return
// -1 / 0 / +1. Lower component index counts as the greater position, so
// e_0 beats e_1 under position-over-term.
class Order {
 public:
  static Order lex() { return Order(OrderKind::Lex, 0); }
  static Order grevlex() { return Order(OrderKind::Grevlex, 0); }
  // First `split` variables form the block that is compared first; a
  // Groebner basis under this order eliminates them.
  static Order block_elim(int split) { return Order(OrderKind::BlockElim, split); }

  Order with_top() const {
    Order o = *this;
    o.pos_ = ModulePos::TermOverPosition;
    return o;
  }

  OrderKind kind() const { return kind_; }
  int split() const { return split_; }
  ModulePos module_pos() const { return pos_; }

  int cmp(const Monomial& u, const Monomial& v) const {
    if (u.nvars() != v.nvars()) throw AlgebraError("order arity mismatch");
    switch (kind_) {
      case OrderKind::Lex:
        return lex_range(u, v, 0, u.nvars());
      case OrderKind::Grevlex:
        return grevlex_range(u, v, 0, u.nvars());
      case OrderKind::BlockElim: {
        int r = grevlex_range(u, v, 0, static_cast<std::size_t>(split_));
        if (r) return r;
        return grevlex_range(u, v, static_cast<std::size_t>(split_), u.nvars());
      }
    }
    return 0;
  }

  int cmp_module(int cu, const Monomial& u, int cv, const Monomial& v) const {
    if (kind_ == OrderKind::BlockElim) {
      // Elimination block dominates even position, so t-free terms sort
      // strictly below anything carrying the auxiliary variable.
      int r = grevlex_range(u, v, 0, static_cast<std::size_t>(split_));
      if (r) return r;
      if (cu != cv) return cu < cv ? 1 : -1;
      return grevlex_range(u, v, static_cast<std::size_t>(split_), u.nvars());
    }
    if (pos_ == ModulePos::PositionOverTerm) {
      if (cu != cv) return cu < cv ? 1 : -1;
      return cmp(u, v);
    }
    int r = cmp(u, v);
    if (r) return r;
    if (cu != cv) return cu < cv ? 1 : -1;
    return 0;
  }

  friend bool operator==(const Order& a, const Order& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_ && a.pos_ == b.pos_;
  }
  friend bool operator!=(const Order& a, const Order& b) { return !(a == b); }

 private:
  Order(OrderKind k, int split) : kind_(k), split_(split) {}

  static int lex_range(const Monomial& u, const Monomial& v, std::size_t a,
                       std::size_t b) {
    for (std::size_t i = a; i < b; ++i)
      if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
    return 0;
  }

  static int grevlex_range(const Monomial& u, const Monomial& v, std::size_t a,
                           std::size_t b) {
    int du = u.degree_range(a, b), dv = v.degree_range(a, b);
    if (du != dv) return du > dv ? 1 : -1;
    for (std::size_t i = b; i-- > a;)
      if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
    return 0;
  }

  OrderKind kind_;
  int split_;
  ModulePos pos_ = ModulePos::PositionOverTerm;
};

}  // namespace satpow
