#pragma once

#include <string>
#include <utility>
#include <vector>

#include "satpow/poly.hpp"

namespace satpow {

// Element of a free module R^rank, stored componentwise. Component 0 is the
// greatest position under position-over-term.
class VecPoly {
 public:
  VecPoly() = default;
  VecPoly(Ring ring, int rank) : ring_(std::move(ring)) {
    if (rank <= 0) throw AlgebraError("module rank must be positive");
    comps_.assign(static_cast<std::size_t>(rank), Poly(ring_));
  }

  static VecPoly from_components(std::vector<Poly> comps) {
    if (comps.empty()) throw AlgebraError("empty component list");
    VecPoly v;
    v.ring_ = comps.front().ring();
    for (const auto& c : comps) c.check_ring(comps.front());
    v.comps_ = std::move(comps);
    return v;
  }

  static VecPoly unit(const Ring& ring, int rank, int comp, Poly p) {
    VecPoly v(ring, rank);
    p.check_ring(Poly(ring));
    v.comps_[static_cast<std::size_t>(comp)] = std::move(p);
    return v;
  }

  const Ring& ring() const { return ring_; }
  int rank() const { return static_cast<int>(comps_.size()); }
  const Poly& component(int i) const { return comps_[static_cast<std::size_t>(i)]; }
  const std::vector<Poly>& components() const { return comps_; }

  bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }

  struct Lead {
    int comp;
    Monomial mono;
    Rational coef;
  };

  // Greatest term under the ring's module order.
  Lead leading() const {
    const Order& ord = ring_.order();
    int best = -1;
    for (int c = 0; c < rank(); ++c) {
      if (comps_[static_cast<std::size_t>(c)].is_zero()) continue;
      if (best < 0) {
        best = c;
        continue;
      }
      const Monomial& mb = comps_[static_cast<std::size_t>(best)].leading_monomial();
      const Monomial& mc = comps_[static_cast<std::size_t>(c)].leading_monomial();
      if (ord.cmp_module(c, mc, best, mb) > 0) best = c;
    }
    if (best < 0) throw AlgebraError("leading term of zero vector");
    const Term& t = comps_[static_cast<std::size_t>(best)].leading_term();
    return {best, t.mono, t.coef};
  }

  friend VecPoly operator+(const VecPoly& a, const VecPoly& b) {
    a.check(b);
    VecPoly r = a;
    for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] += b.comps_[i];
    return r;
  }
  friend VecPoly operator-(const VecPoly& a, const VecPoly& b) {
    a.check(b);
    VecPoly r = a;
    for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] -= b.comps_[i];
    return r;
  }
  VecPoly& operator+=(const VecPoly& o) { return *this = *this + o; }
  VecPoly& operator-=(const VecPoly& o) { return *this = *this - o; }

  VecPoly scaled(const Rational& c) const {
    VecPoly r = *this;
    for (auto& p : r.comps_) p = p.scaled(c);
    return r;
  }

  VecPoly term_mul(const Monomial& m, const Rational& c) const {
    VecPoly r = *this;
    for (auto& p : r.comps_) p = p.term_mul(m, c);
    return r;
  }

  VecPoly poly_mul(const Poly& f) const {
    VecPoly r = *this;
    for (auto& p : r.comps_) p = p * f;
    return r;
  }

  // this -= c * x^m * g; the reduction step.
  void sub_scaled(const VecPoly& g, const Monomial& m, const Rational& c) {
    check(g);
    for (std::size_t i = 0; i < comps_.size(); ++i)
      if (!g.comps_[i].is_zero())
        comps_[i] -= g.comps_[i].term_mul(m, c);
  }

  void set_component(int i, Poly p) {
    comps_[static_cast<std::size_t>(i)] = std::move(p);
  }

  void drop_leading(int comp) {
    comps_[static_cast<std::size_t>(comp)] =
        comps_[static_cast<std::size_t>(comp)].without_leading();
  }

  bool is_homogeneous() const {
    int deg = -1;
    for (const auto& c : comps_) {
      for (const auto& t : c.terms()) {
        int d = t.mono.total_degree();
        if (deg < 0) deg = d;
        if (d != deg) return false;
      }
    }
    return true;
  }

  int max_total_degree() const {
    int deg = -1;
    for (const auto& c : comps_)
      if (!c.is_zero()) deg = std::max(deg, c.total_degree());
    if (deg < 0) throw AlgebraError("degree of zero vector");
    return deg;
  }

  friend bool operator==(const VecPoly& a, const VecPoly& b) {
    return a.ring_ == b.ring_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const VecPoly& a, const VecPoly& b) { return !(a == b); }

 private:
  void check(const VecPoly& o) const {
    if (ring_ != o.ring_ || comps_.size() != o.comps_.size())
      throw AlgebraError("module mismatch");
  }

  Ring ring_;
  std::vector<Poly> comps_;
};

inline VecPoly monic(const VecPoly& v) {
  if (v.is_zero()) return v;
  return v.scaled(Rational(1) / v.leading().coef);
}

inline VecPoly content_normalize(const VecPoly& v) {
  if (v.is_zero()) return v;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& c : v.components())
    for (const auto& t : c.terms()) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.denominator().get_mpz_t());
      den_lcm = l;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.numerator().get_mpz_t());
      num_gcd = g;
    }
  Rational scale(den_lcm, num_gcd);
  if (v.leading().coef.sign() < 0) scale = -scale;
  return v.scaled(scale);
}

inline int vec_cmp(const VecPoly& a, const VecPoly& b) {
  for (int i = 0; i < a.rank() && i < b.rank(); ++i) {
    int c = poly_cmp(a.component(i), b.component(i));
    if (c) return c;
  }
  if (a.rank() != b.rank()) return a.rank() < b.rank() ? -1 : 1;
  return 0;
}

inline VecPoly map_vars(const VecPoly& v, const Ring& target,
                        const std::vector<int>& var_map) {
  std::vector<Poly> comps;
  comps.reserve(static_cast<std::size_t>(v.rank()));
  for (const auto& c : v.components())
    comps.push_back(map_vars(c, target, var_map));
  return VecPoly::from_components(std::move(comps));
}

inline std::string to_string(const VecPoly& v) {
  std::string s = "[";
  for (int i = 0; i < v.rank(); ++i) {
    if (i) s += ", ";
    s += to_string(v.component(i));
  }
  return s + "]";
}

}  // namespace satpow
