#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "satpow/monomial.hpp"
#include "satpow/rational.hpp"
#include "satpow/ring.hpp"

namespace satpow {

struct Term {
  Monomial mono;
  Rational coef;
};

// Sparse polynomial over Q. Terms are kept strictly descending in the
// ring's order with nonzero coefficients; every constructor and operation
// restores that invariant.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly constant(const Ring& ring, const Rational& c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring.nvars()), c});
    return p;
  }
  static Poly variable(const Ring& ring, std::size_t i, std::uint32_t pow = 1) {
    Poly p(ring);
    if (pow == 0) return constant(ring, 1);
    p.terms_.push_back({Monomial::var(ring.nvars(), i, pow), Rational(1)});
    return p;
  }
  static Poly monomial(const Ring& ring, Monomial m, Rational c = Rational(1)) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  static Poly from_terms(const Ring& ring, std::vector<Term> terms) {
    Poly p(ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const {
    if (is_zero()) throw AlgebraError("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coef() const { return leading_term().coef; }

  int total_degree() const {
    if (is_zero()) throw AlgebraError("degree of zero polynomial");
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
  }

  int degree_range(std::size_t from, std::size_t to) const {
    if (is_zero()) throw AlgebraError("degree of zero polynomial");
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree_range(from, to));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.size() <= 1) return true;
    int d = terms_.front().mono.total_degree();
    for (const auto& t : terms_)
      if (t.mono.total_degree() != d) return false;
    return true;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merged(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merged(a, b, true); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        acc.push_back({ta.mono * tb.mono, ta.coef * tb.coef});
    r.terms_ = std::move(acc);
    r.normalize();
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }

  // c * x^m * this, preserving term order (shift by a monomial is monotone).
  Poly term_mul(const Monomial& m, const Rational& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;
  }

  Poly pow(unsigned k) const {
    Poly r = constant(ring_, 1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  Poly without_leading() const {
    if (is_zero()) throw AlgebraError("leading term of zero polynomial");
    Poly r(ring_);
    r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono ||
          a.terms_[i].coef != b.terms_[i].coef)
        return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  void check_ring(const Poly& o) const {
    if (ring_ != o.ring_) throw AlgebraError("ring mismatch");
  }

 private:
  void normalize() {
    const Order& ord = ring_.order();
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
      return ord.cmp(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (t.coef.is_zero()) continue;
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coef += t.coef;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
  }

  static Poly merged(const Poly& a, const Poly& b, bool subtract) {
    a.check_ring(b);
    const Order& ord = a.ring_.order();
    Poly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = ord.cmp(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coef = -t.coef;
        r.terms_.push_back(std::move(t));
      } else {
        Rational c2 = subtract ? a.terms_[i].coef - b.terms_[j].coef
                               : a.terms_[i].coef + b.terms_[j].coef;
        if (!c2.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(c2)});
        ++i, ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      Term t = b.terms_[j];
      if (subtract) t.coef = -t.coef;
      r.terms_.push_back(std::move(t));
    }
    return r;
  }

  Ring ring_;
  std::vector<Term> terms_;
};

// Leading coefficient 1.
inline Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading_coef());
}

// Integer-primitive form: clear denominators, divide out the numerator gcd,
// make the leading coefficient positive. Keeps Buchberger's intermediate
// coefficients from snowballing.
inline Poly content_normalize(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.denominator().get_mpz_t());
    den_lcm = l;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.numerator().get_mpz_t());
    num_gcd = g;
  }
  Rational scale(den_lcm, num_gcd);
  if (p.leading_coef().sign() < 0) scale = -scale;
  return p.scaled(scale);
}

// Quotient of f by a single divisor g, which must divide exactly.
inline Poly poly_divexact(const Poly& f, const Poly& g) {
  f.check_ring(g);
  if (g.is_zero()) throw AlgebraError("division by zero polynomial");
  Poly r = f, q(f.ring());
  std::vector<Term> qt;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!g.leading_monomial().divides(lt.mono))
      throw AlgebraError("polynomial division not exact");
    Monomial m = lt.mono.div_by(g.leading_monomial());
    Rational c = lt.coef / g.leading_coef();
    r -= g.term_mul(m, c);
    qt.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(f.ring(), std::move(qt));
}

// Deterministic total order on polynomials of one ring; used to keep
// generated bases and generator lists in a reproducible sequence.
inline int poly_cmp(const Poly& a, const Poly& b) {
  const Order& ord = a.ring().order();
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = ord.cmp(a.terms()[i].mono, b.terms()[i].mono);
    if (c) return c;
    if (a.terms()[i].coef != b.terms()[i].coef)
      return a.terms()[i].coef < b.terms()[i].coef ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

// Move p into `target` sending source variable i to target slot var_map[i];
// a map entry of -1 requires that variable to be absent from p.
inline Poly map_vars(const Poly& p, const Ring& target,
                     const std::vector<int>& var_map) {
  if (var_map.size() != p.ring().nvars())
    throw AlgebraError("variable map arity mismatch");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target.nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (var_map[i] < 0) {
        if (t.mono[i]) throw AlgebraError("variable not eliminated");
      } else {
        m[static_cast<std::size_t>(var_map[i])] = t.mono[i];
      }
    }
    terms.push_back({std::move(m), t.coef});
  }
  return Poly::from_terms(target, std::move(terms));
}

inline std::string monomial_str(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

// Canonical text form, parseable by the job grammar.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    if (first) {
      if (c.sign() < 0) {
        s += "-";
        c = -c;
      }
      first = false;
    } else if (c.sign() < 0) {
      s += " - ";
      c = -c;
    } else {
      s += " + ";
    }
    std::string ms = monomial_str(p.ring(), t.mono);
    if (ms.empty()) {
      s += c.str();
    } else {
      if (c != Rational(1)) s += c.str() + "*";
      s += ms;
    }
  }
  return s;
}

}  // namespace satpow
