#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdio>
#include <string>

#include "satpow/errors.hpp"

namespace satpow {

// Exact rational number. Always stored reduced with positive denominator.
// Every comparison and arithmetic step in the library is exact; floating
// point only ever appears in the render helpers at the very end.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit integer literals are handy
  Rational(const mpz_class& n) : q_(n) {}
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw AlgebraError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  // Accepts "p", "p/q" and decimal strings like "-0.15".
  static Rational parse(const std::string& text) {
    if (text.empty()) throw AlgebraError("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      return Rational(to_mpz(text.substr(0, slash)),
                      to_mpz(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      mpz_class den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Rational(to_mpz(digits), den);
    }
    return Rational(to_mpz(text));
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw AlgebraError("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  // Exact form, "p" or "p/q".
  std::string str() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
    return s;
  }

  // Render-only helpers; never feed these back into the algebra.
  double to_double() const { return q_.get_d(); }
  std::string decimal(int sig_digits = 6) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig_digits, q_.get_d());
    return buf;
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  static mpz_class to_mpz(const std::string& s) {
    std::size_t i = (s.size() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw AlgebraError("bad integer literal: " + s);
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw AlgebraError("bad integer literal: " + s);
    return mpz_class(s, 10);
  }

  mpq_class q_;
};

inline mpz_class int_pow(long base, unsigned exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

inline mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline long long binomial_ll(long n, long r) {
  if (r < 0 || r > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  if (!b.fits_slong_p()) throw AlgebraError("binomial overflow");
  return b.get_si();
}

}  // namespace satpow
