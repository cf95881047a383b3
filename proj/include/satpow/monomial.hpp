#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "satpow/errors.hpp"

namespace satpow {

// Exponent vector. The ring it lives in is tracked by the caller; two
// monomials may only meet in an operation when their lengths agree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t p = 1) {
    Monomial m(nvars);
    m.e_[i] = p;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exps() const { return e_; }

  int total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
  }
  int degree_range(std::size_t from, std::size_t to) const {
    int d = 0;
    for (std::size_t i = from; i < to; ++i) d += static_cast<int>(e_[i]);
    return d;
  }

  bool is_one() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }

  bool divides(const Monomial& o) const {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }

  // this / b; requires b | this.
  Monomial div_by(const Monomial& b) const {
    check(b);
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (b.e_[i] > e_[i]) throw AlgebraError("monomial division not exact");
      r.e_[i] = e_[i] - b.e_[i];
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return a.e_ != b.e_;
  }

 private:
  void check(const Monomial& o) const {
    if (e_.size() != o.e_.size())
      throw AlgebraError("monomial arity mismatch");
  }

  std::vector<std::uint32_t> e_;
};

// All monomials of the given total degree, in no particular order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int deg) {
  if (deg < 0) throw AlgebraError("negative degree");
  std::vector<Monomial> out;
  Monomial cur(nvars);
  // Walk compositions of deg into nvars parts.
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == nvars) {
      cur[var] = static_cast<std::uint32_t>(left);
      out.push_back(cur);
      return;
    }
    for (int take = left; take >= 0; --take) {
      cur[var] = static_cast<std::uint32_t>(take);
      self(self, var + 1, left - take);
    }
    cur[var] = 0;
  };
  if (nvars == 0) {
    if (deg == 0) out.push_back(Monomial(std::size_t{0}));
    return out;
  }
  rec(rec, 0, deg);
  return out;
}

}  // namespace satpow
