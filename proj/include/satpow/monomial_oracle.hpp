#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "satpow/monomial.hpp"
#include "satpow/order.hpp"

namespace satpow {

// Independent combinatorial route for monomial ideals. Everything here is
// exponent-vector arithmetic; none of it touches the Groebner engine, so the
// two pipelines can be played against each other.
class MonomialIdeal {
 public:
  static MonomialIdeal make(std::size_t nvars, std::vector<Monomial> gens) {
    MonomialIdeal I;
    I.nvars_ = nvars;
    I.gens_ = minimalize(std::move(gens));
    return I;
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  int max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.total_degree());
    return d;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

 private:
  // Keep the divisibility antichain, sorted descending grevlex so the
  // generator list is canonical.
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Monomial& a, const Monomial& b) {
                       return a.total_degree() < b.total_degree();
                     });
    for (const auto& g : gens) {
      bool redundant = false;
      for (const auto& kept : out)
        if (kept.divides(g)) {
          redundant = true;
          break;
        }
      if (!redundant) out.push_back(g);
    }
    Order ord = Order::grevlex();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
      return ord.cmp(a, b) > 0;
    });
    return out;
  }

  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal mono_power(const MonomialIdeal& I, int k) {
  if (k <= 0) throw AlgebraError("power exponent must be positive");
  if (I.is_zero()) return I;
  // All k-fold products of generators, i.e. sums over k-multisets.
  std::vector<Monomial> prods;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from, int left, Monomial acc) -> void {
    if (left == 0) {
      prods.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < I.gens().size(); ++i)
      self(self, i, left - 1, acc * I.gens()[i]);
  };
  rec(rec, 0, k, Monomial(I.nvars()));
  return MonomialIdeal::make(I.nvars(), std::move(prods));
}

inline MonomialIdeal mono_intersect(const MonomialIdeal& A, const MonomialIdeal& B) {
  if (A.nvars() != B.nvars()) throw AlgebraError("monomial ideal arity mismatch");
  std::vector<Monomial> gens;
  for (const auto& a : A.gens())
    for (const auto& b : B.gens()) gens.push_back(lcm(a, b));
  return MonomialIdeal::make(A.nvars(), std::move(gens));
}

inline MonomialIdeal mono_colon_mono(const MonomialIdeal& I, const Monomial& w) {
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    Monomial q(I.nvars());
    for (std::size_t i = 0; i < I.nvars(); ++i)
      q[i] = g[i] > w[i] ? g[i] - w[i] : 0;
    gens.push_back(q);
  }
  return MonomialIdeal::make(I.nvars(), std::move(gens));
}

inline MonomialIdeal mono_colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (J.is_zero()) throw AlgebraError("colon by zero ideal");
  bool first = true;
  MonomialIdeal acc;
  for (const auto& w : J.gens()) {
    MonomialIdeal part = mono_colon_mono(I, w);
    acc = first ? part : mono_intersect(acc, part);
    first = false;
  }
  return acc;
}

// I : x_i^inf zeroes the i-th exponent of every generator; the saturation
// with respect to the whole variable ideal is the intersection over i.
inline MonomialIdeal mono_saturate(const MonomialIdeal& I) {
  if (I.is_zero()) return I;
  MonomialIdeal acc;
  bool first = true;
  for (std::size_t i = 0; i < I.nvars(); ++i) {
    std::vector<Monomial> gens;
    for (const auto& g : I.gens()) {
      Monomial q = g;
      q[i] = 0;
      gens.push_back(q);
    }
    MonomialIdeal part = MonomialIdeal::make(I.nvars(), std::move(gens));
    acc = first ? part : mono_intersect(acc, part);
    first = false;
  }
  return acc;
}

struct MonoSatResult {
  MonomialIdeal saturation;
  int n_stab;
};

// Saturation together with the stabilization count of the colon chain
// I : m, I : m^2, ... where m is the full variable ideal.
inline MonoSatResult mono_saturate_steps(const MonomialIdeal& I, long cap = 0) {
  if (I.is_zero()) return {I, 0};
  MonomialIdeal vars = MonomialIdeal::make(
      I.nvars(), [&] {
        std::vector<Monomial> v;
        for (std::size_t i = 0; i < I.nvars(); ++i)
          v.push_back(Monomial::var(I.nvars(), i));
        return v;
      }());
  MonomialIdeal cur = I;
  int n = 0;
  while (true) {
    MonomialIdeal next = mono_colon(cur, vars);
    if (next == cur) return {cur, n};
    cur = next;
    ++n;
    if (cap > 0 && n > cap)
      throw AlgebraError("saturation iteration cap exceeded");
  }
}

// Number of monomials in N \ I, or nullopt when N/I is not killed by a
// power of the variable ideal (infinite length).
inline std::optional<long long> mono_length_diff(const MonomialIdeal& N,
                                                 const MonomialIdeal& I) {
  if (N.nvars() != I.nvars()) throw AlgebraError("monomial ideal arity mismatch");
  // Torsion test is exact: every generator of N must land in sat(I).
  MonomialIdeal satI = mono_saturate(I);
  for (const auto& g : N.gens())
    if (!satI.contains(g)) return std::nullopt;
  if (N.is_zero()) return 0;
  // Find the least D with m^D * N inside I; beyond degree maxdeg(N) + D
  // every monomial of N lies in I, so the count below is complete.
  int D = 0;
  while (true) {
    bool ok = true;
    for (const auto& g : N.gens()) {
      for (const auto& u : monomials_of_degree(N.nvars(), D)) {
        if (!I.contains(g * u)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) break;
    ++D;
    if (D > 64 * (N.max_gen_degree() + I.max_gen_degree() + 1))
      throw AlgebraError("torsion exponent search exceeded cap");
  }
  int bound = N.max_gen_degree() + D;
  long long count = 0;
  for (int t = 0; t < bound; ++t)
    for (const auto& w : monomials_of_degree(N.nvars(), t))
      if (N.contains(w) && !I.contains(w)) ++count;
  return count;
}

}  // namespace satpow
