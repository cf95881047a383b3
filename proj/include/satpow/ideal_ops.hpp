#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "satpow/groebner.hpp"
#include "satpow/monomial_oracle.hpp"

namespace satpow {

// Finitely generated ideal of its ring. Generators are nonzero; the zero
// ideal is the empty list. cached_gb, when present, is a reduced basis of
// the same ideal.
struct IdealRep {
  Ring ring;
  std::vector<Poly> gens;
  std::shared_ptr<const GroebnerBasis> cached_gb;
};

inline IdealRep make_ideal(const Ring& ring, const std::vector<Poly>& gens) {
  IdealRep I;
  I.ring = ring;
  for (const auto& g : gens) {
    if (g.ring() != ring) throw AlgebraError("generator outside the ring");
    if (!g.is_zero()) I.gens.push_back(g);
  }
  return I;
}

inline std::shared_ptr<const GroebnerBasis> ideal_gb(const IdealRep& I) {
  if (I.cached_gb) return I.cached_gb;
  return std::make_shared<GroebnerBasis>(buchberger_ideal(I.ring, I.gens));
}

inline IdealRep ideal_from_gb(std::shared_ptr<const GroebnerBasis> gb) {
  IdealRep I;
  I.ring = gb->ring;
  I.gens = gb_ideal_gens(*gb);
  I.cached_gb = std::move(gb);
  return I;
}

// Reduced-basis generators; canonical per (ideal, order).
inline IdealRep canonical(const IdealRep& I) { return ideal_from_gb(ideal_gb(I)); }

inline bool equal_ideals(const IdealRep& A, const IdealRep& B) {
  if (A.ring != B.ring) throw AlgebraError("ring mismatch");
  return gb_equal(*ideal_gb(A), *ideal_gb(B));
}

inline bool ideal_is_zero(const IdealRep& I) { return I.gens.empty(); }

inline bool ideal_is_unit(const IdealRep& I) {
  auto gb = ideal_gb(I);
  return gb->contains_monomial(0, Monomial(I.ring.nvars()));
}

// All k-fold products of the generators, duplicates removed.
inline IdealRep ideal_power(const IdealRep& I, int k) {
  if (k <= 0) throw AlgebraError("power exponent must be positive");
  if (ideal_is_zero(I)) return I;
  std::vector<Poly> prods;
  auto rec = [&](auto&& self, std::size_t from, int left, const Poly& acc) -> void {
    if (left == 0) {
      prods.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < I.gens.size(); ++i)
      self(self, i, left - 1, acc * I.gens[i]);
  };
  rec(rec, 0, k, Poly::constant(I.ring, Rational(1)));
  for (auto& p : prods) p = content_normalize(p);
  std::sort(prods.begin(), prods.end(),
            [](const Poly& a, const Poly& b) { return poly_cmp(a, b) < 0; });
  prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
  return make_ideal(I.ring, prods);
}

namespace detail {

// Variable maps between R and R[t] with t in front.
inline std::vector<int> shift_map(std::size_t nvars) {
  std::vector<int> m(nvars);
  for (std::size_t i = 0; i < nvars; ++i) m[i] = static_cast<int>(i) + 1;
  return m;
}
inline std::vector<int> unshift_map(std::size_t nvars_with_t) {
  std::vector<int> m(nvars_with_t);
  m[0] = -1;
  for (std::size_t i = 1; i < nvars_with_t; ++i) m[i] = static_cast<int>(i) - 1;
  return m;
}

}  // namespace detail

// Intersection through one auxiliary variable: I cap J is the t-free part
// of t*I + (1-t)*J in R[t] under an order eliminating t.
inline IdealRep intersect(const IdealRep& A, const IdealRep& B) {
  if (A.ring != B.ring) throw AlgebraError("ring mismatch");
  if (ideal_is_zero(A) || ideal_is_zero(B)) return make_ideal(A.ring, {});
  Ring rt = adjoin_elim_var(A.ring);
  auto up = detail::shift_map(A.ring.nvars());
  Poly t = Poly::variable(rt, 0);
  Poly one_minus_t = Poly::constant(rt, Rational(1)) - t;
  std::vector<Poly> gens;
  for (const auto& f : A.gens) gens.push_back(t * map_vars(f, rt, up));
  for (const auto& g : B.gens) gens.push_back(one_minus_t * map_vars(g, rt, up));
  GroebnerBasis gb = buchberger_ideal(rt, gens);
  auto down = detail::unshift_map(rt.nvars());
  std::vector<Poly> out;
  for (const auto& v : gb.gens) {
    const Poly& p = v.component(0);
    if (p.leading_monomial()[0] == 0) out.push_back(map_vars(p, A.ring, down));
  }
  return canonical(make_ideal(A.ring, out));
}

// I : g via (1/g) * (I cap (g)).
inline IdealRep colon(const IdealRep& I, const Poly& g) {
  if (g.ring() != I.ring) throw AlgebraError("ring mismatch");
  if (g.is_zero()) throw AlgebraError("colon by zero");
  if (ideal_is_zero(I)) return I;
  if (g.is_monomial() && g.leading_monomial().is_one()) return canonical(I);
  IdealRep cap = intersect(I, make_ideal(I.ring, {g}));
  std::vector<Poly> out;
  out.reserve(cap.gens.size());
  for (const auto& f : cap.gens) out.push_back(poly_divexact(f, g));
  return canonical(make_ideal(I.ring, out));
}

inline IdealRep colon(const IdealRep& I, const IdealRep& J) {
  if (I.ring != J.ring) throw AlgebraError("ring mismatch");
  if (ideal_is_zero(J)) throw AlgebraError("colon by zero ideal");
  std::optional<IdealRep> acc;
  for (const auto& g : J.gens) {
    IdealRep part = colon(I, g);
    acc = acc ? intersect(*acc, part) : part;
  }
  return canonical(*acc);
}

struct SatOptions {
  std::vector<int> sat_vars;  // indices of the variables generating m; empty = all
  long cap = 64;              // max colon iterations
};

struct SatResult {
  IdealRep saturation;
  int n_stab;
  std::vector<IdealRep> chain;  // I = chain[0] subset chain[1] subset ...
};

namespace detail {

inline std::vector<int> all_vars(const Ring& r) {
  std::vector<int> v(r.nvars());
  for (std::size_t i = 0; i < r.nvars(); ++i) v[i] = static_cast<int>(i);
  return v;
}

}  // namespace detail

// Iterated colon I : m, I : m^2, ... until the chain stops moving. n_stab
// is the first exponent at which it does.
inline SatResult saturate_colon(const IdealRep& I, SatOptions opts = {}) {
  std::vector<int> vars =
      opts.sat_vars.empty() ? detail::all_vars(I.ring) : opts.sat_vars;
  SatResult res;
  res.chain.push_back(canonical(I));
  res.n_stab = 0;
  while (true) {
    const IdealRep& cur = res.chain.back();
    std::optional<IdealRep> next;
    for (int v : vars) {
      IdealRep part = colon(cur, Poly::variable(I.ring, static_cast<std::size_t>(v)));
      next = next ? intersect(*next, part) : part;
    }
    if (gb_equal(*ideal_gb(*next), *ideal_gb(cur))) break;
    res.chain.push_back(*next);
    ++res.n_stab;
    if (opts.cap > 0 && res.n_stab > opts.cap)
      throw AlgebraError("saturation iteration cap exceeded");
  }
  res.saturation = res.chain.back();
  return res;
}

// Per-variable saturation by elimination: the t-free part of
// (I, 1 - t*x_i) in R[t] is I : x_i^inf; intersect over the variables.
inline IdealRep saturate_elim(const IdealRep& I, std::vector<int> sat_vars = {}) {
  if (ideal_is_zero(I)) return I;
  std::vector<int> vars = sat_vars.empty() ? detail::all_vars(I.ring) : sat_vars;
  Ring rt = adjoin_elim_var(I.ring);
  auto up = detail::shift_map(I.ring.nvars());
  auto down = detail::unshift_map(rt.nvars());
  std::optional<IdealRep> acc;
  for (int v : vars) {
    std::vector<Poly> gens;
    for (const auto& f : I.gens) gens.push_back(map_vars(f, rt, up));
    Poly t = Poly::variable(rt, 0);
    Poly xv = Poly::variable(rt, static_cast<std::size_t>(v) + 1);
    gens.push_back(Poly::constant(rt, Rational(1)) - t * xv);
    GroebnerBasis gb = buchberger_ideal(rt, gens);
    std::vector<Poly> out;
    for (const auto& w : gb.gens) {
      const Poly& p = w.component(0);
      if (p.leading_monomial()[0] == 0) out.push_back(map_vars(p, I.ring, down));
    }
    IdealRep part = canonical(make_ideal(I.ring, out));
    acc = acc ? intersect(*acc, part) : part;
  }
  return canonical(*acc);
}

// Least D with m^D * N inside I, given that N sits inside the saturation
// of I. Retraces the stabilization exponent without walking the chain.
inline int saturation_exponent(const IdealRep& I, const IdealRep& N,
                               const std::vector<int>& sat_vars, long cap) {
  auto gbI = ideal_gb(I);
  IdealRep Nc = canonical(N);
  for (int D = 0;; ++D) {
    bool ok = true;
    for (const auto& u : monomials_of_degree(sat_vars.size(), D)) {
      Monomial m(I.ring.nvars());
      for (std::size_t s = 0; s < sat_vars.size(); ++s)
        m[static_cast<std::size_t>(sat_vars[s])] = u[s];
      for (const auto& g : Nc.gens) {
        if (!contains(g.term_mul(m, Rational(1)), *gbI)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return D;
    if (cap > 0 && D >= cap)
      throw AlgebraError("saturation exponent search exceeded cap");
  }
}

// Hilbert function of R/I at degree t. Requires homogeneous generators.
inline long long hilbert_count(const IdealRep& I, int t) {
  for (const auto& g : I.gens)
    if (!g.is_homogeneous())
      throw AlgebraError("hilbert count requires homogeneous generators");
  return std_monomials_by_degree(*ideal_gb(I), t);
}

// Bridges between the Groebner-side representation and the combinatorial
// oracle. An ideal crosses over only if every generator is a single term.
inline std::optional<MonomialIdeal> to_monomial_ideal(const IdealRep& I) {
  std::vector<Monomial> gens;
  for (const auto& g : I.gens) {
    if (!g.is_monomial()) return std::nullopt;
    gens.push_back(g.leading_monomial());
  }
  return MonomialIdeal::make(I.ring.nvars(), std::move(gens));
}

inline IdealRep from_monomial_ideal(const Ring& ring, const MonomialIdeal& M) {
  if (ring.nvars() != M.nvars()) throw AlgebraError("ring arity mismatch");
  std::vector<Poly> gens;
  for (const auto& m : M.gens()) gens.push_back(Poly::monomial(ring, m));
  return make_ideal(ring, gens);
}

}  // namespace satpow
