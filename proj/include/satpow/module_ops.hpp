#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satpow/ideal_ops.hpp"

namespace satpow {

// Submodule E of the free module F = R^gamma, given by finitely many
// generating vectors. rank_e is the generic rank of the generator matrix
// over the fraction field.
struct SubmoduleSpec {
  Ring ring;
  int gamma = 0;
  std::vector<VecPoly> gens;
  int rank_e = 0;
  Ring sym;                       // R[y_1..y_gamma]
  std::vector<Poly> linear_forms; // images w_j = sum_i f_ij * y_i
};

// Exact rank by cross-multiplication elimination; entries stay in R.
inline int polynomial_matrix_rank(std::vector<std::vector<Poly>> M) {
  if (M.empty()) return 0;
  std::size_t rows = M.size(), cols = M[0].size();
  std::vector<bool> row_done(rows, false), col_done(cols, false);
  int rank = 0;
  while (true) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = 0; r < rows && pr == rows; ++r) {
      if (row_done[r]) continue;
      for (std::size_t c = 0; c < cols; ++c)
        if (!col_done[c] && !M[r][c].is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    }
    if (pr == rows) return rank;
    ++rank;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || row_done[r] || M[r][pc].is_zero()) continue;
      Poly factor = M[r][pc];  // keep: the c == pc pass below zeroes it
      for (std::size_t c = 0; c < cols; ++c) {
        if (col_done[c]) continue;
        M[r][c] = M[pr][pc] * M[r][c] - factor * M[pr][c];
      }
    }
    row_done[pr] = true;
    col_done[pc] = true;
  }
}

inline SubmoduleSpec make_submodule(const Ring& ring, int gamma,
                                    const std::vector<VecPoly>& gens) {
  if (gamma <= 0) throw AlgebraError("ambient rank must be positive");
  SubmoduleSpec E;
  E.ring = ring;
  E.gamma = gamma;
  for (const auto& g : gens) {
    if (g.ring() != ring || g.rank() != gamma)
      throw AlgebraError("generator outside the stated free module");
    if (!g.is_zero()) E.gens.push_back(g);
  }
  std::vector<std::vector<Poly>> M(static_cast<std::size_t>(gamma));
  for (int i = 0; i < gamma; ++i)
    for (const auto& g : E.gens)
      M[static_cast<std::size_t>(i)].push_back(g.component(i));
  E.rank_e = E.gens.empty() ? 0 : polynomial_matrix_rank(std::move(M));
  E.sym = sym_extension(ring, gamma);
  std::vector<int> up(ring.nvars());
  for (std::size_t i = 0; i < ring.nvars(); ++i) up[i] = static_cast<int>(i);
  for (const auto& g : E.gens) {
    Poly w(E.sym);
    for (int i = 0; i < gamma; ++i)
      w += map_vars(g.component(i), E.sym, up) *
           Poly::variable(E.sym, ring.nvars() + static_cast<std::size_t>(i));
    E.linear_forms.push_back(w);
  }
  return E;
}

inline SubmoduleSpec make_submodule_from_ideal(const IdealRep& I) {
  std::vector<VecPoly> gens;
  for (const auto& g : I.gens) gens.push_back(wrap_poly(g));
  return make_submodule(I.ring, 1, gens);
}

// Degree-k graded slice of the symmetric algebra, written over the basis of
// y-monomials of degree k in descending grevlex order. Submodules of
// F^k = Sym_k(F) are lists of coordinate vectors over that basis.
struct GradedPiece {
  Ring ring;
  int k = 0;
  int gamma = 0;
  std::vector<Monomial> ybasis;  // gamma-variable monomials, degree k
  std::vector<VecPoly> gens;

  int ambient_rank() const { return static_cast<int>(ybasis.size()); }
};

namespace detail {

inline std::vector<Monomial> ybasis_of_degree(int gamma, int k) {
  auto monos = monomials_of_degree(static_cast<std::size_t>(gamma), k);
  Order ord = Order::grevlex();
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.cmp(a, b) > 0; });
  return monos;
}

inline int ybasis_index(const std::vector<Monomial>& basis, const Monomial& m) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == m) return static_cast<int>(i);
  throw AlgebraError("monomial outside the graded basis");
}

// Split a polynomial of S = R[y] with pure y-degree k into coordinates.
inline VecPoly piece_vector(const Ring& ring, int gamma,
                            const std::vector<Monomial>& ybasis, const Poly& s) {
  std::size_t d = ring.nvars();
  std::vector<std::vector<Term>> comps(ybasis.size());
  for (const auto& t : s.terms()) {
    Monomial xm(d), ym(static_cast<std::size_t>(gamma));
    for (std::size_t i = 0; i < d; ++i) xm[i] = t.mono[i];
    for (int j = 0; j < gamma; ++j)
      ym[static_cast<std::size_t>(j)] = t.mono[d + static_cast<std::size_t>(j)];
    comps[static_cast<std::size_t>(ybasis_index(ybasis, ym))].push_back(
        {std::move(xm), t.coef});
  }
  std::vector<Poly> out;
  out.reserve(comps.size());
  for (auto& terms : comps) out.push_back(Poly::from_terms(ring, std::move(terms)));
  return VecPoly::from_components(std::move(out));
}

inline Poly sym_poly(const Ring& sym, const Ring& ring, int gamma,
                     const std::vector<Monomial>& ybasis, const VecPoly& v) {
  std::vector<int> up(ring.nvars());
  for (std::size_t i = 0; i < ring.nvars(); ++i) up[i] = static_cast<int>(i);
  std::vector<Term> terms;
  for (int c = 0; c < v.rank(); ++c) {
    const Monomial& ym = ybasis[static_cast<std::size_t>(c)];
    for (const auto& t : v.component(c).terms()) {
      Monomial m(sym.nvars());
      for (std::size_t i = 0; i < ring.nvars(); ++i) m[i] = t.mono[i];
      for (int j = 0; j < gamma; ++j)
        m[ring.nvars() + static_cast<std::size_t>(j)] =
            ym[static_cast<std::size_t>(j)];
      terms.push_back({std::move(m), t.coef});
    }
  }
  return Poly::from_terms(sym, std::move(terms));
}

}  // namespace detail

inline GroebnerBasis piece_gb(const GradedPiece& P) {
  return buchberger(P.ring, P.ambient_rank(), P.gens);
}

inline bool piece_equal(const GradedPiece& A, const GradedPiece& B) {
  if (A.ring != B.ring || A.k != B.k || A.gamma != B.gamma) return false;
  return gb_equal(piece_gb(A), piece_gb(B));
}

// E^k inside Sym_k(F): all k-fold products of the linear forms, read back
// as coordinate vectors over the degree-k y-monomial basis.
inline GradedPiece module_power(const SubmoduleSpec& E, int k) {
  if (k <= 0) throw AlgebraError("power exponent must be positive");
  GradedPiece P;
  P.ring = E.ring;
  P.k = k;
  P.gamma = E.gamma;
  P.ybasis = detail::ybasis_of_degree(E.gamma, k);
  std::vector<Poly> prods;
  auto rec = [&](auto&& self, std::size_t from, int left, const Poly& acc) -> void {
    if (left == 0) {
      prods.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < E.linear_forms.size(); ++i)
      self(self, i, left - 1, acc * E.linear_forms[i]);
  };
  if (!E.linear_forms.empty())
    rec(rec, 0, k, Poly::constant(E.sym, Rational(1)));
  std::vector<VecPoly> gens;
  for (const auto& s : prods)
    gens.push_back(detail::piece_vector(E.ring, E.gamma, P.ybasis, s));
  std::sort(gens.begin(), gens.end(),
            [](const VecPoly& a, const VecPoly& b) { return vec_cmp(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) g = content_normalize(g);
  P.gens = std::move(gens);
  return P;
}

struct ModSatResult {
  GradedPiece piece;
  int n_stab = 0;
};

// Saturation of E^k with respect to m inside F^k, run through the ideal
// (ES)^k of S: saturate by the x-variables only, then take the y-degree-k
// slice. n_stab is the stabilization exponent of the colon chain.
inline ModSatResult module_saturate(const GradedPiece& Ek, long cap = 64) {
  Ring sym = sym_extension(Ek.ring, Ek.gamma);
  std::vector<Poly> jgens;
  for (const auto& v : Ek.gens)
    jgens.push_back(detail::sym_poly(sym, Ek.ring, Ek.gamma, Ek.ybasis, v));
  IdealRep J = make_ideal(sym, jgens);
  std::vector<int> xvars;
  for (std::size_t i = 0; i < Ek.ring.nvars(); ++i)
    xvars.push_back(static_cast<int>(i));
  IdealRep satJ = saturate_elim(J, xvars);
  ModSatResult res;
  res.n_stab = ideal_is_zero(J) ? 0 : saturation_exponent(J, satJ, xvars, cap);
  res.piece.ring = Ek.ring;
  res.piece.k = Ek.k;
  res.piece.gamma = Ek.gamma;
  res.piece.ybasis = Ek.ybasis;
  std::size_t d = Ek.ring.nvars();
  for (const auto& g : satJ.gens) {
    int ydeg = g.degree_range(d, d + static_cast<std::size_t>(Ek.gamma));
    for (const auto& t : g.terms())
      if (t.mono.degree_range(d, d + static_cast<std::size_t>(Ek.gamma)) != ydeg)
        throw AlgebraError("saturation lost y-homogeneity");
    if (ydeg < Ek.k) throw AlgebraError("saturation produced low y-degree");
    if (ydeg == Ek.k)
      res.piece.gens.push_back(
          detail::piece_vector(Ek.ring, Ek.gamma, Ek.ybasis, g));
  }
  return res;
}

namespace detail {

inline std::vector<VecPoly> module_intersect(const Ring& ring, int rank,
                                             const std::vector<VecPoly>& A,
                                             const std::vector<VecPoly>& B) {
  if (A.empty() || B.empty()) return {};
  Ring rt = adjoin_elim_var(ring);
  auto up = shift_map(ring.nvars());
  auto down = unshift_map(rt.nvars());
  Poly t = Poly::variable(rt, 0);
  Poly one_minus_t = Poly::constant(rt, Rational(1)) - t;
  std::vector<VecPoly> gens;
  for (const auto& a : A) gens.push_back(map_vars(a, rt, up).poly_mul(t));
  for (const auto& b : B) gens.push_back(map_vars(b, rt, up).poly_mul(one_minus_t));
  GroebnerBasis gb = buchberger(rt, rank, gens);
  std::vector<VecPoly> out;
  for (std::size_t i = 0; i < gb.gens.size(); ++i)
    if (gb.leads[i].second[0] == 0)
      out.push_back(map_vars(gb.gens[i], ring, down));
  return out;
}

// N : x_v inside R^rank, as (N cap x_v*F) / x_v.
inline std::vector<VecPoly> module_colon_var(const Ring& ring, int rank,
                                             const std::vector<VecPoly>& N,
                                             std::size_t v) {
  Poly xv = Poly::variable(ring, v);
  std::vector<VecPoly> xF;
  for (int c = 0; c < rank; ++c)
    xF.push_back(VecPoly::unit(ring, rank, c, xv));
  std::vector<VecPoly> cap = module_intersect(ring, rank, N, xF);
  std::vector<VecPoly> out;
  for (const auto& w : cap) {
    std::vector<Poly> comps;
    for (int c = 0; c < rank; ++c)
      comps.push_back(w.component(c).is_zero() ? Poly(ring)
                                               : poly_divexact(w.component(c), xv));
    out.push_back(VecPoly::from_components(std::move(comps)));
  }
  return out;
}

}  // namespace detail

// The same torsion submodule by a second, independent route: iterated colon
// of E^k by m directly inside the ambient free module.
inline ModSatResult torsion_h0(const GradedPiece& Ek, long cap = 64) {
  int rank = Ek.ambient_rank();
  GroebnerBasis cur = piece_gb(Ek);
  int n = 0;
  while (true) {
    std::optional<std::vector<VecPoly>> next;
    for (std::size_t v = 0; v < Ek.ring.nvars(); ++v) {
      auto part = detail::module_colon_var(Ek.ring, rank, cur.gens, v);
      next = next ? detail::module_intersect(Ek.ring, rank, *next, part) : part;
    }
    GroebnerBasis nxt = buchberger(Ek.ring, rank, *next);
    if (gb_equal(nxt, cur)) break;
    cur = std::move(nxt);
    ++n;
    if (cap > 0 && n > cap)
      throw AlgebraError("saturation iteration cap exceeded");
  }
  ModSatResult res;
  res.piece.ring = Ek.ring;
  res.piece.k = Ek.k;
  res.piece.gamma = Ek.gamma;
  res.piece.ybasis = Ek.ybasis;
  res.piece.gens = cur.gens;
  res.n_stab = n;
  return res;
}

struct LengthValue {
  bool finite = false;
  long long value = 0;

  static LengthValue of(long long v) { return {true, v}; }
  static LengthValue infinite() { return {false, 0}; }
};

struct LengthOptions {
  long cap = 256;
};

// Length of N/E for nested submodules of the same F^k. Finite exactly when
// the quotient is killed by a power of m; detected by searching for the
// least such power within the cap.
inline LengthValue quotient_length(const GradedPiece& N, const GradedPiece& E,
                                   LengthOptions opts = {}) {
  if (N.ring != E.ring || N.k != E.k || N.gamma != E.gamma)
    throw AlgebraError("graded pieces not comparable");
  GroebnerBasis gbN = piece_gb(N), gbE = piece_gb(E);
  for (const auto& g : E.gens)
    if (!contains(g, gbN))
      throw AlgebraError("expected submodule containment fails");
  if (gb_equal(gbN, gbE)) return LengthValue::of(0);

  std::size_t nv = N.ring.nvars();
  int D = -1;
  for (int cand = 0; cand <= opts.cap; ++cand) {
    bool ok = true;
    for (const auto& u : monomials_of_degree(nv, cand)) {
      for (const auto& g : gbN.gens) {
        if (!contains(g.term_mul(u, Rational(1)), gbE)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) {
      D = cand;
      break;
    }
  }
  if (D < 0) return LengthValue::infinite();

  auto homogeneous = [](const GroebnerBasis& gb) {
    for (const auto& g : gb.gens)
      if (!g.is_homogeneous()) return false;
    return true;
  };
  auto max_deg = [](const GroebnerBasis& gb) {
    int d = 0;
    for (const auto& g : gb.gens) d = std::max(d, g.max_total_degree());
    return d;
  };

  if (homogeneous(gbN) && homogeneous(gbE)) {
    // Graded route: N/E vanishes in degrees >= maxdeg(N) + D, so the sum of
    // Hilbert-function differences below that bound is the whole length.
    int T = max_deg(gbN) + D;
    long long total = 0;
    for (int t = 0; t < T; ++t)
      total += std_monomials_by_degree(gbE, t) - std_monomials_by_degree(gbN, t);
    if (std_monomials_by_degree(gbE, T) != std_monomials_by_degree(gbN, T) ||
        std_monomials_by_degree(gbE, T + 1) != std_monomials_by_degree(gbN, T + 1))
      throw AlgebraError("graded length bound violated");
    return LengthValue::of(total);
  }

  // Truncation route: chop both modules by m^B * F and count standard
  // monomials; B grows until two consecutive answers agree.
  int rank = N.ambient_rank();
  auto truncated_count = [&](const GroebnerBasis& gb, int B) {
    std::vector<VecPoly> gens = gb.gens;
    for (const auto& m : monomials_of_degree(nv, B))
      for (int c = 0; c < rank; ++c)
        gens.push_back(VecPoly::unit(N.ring, rank, c, Poly::monomial(N.ring, m)));
    GroebnerBasis cut = buchberger(N.ring, rank, gens);
    long long total = 0;
    for (int t = 0; t < B; ++t) total += std_monomials_by_degree(cut, t);
    return total;
  };
  int B = D + std::max(max_deg(gbN), max_deg(gbE));
  long long prev = truncated_count(gbE, B) - truncated_count(gbN, B);
  for (int step = 0; step < opts.cap; ++step) {
    long long next = truncated_count(gbE, B + 1) - truncated_count(gbN, B + 1);
    if (next == prev) return LengthValue::of(prev);
    prev = next;
    ++B;
  }
  throw AlgebraError("truncated length failed to stabilize");
}

// Coordinate image of Sym multiplication; the product of the degree-a and
// degree-b slices lands in degree a+b.
inline GradedPiece graded_product(const GradedPiece& A, const GradedPiece& B) {
  if (A.ring != B.ring || A.gamma != B.gamma)
    throw AlgebraError("graded pieces not compatible");
  GradedPiece P;
  P.ring = A.ring;
  P.k = A.k + B.k;
  P.gamma = A.gamma;
  P.ybasis = detail::ybasis_of_degree(A.gamma, P.k);
  for (const auto& a : A.gens)
    for (const auto& b : B.gens) {
      std::vector<Poly> comps(P.ybasis.size(), Poly(P.ring));
      for (int ca = 0; ca < a.rank(); ++ca) {
        if (a.component(ca).is_zero()) continue;
        for (int cb = 0; cb < b.rank(); ++cb) {
          if (b.component(cb).is_zero()) continue;
          int target = detail::ybasis_index(
              P.ybasis, A.ybasis[static_cast<std::size_t>(ca)] *
                            B.ybasis[static_cast<std::size_t>(cb)]);
          comps[static_cast<std::size_t>(target)] +=
              a.component(ca) * b.component(cb);
        }
      }
      P.gens.push_back(VecPoly::from_components(std::move(comps)));
    }
  return P;
}

// Rank-1 pieces are ideals; unwrap for cross-checks against the ideal path.
inline IdealRep piece_to_ideal(const GradedPiece& P) {
  if (P.ambient_rank() != 1) throw AlgebraError("piece is not rank one");
  std::vector<Poly> gens;
  for (const auto& g : P.gens) gens.push_back(g.component(0));
  return make_ideal(P.ring, gens);
}

}  // namespace satpow
