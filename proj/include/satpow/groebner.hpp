#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "satpow/vecpoly.hpp"

namespace satpow {

// Reduced Groebner basis of a submodule of R^rank (rank 1 covers ideals).
// Generators are monic, mutually reduced and sorted descending by leading
// term, so two submodules are equal iff their bases compare equal.
struct GroebnerBasis {
  Ring ring;
  int rank = 1;
  std::vector<VecPoly> gens;
  std::vector<std::pair<int, Monomial>> leads;  // (component, monomial)

  bool is_zero() const { return gens.empty(); }

  // Membership of a term in the leading-term module.
  bool contains_monomial(int comp, const Monomial& m) const {
    for (const auto& [c, lm] : leads)
      if (c == comp && lm.divides(m)) return true;
    return false;
  }
};

namespace detail {

// Generator indices grouped by leading component, each group ascending by
// leading total degree so divisor scans can stop early.
inline std::vector<std::vector<int>> lead_buckets(
    int rank, const std::vector<std::pair<int, Monomial>>& leads) {
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < leads.size(); ++i)
    buckets[static_cast<std::size_t>(leads[i].first)].push_back(
        static_cast<int>(i));
  for (auto& b : buckets)
    std::stable_sort(b.begin(), b.end(), [&](int a, int c) {
      return leads[static_cast<std::size_t>(a)].second.total_degree() <
             leads[static_cast<std::size_t>(c)].second.total_degree();
    });
  return buckets;
}

// Full normal form: every term of the result is irreducible against the
// leading terms of G. Deterministic for a fixed generator sequence.
inline VecPoly nf(const VecPoly& f, const std::vector<VecPoly>& G,
                  const std::vector<std::pair<int, Monomial>>& leads,
                  const std::vector<std::vector<int>>& buckets, int skip = -1) {
  VecPoly h = f;
  std::vector<std::vector<Term>> out(static_cast<std::size_t>(f.rank()));
  while (!h.is_zero()) {
    VecPoly::Lead l = h.leading();
    int ldeg = l.mono.total_degree();
    const VecPoly* red = nullptr;
    Monomial shift;
    Rational factor;
    for (int idx : buckets[static_cast<std::size_t>(l.comp)]) {
      if (idx == skip) continue;
      const auto& lm = leads[static_cast<std::size_t>(idx)].second;
      if (lm.total_degree() > ldeg) break;
      if (lm.divides(l.mono)) {
        red = &G[static_cast<std::size_t>(idx)];
        shift = l.mono.div_by(lm);
        factor = l.coef / red->leading().coef;
        break;
      }
    }
    if (red) {
      h.sub_scaled(*red, shift, factor);
    } else {
      out[static_cast<std::size_t>(l.comp)].push_back({l.mono, l.coef});
      h.drop_leading(l.comp);
    }
  }
  std::vector<Poly> comps;
  comps.reserve(out.size());
  for (auto& terms : out)
    comps.push_back(Poly::from_terms(f.ring(), std::move(terms)));
  return VecPoly::from_components(std::move(comps));
}

inline VecPoly spair(const VecPoly& f, const VecPoly& g) {
  VecPoly::Lead lf = f.leading(), lg = g.leading();
  Monomial L = lcm(lf.mono, lg.mono);
  VecPoly a = f.term_mul(L.div_by(lf.mono), Rational(1) / lf.coef);
  a.sub_scaled(g, L.div_by(lg.mono), Rational(1) / lg.coef);
  return a;
}

struct SPair {
  int i, j;
  int comp;
  Monomial lcm_mono;
  int deg;
};

struct SPairLess {
  Order ord;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord.cmp(a.lcm_mono, b.lcm_mono);
    if (c) return c < 0;
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace detail

inline GroebnerBasis buchberger(const Ring& ring, int rank,
                                const std::vector<VecPoly>& input) {
  if (rank <= 0) throw AlgebraError("module rank must be positive");
  std::vector<VecPoly> seed;
  for (const auto& f : input) {
    if (f.ring() != ring || f.rank() != rank)
      throw AlgebraError("generator outside the stated module");
    if (!f.is_zero()) seed.push_back(content_normalize(f));
  }
  std::sort(seed.begin(), seed.end(),
            [](const VecPoly& a, const VecPoly& b) { return vec_cmp(a, b) < 0; });
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

  const Order& ord = ring.order();
  std::vector<VecPoly> G;
  std::vector<std::pair<int, Monomial>> leads;
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(rank));
  std::set<detail::SPair, detail::SPairLess> pairs(detail::SPairLess{ord});

  auto mono_less = [&](const Monomial& a, const Monomial& b) {
    return ord.cmp(a, b) < 0;
  };

  // Gebauer-Moeller update: prune the queue against the newcomer's lead,
  // then admit one representative per minimal new lcm. The coprime-lead
  // shortcut is only sound for ideals, so it is gated on rank 1.
  auto add_elem = [&](const VecPoly& h) {
    int s = static_cast<int>(G.size());
    VecPoly::Lead lh = h.leading();
    for (auto it = pairs.begin(); it != pairs.end();) {
      const detail::SPair& p = *it;
      if (p.comp == lh.comp && lh.mono.divides(p.lcm_mono) &&
          p.lcm_mono != lcm(leads[static_cast<std::size_t>(p.i)].second, lh.mono) &&
          p.lcm_mono != lcm(leads[static_cast<std::size_t>(p.j)].second, lh.mono))
        it = pairs.erase(it);
      else
        ++it;
    }
    std::map<Monomial, std::vector<int>, decltype(mono_less)> groups(mono_less);
    for (int i = 0; i < s; ++i)
      if (leads[static_cast<std::size_t>(i)].first == lh.comp)
        groups[lcm(leads[static_cast<std::size_t>(i)].second, lh.mono)].push_back(i);
    std::vector<Monomial> kept;
    for (const auto& [L, members] : groups) {
      bool dominated = false;
      for (const auto& k : kept)
        if (k.divides(L)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      kept.push_back(L);
      if (rank == 1) {
        bool coprime = false;
        for (int i : members)
          if (L == leads[static_cast<std::size_t>(i)].second * lh.mono) {
            coprime = true;
            break;
          }
        if (coprime) continue;
      }
      pairs.insert({members.front(), s, lh.comp, L, L.total_degree()});
    }
    G.push_back(h);
    leads.emplace_back(lh.comp, lh.mono);
    buckets = detail::lead_buckets(rank, leads);
  };

  for (const auto& f : seed) {
    VecPoly r = detail::nf(f, G, leads, buckets);
    if (!r.is_zero()) add_elem(content_normalize(r));
  }
  while (!pairs.empty()) {
    detail::SPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    VecPoly s = detail::spair(G[static_cast<std::size_t>(p.i)],
                              G[static_cast<std::size_t>(p.j)]);
    if (s.is_zero()) continue;
    VecPoly r = detail::nf(s, G, leads, buckets);
    if (!r.is_zero()) add_elem(content_normalize(r));
  }

  // Minimal generators: leading terms form an antichain per component.
  std::vector<int> order_idx(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) order_idx[i] = static_cast<int>(i);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    const auto& la = leads[static_cast<std::size_t>(a)];
    const auto& lb = leads[static_cast<std::size_t>(b)];
    int c = ord.cmp_module(la.first, la.second, lb.first, lb.second);
    if (c) return c < 0;
    return a < b;
  });
  std::vector<VecPoly> min_gens;
  std::vector<std::pair<int, Monomial>> min_leads;
  for (int idx : order_idx) {
    const auto& l = leads[static_cast<std::size_t>(idx)];
    bool redundant = false;
    for (const auto& k : min_leads)
      if (k.first == l.first && k.second.divides(l.second)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      min_gens.push_back(G[static_cast<std::size_t>(idx)]);
      min_leads.push_back(l);
    }
  }

  // Tail interreduction; leads are untouched because they are an antichain.
  auto min_buckets = detail::lead_buckets(rank, min_leads);
  for (std::size_t i = 0; i < min_gens.size(); ++i)
    min_gens[i] = monic(detail::nf(min_gens[i], min_gens, min_leads, min_buckets,
                                   static_cast<int>(i)));

  GroebnerBasis gb;
  gb.ring = ring;
  gb.rank = rank;
  std::vector<std::size_t> final_idx(min_gens.size());
  for (std::size_t i = 0; i < min_gens.size(); ++i) final_idx[i] = i;
  std::sort(final_idx.begin(), final_idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& la = min_leads[a];
    const auto& lb = min_leads[b];
    return ord.cmp_module(la.first, la.second, lb.first, lb.second) > 0;
  });
  for (std::size_t i : final_idx) {
    gb.gens.push_back(min_gens[i]);
    gb.leads.push_back(min_leads[i]);
  }
  return gb;
}

inline VecPoly normal_form(const VecPoly& f, const GroebnerBasis& gb) {
  if (f.ring() != gb.ring || f.rank() != gb.rank)
    throw AlgebraError("element outside the basis module");
  auto buckets = detail::lead_buckets(gb.rank, gb.leads);
  return detail::nf(f, gb.gens, gb.leads, buckets);
}

inline bool contains(const VecPoly& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

inline bool gb_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.ring != b.ring || a.rank != b.rank || a.gens.size() != b.gens.size())
    return false;
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i] != b.gens[i]) return false;
  return true;
}

// Count of standard monomials of total degree t across all components:
// the Hilbert function of R^rank modulo the submodule.
inline long long std_monomials_by_degree(const GroebnerBasis& gb, int t) {
  if (t < 0) throw AlgebraError("negative degree");
  long long count = 0;
  auto monos = monomials_of_degree(gb.ring.nvars(), t);
  for (int c = 0; c < gb.rank; ++c)
    for (const auto& m : monos)
      if (!gb.contains_monomial(c, m)) ++count;
  return count;
}

// Ideal conveniences: ideals ride through the engine as rank-1 modules.
inline VecPoly wrap_poly(const Poly& p) {
  return VecPoly::from_components({p});
}

inline GroebnerBasis buchberger_ideal(const Ring& ring,
                                      const std::vector<Poly>& gens) {
  std::vector<VecPoly> v;
  v.reserve(gens.size());
  for (const auto& g : gens) v.push_back(wrap_poly(g));
  return buchberger(ring, 1, v);
}

inline Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  return normal_form(wrap_poly(f), gb).component(0);
}

inline bool contains(const Poly& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

inline std::vector<Poly> gb_ideal_gens(const GroebnerBasis& gb) {
  if (gb.rank != 1) throw AlgebraError("not an ideal basis");
  std::vector<Poly> out;
  out.reserve(gb.gens.size());
  for (const auto& g : gb.gens) out.push_back(g.component(0));
  return out;
}

}  // namespace satpow
