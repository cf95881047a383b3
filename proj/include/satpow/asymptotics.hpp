#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "satpow/module_ops.hpp"

namespace satpow {

struct ReportRow {
  int k = 0;
  long long lambda = 0;  // length of sat(E^k)/E^k
  int n_k = 0;           // stabilization exponent of the colon chain
  Rational ratio;        // lambda / k^(d+e-1)
  Rational eps;          // (d+e-1)! * ratio
};

struct Diagnostics {
  int tau_hat = 0;        // max over k of ceil(n_k / k)
  Rational last_delta;    // |eps_K - eps_{K-1}|
  bool monotone_tail = true;
};

struct AsymptoticReport {
  int d = 0;
  int e = 0;
  int gamma = 0;
  bool rank_hypothesis_met = false;  // gamma < d + e
  std::vector<ReportRow> rows;
  Diagnostics diag;
};

enum class EnginePath { Groebner, Oracle, Check };

struct RunOptions {
  EnginePath path = EnginePath::Groebner;
  long cap_multiplier = 64;  // per-k colon iteration budget is cap * k
  int threads = 0;           // 0: SATPOW_THREADS, then hardware count
};

namespace detail {

inline int resolve_threads(int requested, int tasks) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("SATPOW_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return n < tasks ? n : tasks;
}

inline MonomialIdeal oracle_ideal(const SubmoduleSpec& E) {
  if (E.gamma != 1)
    throw AlgebraError("oracle path requires an ideal target");
  std::vector<Monomial> gens;
  for (const auto& g : E.gens) {
    const Poly& p = g.component(0);
    if (!p.is_monomial())
      throw AlgebraError("oracle path requires a monomial ideal");
    gens.push_back(p.leading_monomial());
  }
  return MonomialIdeal::make(E.ring.nvars(), std::move(gens));
}

struct KResult {
  long long lambda = 0;
  int n = 0;
};

inline KResult run_k_groebner(const SubmoduleSpec& E, int k, long cap) {
  GradedPiece Pk = module_power(E, k);
  ModSatResult sat = module_saturate(Pk, cap);
  LengthValue len = quotient_length(sat.piece, Pk, {cap});
  if (!len.finite) throw AlgebraError("saturation quotient has infinite length");
  return {len.value, sat.n_stab};
}

inline KResult run_k_oracle(const MonomialIdeal& I, int k, long cap) {
  MonomialIdeal Ik = mono_power(I, k);
  MonoSatResult sat = mono_saturate_steps(Ik, cap);
  auto len = mono_length_diff(sat.saturation, Ik);
  if (!len) throw AlgebraError("saturation quotient has infinite length");
  return {*len, sat.n_stab};
}

// The normalized ratio is bounded for these inputs; runaway growth in the
// tail can only come from a pipeline defect, so treat it as an error.
inline void assert_bounded(const std::vector<ReportRow>& rows) {
  if (rows.size() < 4) return;
  Rational head_max, tail_max;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational& v = rows[i].eps;
    if (i < rows.size() / 2) {
      if (v > head_max) head_max = v;
    } else if (v > tail_max) {
      tail_max = v;
    }
  }
  if (tail_max > head_max * Rational(8))
    throw AlgebraError("normalized ratio grows superlinearly");
}

inline KResult run_k_check(const SubmoduleSpec& E, int k, long cap) {
  GradedPiece Pk = module_power(E, k);
  ModSatResult sat = module_saturate(Pk, cap);
  ModSatResult alt = torsion_h0(Pk, cap);
  if (!piece_equal(sat.piece, alt.piece))
    throw AlgebraError("saturation routes disagree");
  LengthValue len = quotient_length(sat.piece, Pk, {cap});
  if (!len.finite) throw AlgebraError("saturation quotient has infinite length");
  KResult main{len.value, sat.n_stab};
  bool monomial = E.gamma == 1;
  if (monomial)
    for (const auto& g : E.gens)
      monomial = monomial && g.component(0).is_monomial();
  if (monomial) {
    KResult orc = run_k_oracle(oracle_ideal(E), k, cap);
    if (orc.lambda != main.lambda || orc.n != main.n)
      throw AlgebraError("oracle disagrees with the main pipeline");
    if (!equal_ideals(piece_to_ideal(sat.piece),
                      from_monomial_ideal(E.ring,
                                          mono_saturate(mono_power(oracle_ideal(E), k)))))
      throw AlgebraError("oracle saturation disagrees");
  }
  return main;
}

}  // namespace detail

// Rows k = 1..K of the normalized length sequence. Each k is independent;
// they fan out over a small worker pool and assemble by index.
inline AsymptoticReport run_sequence(const SubmoduleSpec& E, int K,
                                     RunOptions opts = {}) {
  if (K < 1) throw AlgebraError("sequence needs K >= 1");
  if (E.gens.empty()) throw AlgebraError("target module is zero");
  if (E.rank_e < 1) throw AlgebraError("target must have positive rank");

  AsymptoticReport rep;
  rep.d = static_cast<int>(E.ring.nvars());
  rep.e = E.rank_e;
  rep.gamma = E.gamma;
  rep.rank_hypothesis_met = E.gamma < rep.d + rep.e;

  std::optional<MonomialIdeal> oracle;
  if (opts.path == EnginePath::Oracle) oracle = detail::oracle_ideal(E);

  std::vector<detail::KResult> results(static_cast<std::size_t>(K));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(K));
  std::atomic<int> next{1};
  auto worker = [&] {
    while (true) {
      int k = next.fetch_add(1);
      if (k > K) return;
      long cap = opts.cap_multiplier * k;
      try {
        switch (opts.path) {
          case EnginePath::Groebner:
            results[static_cast<std::size_t>(k - 1)] =
                detail::run_k_groebner(E, k, cap);
            break;
          case EnginePath::Oracle:
            results[static_cast<std::size_t>(k - 1)] =
                detail::run_k_oracle(*oracle, k, cap);
            break;
          case EnginePath::Check:
            results[static_cast<std::size_t>(k - 1)] =
                detail::run_k_check(E, k, cap);
            break;
        }
      } catch (const std::exception& ex) {
        errors[static_cast<std::size_t>(k - 1)] = std::make_exception_ptr(
            AlgebraError("k=" + std::to_string(k) + ": " + ex.what()));
      }
    }
  };
  int nthreads = detail::resolve_threads(opts.threads, K);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  unsigned norm_exp = static_cast<unsigned>(rep.d + rep.e - 1);
  Rational norm_fact(factorial(norm_exp));
  for (int k = 1; k <= K; ++k) {
    const auto& r = results[static_cast<std::size_t>(k - 1)];
    ReportRow row;
    row.k = k;
    row.lambda = r.lambda;
    row.n_k = r.n;
    if (row.lambda < 0 || row.n_k < 0)
      throw AlgebraError("negative entry in sequence row");
    row.ratio = Rational(mpz_class(static_cast<long>(r.lambda)),
                         int_pow(k, norm_exp));
    row.eps = row.ratio * norm_fact;
    rep.rows.push_back(row);
  }

  for (const auto& row : rep.rows) {
    rep.diag.tau_hat =
        std::max(rep.diag.tau_hat, (row.n_k + row.k - 1) / row.k);
  }
  if (rep.rows.size() >= 2) {
    rep.diag.last_delta =
        (rep.rows.back().eps - rep.rows[rep.rows.size() - 2].eps).abs();
  }
  std::size_t tail = (rep.rows.size() + 2) / 3;
  if (tail >= 2) {
    bool up = true, down = true;
    for (std::size_t i = rep.rows.size() - tail + 1; i < rep.rows.size(); ++i) {
      if (rep.rows[i].eps > rep.rows[i - 1].eps) down = false;
      if (rep.rows[i].eps < rep.rows[i - 1].eps) up = false;
    }
    rep.diag.monotone_tail = up || down;
  }

  detail::assert_bounded(rep.rows);
  return rep;
}

struct EpsilonEstimate {
  Rational point;
  Rational lo, hi;  // spread of the trailing third
  bool converged = false;
};

inline EpsilonEstimate epsilon_estimate(const AsymptoticReport& rep,
                                        const Rational& tol) {
  if (rep.rows.size() < 3)
    throw AlgebraError("epsilon estimate needs at least three rows");
  EpsilonEstimate est;
  est.point = rep.rows.back().eps;
  std::size_t tail = (rep.rows.size() + 2) / 3;
  est.lo = est.hi = rep.rows[rep.rows.size() - tail].eps;
  for (std::size_t i = rep.rows.size() - tail; i < rep.rows.size(); ++i) {
    const Rational& v = rep.rows[i].eps;
    if (v < est.lo) est.lo = v;
    if (v > est.hi) est.hi = v;
  }
  est.converged = est.hi - est.lo <= tol;
  return est;
}

struct TauCheckResult {
  int tau_hat = 0;   // over all rows
  int tau_head = 0;  // over k <= 3
  bool stable = false;
  bool linear = false;  // n_k <= tau_hat * k for every row
};

inline TauCheckResult tau_check(const AsymptoticReport& rep) {
  if (rep.rows.size() < 2)
    throw AlgebraError("tau check needs at least two rows");
  TauCheckResult out;
  for (const auto& row : rep.rows) {
    int ceil_ratio = (row.n_k + row.k - 1) / row.k;
    out.tau_hat = std::max(out.tau_hat, ceil_ratio);
    if (row.k <= 3) out.tau_head = std::max(out.tau_head, ceil_ratio);
  }
  out.stable = out.tau_hat <= out.tau_head;
  out.linear = true;
  for (const auto& row : rep.rows)
    if (row.n_k > out.tau_hat * row.k) out.linear = false;
  return out;
}

}  // namespace satpow
