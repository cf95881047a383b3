#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satpow/emit.hpp"

namespace satpow {

// Settings given on the command line; these win over the job file.
struct CliOverrides {
  std::optional<int> K;
  std::optional<OutFormat> format;
  std::optional<Rational> tol;
  std::optional<long> cap;
  bool oracle = false;
  bool check = false;
};

namespace drvdetail {

inline SubmoduleSpec target_of(const JobSpec& job) {
  if (job.is_module)
    return make_submodule(job.ring, job.gamma, job.module_gens);
  return make_submodule_from_ideal(make_ideal(job.ring, job.ideal_gens));
}

inline std::string run_saturate(const JobSpec& job, const SubmoduleSpec& E,
                                long cap, bool check, OutFormat format) {
  SaturationOutput out;
  out.d = static_cast<int>(job.ring.nvars());
  out.gamma = job.gamma;
  if (!job.is_module) {
    IdealRep I = make_ideal(job.ring, job.ideal_gens);
    std::vector<int> all_vars;
    for (std::size_t i = 0; i < job.ring.nvars(); ++i)
      all_vars.push_back(static_cast<int>(i));
    SatResult s = saturate_colon(I, {all_vars, cap});
    if (check) {
      IdealRep alt = saturate_elim(I, all_vars);
      if (!equal_ideals(s.saturation, alt))
        throw AlgebraError("saturation routes disagree");
    }
    for (const auto& g : gb_ideal_gens(*ideal_gb(s.saturation)))
      out.generators.push_back(to_string(content_normalize(g)));
    out.n_stab = s.n_stab;
  } else {
    GradedPiece P1 = module_power(E, 1);
    ModSatResult s = module_saturate(P1, cap);
    if (check) {
      ModSatResult alt = torsion_h0(P1, cap);
      if (!piece_equal(s.piece, alt.piece))
        throw AlgebraError("saturation routes disagree");
    }
    for (const auto& v : s.piece.gens)
      out.generators.push_back(to_string(content_normalize(v)));
    out.n_stab = s.n_stab;
  }
  return emit_saturation(out, format);
}

inline std::string run_oracle_diff(const SubmoduleSpec& E, int K, long cap_mult,
                                   OutFormat format) {
  MonomialIdeal I = detail::oracle_ideal(E);
  std::vector<OracleDiffRow> rows;
  for (int k = 1; k <= K; ++k) {
    long cap = cap_mult * k;
    OracleDiffRow row;
    row.k = k;
    detail::KResult main = detail::run_k_groebner(E, k, cap);
    detail::KResult orc = detail::run_k_oracle(I, k, cap);
    row.lambda_main = main.lambda;
    row.lambda_oracle = orc.lambda;
    row.n_main = main.n;
    row.n_oracle = orc.n;
    GradedPiece Pk = module_power(E, k);
    ModSatResult sat = module_saturate(Pk, cap);
    row.sat_equal = equal_ideals(
        piece_to_ideal(sat.piece),
        from_monomial_ideal(E.ring, mono_saturate(mono_power(I, k))));
    rows.push_back(row);
  }
  return emit_oracle_diff(rows, format);
}

}  // namespace drvdetail

// Run one parsed job to completion and return what belongs on stdout.
inline std::string execute_job(const JobSpec& job, const CliOverrides& ov = {}) {
  if (ov.oracle && ov.check)
    throw ParseError("--oracle and --check cannot be combined", 1, 1);

  OutFormat format = ov.format ? *ov.format
                    : job.format ? *job.format
                                 : OutFormat::Csv;
  Rational tol = ov.tol ? *ov.tol : job.tol ? *job.tol : Rational(1, 10);
  long cap = ov.cap ? *ov.cap : job.cap ? *job.cap : 64;
  if (cap < 1) throw ParseError("cap must be at least 1", 1, 1);
  EnginePath path = ov.check    ? EnginePath::Check
                    : ov.oracle ? EnginePath::Oracle
                                : EnginePath::Groebner;
  int K = ov.K          ? *ov.K
          : job.K       ? static_cast<int>(*job.K)
          : (path == EnginePath::Oracle ? 40 : 12);
  if (K < 1) throw ParseError("K must be at least 1", 1, 1);

  SubmoduleSpec E = drvdetail::target_of(job);
  Command cmd = *job.cmd;
  switch (cmd) {
    case Command::Saturate:
      return drvdetail::run_saturate(job, E, cap, ov.check, format);
    case Command::PowerSeq: {
      AsymptoticReport rep = run_sequence(E, K, {path, cap});
      return emit_report(rep, format);
    }
    case Command::Epsilon: {
      AsymptoticReport rep = run_sequence(E, K, {path, cap});
      EpsilonEstimate est = epsilon_estimate(rep, tol);
      return emit_report(rep, format, &est);
    }
    case Command::TauCheck: {
      AsymptoticReport rep = run_sequence(E, K, {path, cap});
      TauCheckResult tc = tau_check(rep);
      return emit_report(rep, format, nullptr, &tc);
    }
    case Command::OracleDiff:
      return drvdetail::run_oracle_diff(E, K, cap, format);
  }
  throw AlgebraError("unhandled command");
}

}  // namespace satpow
