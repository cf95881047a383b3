#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "testutil.hpp"

using namespace satpow;

namespace {

SubmoduleSpec ideal_target(const Ring& R, std::vector<Poly> gens) {
  return make_submodule_from_ideal(make_ideal(R, std::move(gens)));
}

}  // namespace

TEST_CASE("closed-form sequence for (x^2, xy)") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  SubmoduleSpec E = ideal_target(R, {x * x, x * y});

  AsymptoticReport rep = run_sequence(E, 5);
  CHECK(rep.d == 2);
  CHECK(rep.e == 1);
  CHECK(rep.gamma == 1);
  CHECK(rep.rank_hypothesis_met);
  REQUIRE(rep.rows.size() == 5);
  for (const auto& row : rep.rows) {
    long long k = row.k;
    CHECK(row.lambda == k * (k + 1) / 2);
    CHECK(row.n_k == row.k);
    CHECK(row.eps == Rational(k + 1, k));
  }
  CHECK(rep.diag.tau_hat == 1);
  CHECK(rep.diag.monotone_tail);
  CHECK(rep.diag.last_delta == Rational(1, 20));  // 5/4 - 6/5

  // The oracle engine reproduces every field bit for bit.
  AsymptoticReport orc = run_sequence(E, 5, {EnginePath::Oracle});
  REQUIRE(orc.rows.size() == rep.rows.size());
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(orc.rows[i].lambda == rep.rows[i].lambda);
    CHECK(orc.rows[i].n_k == rep.rows[i].n_k);
    CHECK(orc.rows[i].ratio == rep.rows[i].ratio);
    CHECK(orc.rows[i].eps == rep.rows[i].eps);
  }

  // The check engine agrees with itself and with both of the above.
  AsymptoticReport chk = run_sequence(E, 3, {EnginePath::Check});
  CHECK(chk.rows[2].lambda == 6);
}

TEST_CASE("epsilon estimate and tau check") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  SubmoduleSpec E = ideal_target(R, {x * x, x * y});
  AsymptoticReport rep = run_sequence(E, 6, {EnginePath::Oracle});

  EpsilonEstimate est = epsilon_estimate(rep, Rational(1, 10));
  CHECK(est.point == Rational(7, 6));
  CHECK(est.lo == Rational(7, 6));
  CHECK(est.hi == Rational(6, 5));
  CHECK(est.converged);  // spread 1/30 under 1/10

  EpsilonEstimate tight = epsilon_estimate(rep, Rational(1, 40));
  CHECK_FALSE(tight.converged);

  TauCheckResult tau = tau_check(rep);
  CHECK(tau.tau_hat == 1);
  CHECK(tau.tau_head == 1);
  CHECK(tau.stable);
  CHECK(tau.linear);

  AsymptoticReport two = run_sequence(E, 2, {EnginePath::Oracle});
  CHECK_THROWS_AS(epsilon_estimate(two, Rational(1, 10)), AlgebraError);
}

TEST_CASE("m-primary ideal matches the Hilbert-Samuel multiplicity") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  SubmoduleSpec E = ideal_target(R, {x * x, x * y, y * y});

  AsymptoticReport rep = run_sequence(E, 20, {EnginePath::Oracle});
  for (const auto& row : rep.rows) {
    long long k = row.k;
    CHECK(row.lambda == k * (2 * k + 1));
  }
  CHECK(rep.rows.back().eps == Rational(41, 10));
  EpsilonEstimate est = epsilon_estimate(rep, Rational(1, 2));
  CHECK(est.converged);
  CHECK((est.point - Rational(4)).abs() <= Rational(4, 10));
}

TEST_CASE("zero sequences") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);

  SubmoduleSpec principal = ideal_target(R, {x * x + y * y * y});
  AsymptoticReport rep = run_sequence(principal, 4);
  for (const auto& row : rep.rows) {
    CHECK(row.lambda == 0);
    CHECK(row.n_k == 0);
    CHECK(row.eps == Rational(0));
  }

  Poly one = Poly::constant(R, Rational(1)), zero(R);
  SubmoduleSpec summand =
      make_submodule(R, 2, {VecPoly::from_components({one, zero})});
  AsymptoticReport mrep = run_sequence(summand, 4);
  for (const auto& row : mrep.rows) CHECK(row.lambda == 0);
}

TEST_CASE("module target with bounded normalized ratio") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1), zero(R);
  SubmoduleSpec E = make_submodule(
      R, 2,
      {VecPoly::from_components({x, zero}), VecPoly::from_components({y, zero})});
  CHECK(E.rank_e == 1);

  AsymptoticReport rep = run_sequence(E, 4);
  CHECK(rep.gamma == 2);
  CHECK(rep.e == 1);
  CHECK(rep.rank_hypothesis_met);  // gamma = 2 < d + e = 3
  for (const auto& row : rep.rows) {
    long long k = row.k;
    CHECK(row.lambda == k * (k + 1) / 2);
    CHECK(row.eps == Rational(k + 1, k));
  }
}

TEST_CASE("rank hypothesis flag reports violations") {
  Ring R1({"x"});
  Poly x = Poly::variable(R1, 0);
  SubmoduleSpec E = make_submodule(
      R1, 2, {VecPoly::from_components({x, x})});
  CHECK(E.rank_e == 1);
  AsymptoticReport rep = run_sequence(E, 3);
  CHECK_FALSE(rep.rank_hypothesis_met);  // gamma = 2 = d + e
  // lambda_k = k here: sat is the line R*(y1+y2)^k, quotient R/(x^k).
  for (const auto& row : rep.rows) CHECK(row.lambda == row.k);
}

TEST_CASE("errors carry the offending power") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  SubmoduleSpec E = ideal_target(R, {x * x, y * y});
  RunOptions opts;
  opts.cap_multiplier = 1;  // cap 2 at k = 2 but the chain needs more
  try {
    run_sequence(E, 2, opts);
    FAIL("expected an error");
  } catch (const AlgebraError& ex) {
    CHECK(std::string(ex.what()).find("k=") != std::string::npos);
  }

  CHECK_THROWS_AS(run_sequence(E, 0), AlgebraError);
  SubmoduleSpec zero = make_submodule(R, 1, {});
  CHECK_THROWS_AS(run_sequence(zero, 2), AlgebraError);
}

TEST_CASE("oracle path rejects non-monomial input") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  SubmoduleSpec E = ideal_target(R, {x + y});
  CHECK_THROWS_AS(run_sequence(E, 3, {EnginePath::Oracle}), AlgebraError);
}

TEST_CASE("boundedness guard") {
  auto row = [](int k, long long lam, const Rational& eps) {
    ReportRow r;
    r.k = k;
    r.lambda = lam;
    r.eps = eps;
    return r;
  };
  std::vector<ReportRow> fine = {row(1, 1, Rational(2)), row(2, 3, Rational(3, 2)),
                                 row(3, 6, Rational(4, 3)),
                                 row(4, 10, Rational(5, 4))};
  CHECK_NOTHROW(detail::assert_bounded(fine));

  std::vector<ReportRow> blow = {row(1, 1, Rational(1)), row(2, 8, Rational(2)),
                                 row(3, 81, Rational(9)),
                                 row(4, 1024, Rational(32))};
  CHECK_THROWS_AS(detail::assert_bounded(blow), AlgebraError);

  std::vector<ReportRow> zero = {row(1, 0, Rational(0)), row(2, 0, Rational(0)),
                                 row(3, 0, Rational(0)),
                                 row(4, 0, Rational(0))};
  CHECK_NOTHROW(detail::assert_bounded(zero));
}

TEST_CASE("worker pool count does not change results") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  SubmoduleSpec E = ideal_target(R, {x * x, x * y});

  RunOptions serial;
  serial.threads = 1;
  RunOptions wide;
  wide.threads = 3;
  AsymptoticReport a = run_sequence(E, 6, serial);
  AsymptoticReport b = run_sequence(E, 6, wide);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].lambda == b.rows[i].lambda);
    CHECK(a.rows[i].eps == b.rows[i].eps);
  }

  setenv("SATPOW_THREADS", "2", 1);
  AsymptoticReport c = run_sequence(E, 6, {});
  unsetenv("SATPOW_THREADS");
  CHECK(c.rows.back().lambda == a.rows.back().lambda);
}
