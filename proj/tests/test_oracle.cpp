#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace satpow;

namespace {

MonomialIdeal mk(std::size_t nvars, std::vector<std::vector<std::uint32_t>> exps) {
  std::vector<Monomial> gens;
  for (auto& e : exps) gens.push_back(Monomial(std::move(e)));
  return MonomialIdeal::make(nvars, std::move(gens));
}

}  // namespace

TEST_CASE("generator sets are minimal antichains") {
  MonomialIdeal a = mk(2, {{2, 0}, {3, 0}, {1, 1}});
  REQUIRE(a.gens().size() == 2);
  CHECK(a.contains(Monomial({3, 0})));
  CHECK(a.contains(Monomial({2, 5})));
  CHECK_FALSE(a.contains(Monomial({1, 0})));
  CHECK(a == mk(2, {{1, 1}, {2, 0}}));
  CHECK(a.max_gen_degree() == 2);

  MonomialIdeal unit = mk(2, {{0, 0}, {1, 0}});
  CHECK(unit.is_unit());
  CHECK(mk(2, {}).is_zero());
}

TEST_CASE("monomial powers and intersections") {
  MonomialIdeal m = mk(2, {{1, 0}, {0, 1}});
  MonomialIdeal m2 = mono_power(m, 2);
  CHECK(m2 == mk(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(mono_power(m2, 2) == mono_power(m, 4));

  CHECK(mono_intersect(mk(2, {{2, 0}, {0, 1}}), mk(2, {{1, 0}})) ==
        mk(2, {{2, 0}, {1, 1}}));
  CHECK(mono_intersect(mk(2, {}), m).is_zero());
}

TEST_CASE("monomial colon and saturation") {
  MonomialIdeal a = mk(2, {{2, 0}, {1, 1}});  // (x^2, xy)
  CHECK(mono_colon_mono(a, Monomial({1, 0})) == mk(2, {{1, 0}, {0, 1}}));
  CHECK(mono_colon(a, mk(2, {{1, 0}, {0, 1}})) == mk(2, {{1, 0}}));
  CHECK(mono_saturate(a) == mk(2, {{1, 0}}));

  MonoSatResult steps = mono_saturate_steps(a, 64);
  CHECK(steps.saturation == mk(2, {{1, 0}}));
  CHECK(steps.n_stab == 1);

  MonoSatResult primary = mono_saturate_steps(mk(2, {{2, 0}, {0, 2}}), 64);
  CHECK(primary.saturation.is_unit());
  CHECK(primary.n_stab == 3);

  CHECK_THROWS_AS(mono_saturate_steps(mk(2, {{2, 0}, {0, 2}}), 2), AlgebraError);
}

TEST_CASE("torsion lengths") {
  // (x) / (x^2, xy): one monomial, x itself.
  auto len = mono_length_diff(mk(2, {{1, 0}}), mk(2, {{2, 0}, {1, 1}}));
  REQUIRE(len.has_value());
  CHECK(*len == 1);

  // R / (x, y)^2.
  auto sq = mono_length_diff(MonomialIdeal::make(2, {Monomial(2)}),
                             mono_power(mk(2, {{1, 0}, {0, 1}}), 2));
  REQUIRE(sq.has_value());
  CHECK(*sq == 3);

  // (x) / (x^2) in two variables is not m-torsion.
  CHECK_FALSE(mono_length_diff(mk(2, {{1, 0}}), mk(2, {{2, 0}})).has_value());

  // Equal ideals have length zero.
  auto zero = mono_length_diff(mk(2, {{1, 0}}), mk(2, {{1, 0}}));
  REQUIRE(zero.has_value());
  CHECK(*zero == 0);
}

TEST_CASE("saturated power lengths for the closed-form family") {
  // I = (x^2, xy): lambda_k = k(k+1)/2 and n_k = k.
  MonomialIdeal I = mk(2, {{2, 0}, {1, 1}});
  for (int k = 1; k <= 12; ++k) {
    MonomialIdeal Ik = mono_power(I, k);
    MonoSatResult sat = mono_saturate_steps(Ik, 0);
    CHECK(sat.n_stab == k);
    auto len = mono_length_diff(sat.saturation, Ik);
    REQUIRE(len.has_value());
    CHECK(*len == static_cast<long long>(k) * (k + 1) / 2);
  }
}

TEST_CASE("oracle saturation agrees with exponent-zeroing definition") {
  std::mt19937_64 rng(200);
  for (int inst = 0; inst < 40; ++inst) {
    std::uniform_int_distribution<std::size_t> dn(1, 3);
    MonomialIdeal I = testutil::random_monomial_ideal(rng, dn(rng), 5, 4);
    MonoSatResult steps = mono_saturate_steps(I, 256);
    CHECK(steps.saturation == mono_saturate(I));
    // Chain count equals the least D with m^D * sat inside I: verify by
    // direct membership on the generators.
    const MonomialIdeal& sat = steps.saturation;
    auto all_in = [&](int D) {
      for (const auto& u : monomials_of_degree(I.nvars(), D))
        for (const auto& g : sat.gens())
          if (!I.contains(g * u)) return false;
      return true;
    };
    if (!sat.is_zero()) {
      CHECK(all_in(steps.n_stab));
      if (steps.n_stab > 0) CHECK_FALSE(all_in(steps.n_stab - 1));
    }
  }
}

TEST_CASE("bridges to polynomial ideals") {
  Ring R({"x", "y"});
  MonomialIdeal A = mk(2, {{2, 0}, {1, 1}});
  IdealRep a = from_monomial_ideal(R, A);
  auto back = to_monomial_ideal(a);
  REQUIRE(back.has_value());
  CHECK(*back == A);

  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  CHECK_FALSE(to_monomial_ideal(make_ideal(R, {x + y})).has_value());
}
