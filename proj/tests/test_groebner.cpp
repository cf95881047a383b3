#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "testutil.hpp"

using namespace satpow;
using testutil::random_nonzero_poly;
using testutil::random_nonzero_scalar;
using testutil::random_vecpoly;

namespace {

// Direct statement of the Buchberger criterion: every S-pair of basis
// elements with a shared leading component reduces to zero.
bool buchberger_criterion(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.gens.size(); ++i)
    for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
      if (gb.leads[i].first != gb.leads[j].first) continue;
      VecPoly s = detail::spair(gb.gens[i], gb.gens[j]);
      if (!contains(s, gb)) return false;
    }
  return true;
}

bool is_reduced_basis(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.gens.size(); ++i) {
    if (gb.gens[i].leading().coef != Rational(1)) return false;
    for (int c = 0; c < gb.gens[i].rank(); ++c)
      for (const auto& t : gb.gens[i].component(c).terms()) {
        bool is_lead = gb.leads[i].first == c && gb.leads[i].second == t.mono;
        if (is_lead) continue;
        for (std::size_t j = 0; j < gb.gens.size(); ++j)
          if (gb.leads[j].first == c && gb.leads[j].second.divides(t.mono))
            return false;
      }
  }
  return true;
}

}  // namespace

TEST_CASE("groebner basis of a curve ideal under lex") {
  Ring R({"x", "y", "z"}, Order::lex());
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1), z = Poly::variable(R, 2);
  std::vector<Poly> gens = {x * x - y, x * x * x - z};
  GroebnerBasis gb = buchberger_ideal(R, gens);

  for (const auto& g : gens) CHECK(contains(g, gb));
  CHECK(buchberger_criterion(gb));
  CHECK(is_reduced_basis(gb));

  // The elimination ideal in y, z is generated by the resultant.
  Poly res = testutil::resultant(x * x - y, x * x * x - z, 0);
  Poly expected = y * y * y - z * z;
  CHECK(content_normalize(res) == content_normalize(expected));
  CHECK(contains(expected, gb));
  bool found = false;
  for (const auto& g : gb.gens)
    if (g.component(0) == monic(expected)) found = true;
  CHECK(found);
}

TEST_CASE("membership in a known ideal") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  GroebnerBasis gb = buchberger_ideal(R, {x * x, x * y});
  CHECK(contains(x * x * y, gb));
  CHECK(contains((x * x + x * y).scaled(Rational(5, 3)), gb));
  CHECK_FALSE(contains(x, gb));
  CHECK_FALSE(contains(y * y, gb));
  CHECK(normal_form(x * y + y * y, gb) == y * y);
}

TEST_CASE("unit and zero ideals") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0);
  GroebnerBasis zero = buchberger_ideal(R, {});
  CHECK(zero.is_zero());
  CHECK_FALSE(contains(x, zero));

  GroebnerBasis unit =
      buchberger_ideal(R, {x + Poly::constant(R, Rational(1)), x});
  REQUIRE(unit.gens.size() == 1);
  CHECK(unit.gens[0].component(0) == Poly::constant(R, Rational(1)));
}

TEST_CASE("standard monomial counts") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  GroebnerBasis gb = buchberger_ideal(R, {x * x, x * y, y * y});
  CHECK(std_monomials_by_degree(gb, 0) == 1);
  CHECK(std_monomials_by_degree(gb, 1) == 2);
  CHECK(std_monomials_by_degree(gb, 2) == 0);
  CHECK_THROWS_AS(std_monomials_by_degree(gb, -1), AlgebraError);

  GroebnerBasis free = buchberger(R, 2, {});
  CHECK(std_monomials_by_degree(free, 1) == 4);  // two vars times two slots
}

TEST_CASE("module basis under position over term") {
  Ring R({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  VecPoly g1 = VecPoly::from_components({x, y});
  VecPoly g2 = VecPoly::from_components({y, x});
  GroebnerBasis gb = buchberger(R, 2, {g1, g2});
  CHECK(buchberger_criterion(gb));
  CHECK(is_reduced_basis(gb));
  CHECK(contains(g1.poly_mul(x + y) - g2.poly_mul(y), gb));
  CHECK_FALSE(contains(VecPoly::unit(R, 2, 0, Poly::constant(R, Rational(1))), gb));

  // The syzygy-like combination y*g1 - x*g2 = (0, y^2 - x^2) must be found.
  VecPoly tail = VecPoly::unit(R, 2, 1, y * y - x * x);
  CHECK(contains(tail, gb));
}

TEST_CASE("buchberger properties on random ideals") {
  std::mt19937_64 rng(42);
  Ring R3({"x", "y", "z"});
  Ring R2({"x", "y"});
  int checked = 0;
  for (int inst = 0; inst < 120; ++inst) {
    const Ring& R = (inst % 2 == 0) ? R3 : R2;
    std::uniform_int_distribution<int> dg(1, 4);
    std::vector<Poly> gens;
    int n = dg(rng);
    for (int i = 0; i < n; ++i) gens.push_back(random_nonzero_poly(rng, R, 3, 3));
    GroebnerBasis gb = buchberger_ideal(R, gens);
    REQUIRE(buchberger_criterion(gb));
    REQUIRE(is_reduced_basis(gb));
    for (const auto& g : gens) REQUIRE(contains(g, gb));

    // Normal forms are linear over the coefficient field.
    Poly f = random_nonzero_poly(rng, R, 3, 3);
    Poly h = random_nonzero_poly(rng, R, 3, 3);
    Rational a = random_nonzero_scalar(rng), b = random_nonzero_scalar(rng);
    Poly lhs = normal_form(f.scaled(a) + h.scaled(b), gb);
    Poly rhs = normal_form(f, gb).scaled(a) + normal_form(h, gb).scaled(b);
    REQUIRE(lhs == rhs);
    ++checked;
  }
  CHECK(checked == 120);
}

TEST_CASE("buchberger properties on random modules") {
  std::mt19937_64 rng(43);
  Ring R({"x", "y"});
  for (int inst = 0; inst < 40; ++inst) {
    std::uniform_int_distribution<int> dg(1, 3), dr(1, 3);
    int rank = dr(rng);
    std::vector<VecPoly> gens;
    int n = dg(rng);
    for (int i = 0; i < n; ++i) {
      VecPoly v = random_vecpoly(rng, R, rank, 2, 2);
      if (!v.is_zero()) gens.push_back(v);
    }
    GroebnerBasis gb = buchberger(R, rank, gens);
    REQUIRE(buchberger_criterion(gb));
    REQUIRE(is_reduced_basis(gb));
    for (const auto& g : gens) REQUIRE(contains(g, gb));

    VecPoly f = random_vecpoly(rng, R, rank, 2, 2);
    VecPoly h = random_vecpoly(rng, R, rank, 2, 2);
    Rational a = random_nonzero_scalar(rng), b = random_nonzero_scalar(rng);
    REQUIRE(normal_form(f.scaled(a) + h.scaled(b), gb) ==
            normal_form(f, gb).scaled(a) + normal_form(h, gb).scaled(b));
  }
}

TEST_CASE("reduced bases are canonical") {
  std::mt19937_64 rng(44);
  Ring R({"x", "y", "z"});
  for (int inst = 0; inst < 50; ++inst) {
    std::uniform_int_distribution<int> dg(1, 4);
    std::vector<Poly> gens;
    int n = dg(rng);
    for (int i = 0; i < n; ++i) gens.push_back(random_nonzero_poly(rng, R, 3, 3));
    GroebnerBasis gb1 = buchberger_ideal(R, gens);

    // Same ideal, different presentation: shuffled, rescaled, with redundant
    // combinations appended.
    std::vector<Poly> other = gens;
    std::shuffle(other.begin(), other.end(), rng);
    for (auto& g : other) g = g.scaled(random_nonzero_scalar(rng));
    if (gens.size() >= 2)
      other.push_back(gens[0] * Poly::variable(R, 0) + gens[1]);
    other.push_back(gens.back().scaled(Rational(7, 2)));
    GroebnerBasis gb2 = buchberger_ideal(R, other);

    REQUIRE(gb_equal(gb1, gb2));
    REQUIRE(gb1.gens.size() == gb2.gens.size());
    for (std::size_t i = 0; i < gb1.gens.size(); ++i)
      REQUIRE(gb1.gens[i] == gb2.gens[i]);
  }
}

TEST_CASE("grevlex and lex bases generate the same ideal") {
  Ring Rg({"x", "y"}, Order::grevlex());
  Ring Rl({"x", "y"}, Order::lex());
  std::mt19937_64 rng(45);
  for (int inst = 0; inst < 10; ++inst) {
    Poly f = random_nonzero_poly(rng, Rg, 3, 3);
    Poly g = random_nonzero_poly(rng, Rg, 3, 3);
    GroebnerBasis gbg = buchberger_ideal(Rg, {f, g});
    Poly fl = map_vars(f, Rl, {0, 1}), gl = map_vars(g, Rl, {0, 1});
    GroebnerBasis gbl = buchberger_ideal(Rl, {fl, gl});
    for (const auto& w : gbg.gens)
      REQUIRE(contains(map_vars(w.component(0), Rl, {0, 1}), gbl));
    for (const auto& w : gbl.gens)
      REQUIRE(contains(map_vars(w.component(0), Rg, {0, 1}), gbg));
  }
}
