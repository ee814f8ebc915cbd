#include "doctest.h"
#include "germlab/parse.hpp"
#include "germlab/stdbasis.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace germlab;

namespace {

using Q = Polynomial<Rational>;
const auto G = MonomialOrder::degrevlex();
const auto L = MonomialOrder::local();

Ideal<Rational> I(const RingPtr<Rational>& r, std::initializer_list<const char*> gens) {
  PolyList<Rational> g;
  for (auto s : gens) g.push_back(parse_polynomial<Rational>(s, r));
  return Ideal<Rational>(r, g);
}

std::uint64_t loc(const Ideal<Rational>& J) { return *colength(J, L).colength; }

}  // namespace

TEST_CASE("standard bases") {
  auto r = make_ring<Rational>({"x", "y"});
  auto a = I(r, {"x^2", "x*y"});
  CHECK(minimalize(a.leading_monomials(G)) == minimalize({Monomial::var(0, 2), Monomial::var(0) * Monomial::var(1)}));
  auto b = I(r, {"x - x^2", "y"});
  auto lb = minimalize(b.leading_monomials(L));
  CHECK(lb == minimalize({Monomial::var(0), Monomial::var(1)}));
  auto c = I(r, {"x+y", "x-y"});
  CHECK(c.global_basis().size() == 2);
  CHECK(c.contains(parse_polynomial<Rational>("x", r), G));
  CHECK(c.contains(parse_polynomial<Rational>("y", r), G));
}

TEST_CASE("colength examples") {
  auto r = make_ring<Rational>({"x", "y"});
  CHECK(loc(I(r, {"x^2", "y^3"})) == 6);
  CHECK(loc(I(r, {"x^2 - y^3", "y"})) == 2);
  auto q = colength(I(r, {"x"}), L);
  CHECK(!q.colength);
  CHECK(q.dimension == 1);
  // away from the origin the unit 1 - x is invertible
  CHECK(loc(I(r, {"x^2 - x^3", "y"})) == 2);
  CHECK(*colength(I(r, {"x^2 - x^3", "y"}), G).colength == 3);
  CHECK(loc(I(r, {"2x", "3y^2"})) == 2);
}

TEST_CASE("local colength with high-order tails") {
  auto r = make_ring<Rational>({"x", "y"});
  // x = s^5, y = -s^2 parametrizes the first curve; the second vanishes to order 6
  CHECK(loc(I(r, {"x^2 + y^5", "y^3 + x^4"})) == 6);
  CHECK(loc(I(r, {"x^2 + y^5 + x^3*y^7", "y^3 + x^4 + x^9 - 3*x^2*y^8"})) == 6);
  CHECK(loc(I(r, {"(1 + x + y)*(x^2 + y^5)", "(2 - y)*(y^3 + x^4)"})) == 6);
  auto r3 = make_ring<Rational>({"x", "y", "z"});
  CHECK(loc(I(r3, {"x^2 + 7/3*y*z^4 + y^9", "y^2 - 5/11*x*z^3", "z^3 + x*y*z^2 + x^8"})) == 12);
}

TEST_CASE("krull dimension") {
  auto r2 = make_ring<Rational>({"x", "y"});
  CHECK(krull_dimension(I(r2, {"x^2 - y^3"}), L) == 1);
  CHECK(krull_dimension(I(r2, {"x", "x - 1"}), G) == -1);
  CHECK(krull_dimension(I(r2, {"1 + x"}), G) == 1);
  CHECK(krull_dimension(I(r2, {"1 + x"}), L) == -1);
  auto r4 = make_ring<Rational>({"x", "y", "z", "w"});
  CHECK(krull_dimension(I(r4, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}), L) == 2);
}

TEST_CASE("saturation and elimination") {
  auto r = make_ring<Rational>({"x", "y"});
  auto x = parse_polynomial<Rational>("x", r);
  auto s1 = saturate(I(r, {"x*y"}), x);
  CHECK(s1.contains(parse_polynomial<Rational>("y", r), G));
  CHECK(!s1.contains(x, G));
  auto J = I(r, {"x^2", "x*y"});
  auto s2 = saturate(J, x);
  CHECK(s2.is_unit(G));
  auto s3 = saturate(s2, x);
  CHECK(s3.is_unit(G));
  auto cusp = I(r, {"x^2 - y^3"});
  auto m = I(r, {"x", "y"});
  auto s4 = saturate(cusp, m);
  CHECK(s4.contains(parse_polynomial<Rational>("x^2 - y^3", r), G));
  CHECK(minimalize(s4.leading_monomials(G)) == minimalize(cusp.leading_monomials(G)));
  auto sat = saturate(I(r, {"x*y", "y^2"}), m);
  CHECK(sat.contains(parse_polynomial<Rational>("y", r), G));
  auto again = saturate(sat, m);
  CHECK(minimalize(again.leading_monomials(G)) == minimalize(sat.leading_monomials(G)));

  auto e1 = eliminate(I(r, {"y - x^2", "x"}), {"x"});
  CHECK(e1.contains(parse_polynomial<Rational>("y", r), G));
  CHECK(!e1.is_unit(G));
  auto rt = make_ring<Rational>({"t", "x"});
  CHECK(eliminate(I(rt, {"t*x - 1"}), {"t"}).is_zero());
  auto e3 = eliminate(I(r, {"x^2 + y^2 - 1", "y - x"}), {"y"});
  REQUIRE(e3.gens().size() == 1);
  CHECK(e3.gens()[0] == parse_polynomial<Rational>("x^2 - 1/2", r));

  auto i1 = intersect(I(r, {"x"}), I(r, {"y"}));
  CHECK(i1.contains(parse_polynomial<Rational>("x*y", r), G));
  CHECK(!i1.contains(x, G));
}

TEST_CASE("multiplicity") {
  auto r = make_ring<Rational>({"x", "y"});
  CHECK(multiplicity_m0(I(r, {"x^2 - y^3"}), 7).value == 2);
  CHECK(multiplicity_m0(I(r, {"y - x^2"}), 7).value == 1);
  auto r4 = make_ring<Rational>({"x", "y", "z", "w"});
  auto cone = multiplicity_m0(I(r4, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}), 7);
  CHECK(cone.value == 3);
  CHECK(cone.slices_agree);
  CHECK(cone.matches_tangent_cone);
  auto r3 = make_ring<Rational>({"x", "y", "z"});
  CHECK(multiplicity_m0(I(r3, {"x^3 + y^4 + z^5"}), 3).value == 3);
  CHECK(multiplicity_m0(I(r3, {"x*y - z^4 + x^7"}), 3).value == 2);
  CHECK(multiplicity_m0(I(r3, {"x", "y", "z"}), 3).value == 1);
}

TEST_CASE("monomial colength matches brute force") {
  Sampler rng(2024);
  for (int it = 0; it < 50; ++it) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
    auto gens = gen::zero_dim_monomials(n, rng, 6, 4);
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(n);
    auto r = make_ring<Rational>(names);
    PolyList<Rational> ps;
    for (const auto& m : gens) ps.push_back(Q::term(r, m, Rational(1)));
    Ideal<Rational> J(r, ps);
    auto expected = oracle::staircase_count(gens, n, 8);
    CHECK(*colength(J, L).colength == expected);
    CHECK(*colength(J, G).colength == expected);
  }
}

TEST_CASE("membership of random ideal elements") {
  auto r = make_ring<Rational>({"x", "y", "z"});
  Sampler rng(9);
  for (int it = 0; it < 10; ++it) {
    PolyList<Rational> gens = {gen::poly(r, rng, 3, 3), gen::poly(r, rng, 3, 3)};
    Ideal<Rational> J(r, gens);
    Q g(r);
    for (const auto& f : J.gens()) g += f * gen::poly(r, rng, 3, 2);
    CHECK(J.contains(g, G));
    CHECK(J.contains(g, L));
  }
}

TEST_CASE("local colength is invariant under linear coordinate changes") {
  auto r = make_ring<Rational>({"x", "y"});
  Sampler rng(17);
  for (int it = 0; it < 8; ++it) {
    auto J = I(r, {"x^3 - y^2 + x*y^2", "x*y + y^3"});
    Rational a = rng.nonzero_rational(9), b = rng.nonzero_rational(9);
    std::vector<std::optional<Q>> sub = {parse_polynomial<Rational>("x", r) + Q::constant(r, a) * parse_polynomial<Rational>("y", r),
                                         parse_polynomial<Rational>("y", r) + Q::constant(r, b) * parse_polynomial<Rational>("x", r)};
    if (a * b == 1) continue;
    PolyList<Rational> moved;
    for (const auto& f : J.gens()) moved.push_back(f.substitute(sub, r));
    CHECK(loc(Ideal<Rational>(r, moved)) == loc(J));
  }
}

TEST_CASE("serial and parallel normal forms agree") {
  auto r = make_ring<Rational>({"x", "y", "z"});
  auto J = I(r, {"x^2 - y*z", "y^2 - x*z + z^3", "z^2 - x*y"});
  const auto& B = J.global_basis();
  Sampler rng(4);
  PolyList<Rational> fs;
  for (int i = 0; i < 30; ++i) fs.push_back(gen::poly(r, rng, 6, 5));
  CHECK(normal_forms_serial(fs, B) == normal_forms_parallel(fs, B));
}

TEST_CASE("budgets") {
  auto r = make_ring<Rational>({"x", "y", "z"});
  Budget tight;
  tight.max_spairs = 1;
  CHECK_THROWS_AS(standard_basis<Rational>({parse_polynomial<Rational>("x^2 - y*z", r), parse_polynomial<Rational>("y^2 - x*z", r),
                                            parse_polynomial<Rational>("z^2 - x*y + x^3", r)},
                                           r, tight),
                  BudgetExceeded);
}

TEST_CASE("prime field basis matches rational basis") {
  auto rq = make_ring<Rational>({"x", "y", "z", "w"});
  Field<ModP> fp{next_prime(1u << 30)};
  auto rp = make_ring<ModP>({"x", "y", "z", "w"}, fp);
  const char* gens[] = {"x*z - y^2", "x*w - y*z", "y*w - z^2", "x + 2y - 3z + w"};
  PolyList<Rational> gq;
  PolyList<ModP> gp;
  for (auto s : gens) {
    gq.push_back(parse_polynomial<Rational>(s, rq));
    gp.push_back(parse_polynomial<ModP>(s, rp));
  }
  CHECK(colength(Ideal<Rational>(rq, gq), L).colength == colength(Ideal<ModP>(rp, gp), L).colength);
}
