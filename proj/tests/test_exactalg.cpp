#include "doctest.h"
#include "germlab/parse.hpp"
#include "support/gen.hpp"

using namespace germlab;
using Q = Polynomial<Rational>;

namespace {

auto R2() { return make_ring<Rational>({"x", "y"}); }
Q P(const char* s, const RingPtr<Rational>& r) { return parse_polynomial<Rational>(s, r); }

}  // namespace

TEST_CASE("arithmetic") {
  auto r = R2();
  CHECK(P("x+y", r) + P("x-y", r) == P("2x", r));
  CHECK(P("x+1", r) * P("x-1", r) == P("x^2-1", r));
  CHECK((P("x^3 y + 7", r) * Q(r)).is_zero());
  CHECK(P("(x+y)^2", r) == P("x^2 + 2*x*y + y^2", r));
  CHECK(P("x^2 - 3/2*x*y + 1", r).to_string() == "x^2 - 3/2*x*y + 1");
}

TEST_CASE("parser diagnostics") {
  auto r = R2();
  try {
    P("x^ + 1", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos == 3);
  }
  CHECK_THROWS_AS(P("x + z", r), ParseError);
  CHECK_THROWS_AS(P("(x + y", r), ParseError);
  CHECK_THROWS_AS(P("", r), ParseError);
}

TEST_CASE("substitute and derivative") {
  auto r = R2();
  std::vector<std::optional<Q>> s(2);
  s[1] = Q::constant(r, 3);
  CHECK(P("x^2+y", r).substitute(s, r) == P("x^2+3", r));
  s[0] = P("x+1", r);
  s[1] = std::nullopt;
  CHECK(P("x*y", r).substitute(s, r) == P("x*y+y", r));

  auto rt = make_ring<Rational>({"t", "x"});
  std::vector<std::optional<Polynomial<Rational>>> tt(2);
  tt[0] = Polynomial<Rational>::constant(rt, Rational(1, 2));
  CHECK(parse_polynomial<Rational>("t*x", rt).substitute(tt, rt) == parse_polynomial<Rational>("x/2", rt));

  CHECK(P("x^3", r).derivative("x") == P("3x^2", r));
  CHECK(P("x*y", r).derivative("y") == P("x", r));
  CHECK(P("5", r).derivative("x").is_zero());
  CHECK_THROWS(P("x", r).derivative("w"));
}

TEST_CASE("ring mismatch") {
  auto a = R2();
  auto b = make_ring<Rational>({"x", "z"});
  CHECK_THROWS_AS(P("x", a) + parse_polynomial<Rational>("x", b), RingMismatch);
}

TEST_CASE("ring axioms and product rule on random inputs") {
  auto r = make_ring<Rational>({"x", "y", "z"});
  Sampler rng(11);
  for (int it = 0; it < 60; ++it) {
    auto a = gen::poly(r, rng), b = gen::poly(r, rng), c = gen::poly(r, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    for (std::size_t v = 0; v < 3; ++v) CHECK((a * b).derivative(v) == a * b.derivative(v) + b * a.derivative(v));
  }
}

TEST_CASE("substitution composes") {
  auto r = make_ring<Rational>({"x", "y"});
  Sampler rng(5);
  for (int it = 0; it < 25; ++it) {
    auto p = gen::poly(r, rng, 4, 3);
    std::vector<std::optional<Q>> sigma = {gen::poly(r, rng, 3, 2), gen::poly(r, rng, 3, 2)};
    std::vector<std::optional<Q>> tau = {gen::poly(r, rng, 3, 2), gen::poly(r, rng, 3, 2)};
    std::vector<std::optional<Q>> comp = {sigma[0]->substitute(tau, r), sigma[1]->substitute(tau, r)};
    CHECK(p.substitute(sigma, r).substitute(tau, r) == p.substitute(comp, r));
  }
}

TEST_CASE("monomial orders") {
  auto x = Monomial::var(0), y = Monomial::var(1);
  auto g = MonomialOrder::degrevlex();
  auto l = MonomialOrder::local();
  CHECK(g.greater(x * x, x));
  CHECK(l.greater(x, x * x));
  CHECK(l.greater(Monomial{}, x));
  CHECK(g.greater(x * x, x * y));
  CHECK(g.greater(x * y, y * y));
  auto e = MonomialOrder::elimination(1);
  CHECK(e.greater(x, y * y * y));
}

TEST_CASE("prime field") {
  Field<ModP> f{101};
  CHECK(to_string(f.from_rational(Rational(1, 2))) == "51");
  CHECK_THROWS_AS(f.from_rational(Rational(1, 101)), BadPrime);
  CHECK(is_prime_u32(2147483647));
  CHECK(!is_prime_u32(2147483649ull));
  CHECK(next_prime(1000000000) == 1000000007);
  auto r = make_ring<ModP>({"x", "y"}, f);
  auto p = parse_polynomial<ModP>("(x+y)^101", r);
  CHECK(p == parse_polynomial<ModP>("x^101 + y^101", r));
}

TEST_CASE("random linear forms") {
  auto r = make_ring<Rational>({"x", "y"});
  auto a = random_linear_form(r, 1, 100);
  CHECK(a.size() == 2);
  CHECK(a.total_degree() == 1);
  CHECK(a == random_linear_form(r, 1, 100));
  int distinct = 0;
  for (std::uint64_t s = 2; s < 12; ++s) distinct += !(random_linear_form(r, s, 100) == random_linear_form(r, s + 100, 100));
  CHECK(distinct == 10);
}
