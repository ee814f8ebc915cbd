#include "doctest.h"
#include "germlab/germkit.hpp"
#include "germlab/parse.hpp"
#include "support/gen.hpp"

using namespace germlab;

namespace {

using Q = Polynomial<Rational>;
const auto G = MonomialOrder::degrevlex();
const auto L = MonomialOrder::local();

Q P(const char* s, const RingPtr<Rational>& r) { return parse_polynomial<Rational>(s, r); }

PolyMatrix<Rational> M(const RingPtr<Rational>& r, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<PolyList<Rational>> out;
  for (auto row : rows) {
    out.emplace_back();
    for (auto s : row) out.back().push_back(P(s, r));
  }
  return PolyMatrix<Rational>::from_rows(r, out);
}

bool same_ideal(const Ideal<Rational>& a, const Ideal<Rational>& b) {
  for (const auto& g : a.gens())
    if (!b.contains(g, G)) return false;
  for (const auto& g : b.gens())
    if (!a.contains(g, G)) return false;
  return true;
}

Ideal<Rational> I(const RingPtr<Rational>& r, std::initializer_list<const char*> gens) {
  PolyList<Rational> g;
  for (auto s : gens) g.push_back(P(s, r));
  return Ideal<Rational>(r, g);
}

}  // namespace

TEST_CASE("minors") {
  auto r = make_ring<Rational>({"x", "y", "z", "w"});
  auto cone = M(r, {{"x", "y", "z"}, {"y", "z", "w"}});
  auto m2 = minors_parallel(cone, 2);
  REQUIRE(m2.size() == 3);
  CHECK(m2[0] == P("x*z - y^2", r));
  CHECK(m2[1] == P("x*w - y*z", r));
  CHECK(m2[2] == P("y*w - z^2", r));
  CHECK(minors_parallel(cone, 1).size() == 6);
  CHECK(minors_parallel(cone, 3).empty());
}

TEST_CASE("serial and parallel minors agree on random matrices") {
  auto r = make_ring<Rational>({"x", "y", "z"});
  Sampler rng(3);
  for (int it = 0; it < 6; ++it) {
    PolyMatrix<Rational> A(r, 4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) A.at(i, j) = gen::poly(r, rng, 3, 2);
    for (std::size_t k = 1; k <= 4; ++k) CHECK(minors_serial(A, k) == minors_parallel(A, k));
  }
}

TEST_CASE("minors ideal is invariant under unimodular row mixing") {
  auto r = make_ring<Rational>({"x", "y", "z", "w"});
  auto cone = M(r, {{"x", "y", "z"}, {"y", "z", "w"}});
  Sampler rng(8);
  for (int it = 0; it < 4; ++it) {
    auto c = Q::constant(r, rng.nonzero_rational(20));
    auto mixed = cone;
    for (std::size_t j = 0; j < 3; ++j) mixed.at(1, j) = cone.at(1, j) + c * cone.at(0, j);
    CHECK(same_ideal(minors_ideal(cone, 2), minors_ideal(mixed, 2)));
  }
}

TEST_CASE("presentations") {
  auto r = make_ring<Rational>({"x", "y", "z", "w"});
  auto P2 = make_presentation(M(r, {{"x", "y", "z"}, {"y", "z", "w"}}), 2);
  CHECK(P2.d() == 2);
  auto chk = validate_presentation(P2);
  CHECK(chk.ok());
  CHECK(krull_dimension(singular_locus_ideal(P2), L) == 0);

  auto r2 = make_ring<Rational>({"x", "y"});
  auto cusp = make_presentation(M(r2, {{"x^2 - y^3"}}), 1);
  CHECK(cusp.d() == 1);
  CHECK(validate_presentation(cusp).ok());
  std::vector<std::vector<Rational>> eps = {{Rational(1, 7)}};
  CHECK(deformed_presentation(cusp, eps).gens()[0] == P("x^2 - y^3 + 1/7", r2));
  std::vector<std::vector<Rational>> zero = {{Rational(0)}};
  CHECK(same_ideal(deformed_presentation(cusp, zero), cusp.ideal()));

  // a non-isolated surface
  auto r3 = make_ring<Rational>({"x", "y", "z"});
  auto bad = make_presentation(M(r3, {{"x*y"}}), 1);
  CHECK(!validate_presentation(bad).isolated_ok);
  CHECK_THROWS_AS(make_presentation(M(r3, {{"x", "y"}}), 3), InvalidPresentation);
}

TEST_CASE("critical ideals") {
  auto r3 = make_ring<Rational>({"x", "y", "z"});
  auto quadric = I(r3, {"x^2 + y^2 + z^2 - 1"});
  auto C = critical_ideal_on_deformation(quadric, P("x + 2y - 3z", r3), 1);
  CHECK(*colength(C, G).colength == 2);
  auto r2 = make_ring<Rational>({"x", "y"});
  auto A = I(r2, {"x^2 - y^3 + 1"});
  auto C2 = critical_ideal_on_deformation(A, P("y", r2), 1);
  CHECK(C2.contains(P("2x", r2), G));
  CHECK(*colength(C2, G).colength == 3);
  // ambient space: classical critical ideal
  Ideal<Rational> none(r2, {});
  auto C3 = critical_ideal_on_deformation(none, P("x^3 + y^2 + x", r2), 0);
  CHECK(same_ideal(C3, I(r2, {"3x^2 + 1", "2y"})));
}

TEST_CASE("jacobian extensions") {
  auto r = make_ring<Rational>({"x", "y"});
  auto W = I(r, {"y"});
  CHECK(same_ideal(delta_jacobian_extension<Rational>({P("x^2", r)}, W, 2), I(r, {"y", "x"})));
  CHECK(delta_jacobian_extension<Rational>({P("x^2", r)}, I(r, {"1"}), 1).is_unit(G));
  auto cusp = I(r, {"x^2 - y^3"});
  CHECK(same_ideal(delta_jacobian_extension<Rational>({}, cusp, 1), I(r, {"x^2 - y^3", "2x", "-3y^2"})));

  CHECK(same_ideal(iterated_jacobian_extension<Rational>({P("x^2", r)}, W, {1}), I(r, {"y", "x"})));
  CHECK(iterated_jacobian_extension<Rational>({P("x^2", r)}, W, {1, 1}).is_unit(G));
  auto deg = iterated_jacobian_extension<Rational>({P("x^3", r)}, W, {1, 1});
  CHECK(same_ideal(deg, I(r, {"x", "y"})));
  CHECK_THROWS(iterated_jacobian_extension<Rational>({P("x^3", r)}, W, {1, 2}));
  CHECK_THROWS(iterated_jacobian_extension<Rational>({P("x^3", r)}, W, {3}));

  auto [J1, S1] = degenerate_critical_set_ideal(P("x^2", r), {P("y", r)}, 1);
  CHECK(J1.is_unit(G));
  CHECK(S1.is_unit(G));
  auto [J2, S2] = degenerate_critical_set_ideal(P("x^3", r), {P("y", r)}, 1);
  CHECK(*colength(J2, L).colength == 1);
  CHECK(krull_dimension(J2, G) == 0);
}

TEST_CASE("function germs") {
  auto r = make_ring<Rational>({"x", "y"});
  FunctionGerm<Rational> fg{make_presentation(M(r, {{"x^2 - y^3"}}), 1), P("y", r)};
  CHECK(validate_germ(fg).ok());
  FunctionGerm<Rational> shifted{fg.host, P("y + 1", r)};
  CHECK(!validate_germ(shifted).vanishes_at_origin);
  FunctionGerm<Rational> flat{ambient_presentation(r), P("x^2", r)};
  CHECK(!validate_germ(flat).isolated_critical_point);
}
