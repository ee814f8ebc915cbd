#include <algorithm>

#include "doctest.h"
#include "germlab/family.hpp"
#include "germlab/parse.hpp"

using namespace germlab;

namespace {

struct FamilyCase {
  std::vector<std::string> vars;  // parameter first
  std::vector<std::vector<std::string>> psi;
  std::size_t s;
  std::string f;
};

template <class K>
FamilySpec<K> build(const FamilyCase& c, Field<K> field = {}) {
  auto r = make_ring<K>(c.vars, field);
  std::vector<PolyList<K>> rows;
  for (const auto& row : c.psi) {
    rows.emplace_back();
    for (const auto& e : row) rows.back().push_back(parse_polynomial<K>(e, r));
  }
  PolyMatrix<K> M;
  if (!rows.empty()) M = PolyMatrix<K>::from_rows(r, rows);
  return make_family_spec(std::move(M), c.s, parse_polynomial<K>(c.f, r));
}

template <class K>
FunctionGerm<K> germ(const std::vector<std::string>& vars, const std::vector<std::vector<std::string>>& psi,
                     std::size_t s, const std::string& f) {
  auto r = make_ring<K>(vars);
  std::vector<PolyList<K>> rows;
  for (const auto& row : psi) {
    rows.emplace_back();
    for (const auto& e : row) rows.back().push_back(parse_polynomial<K>(e, r));
  }
  auto host = psi.empty() ? ambient_presentation(r) : make_presentation(PolyMatrix<K>::from_rows(r, rows), s);
  return {host, parse_polynomial<K>(f, r)};
}

const FamilyCase kSplit{{"t", "x"}, {}, 1, "x^3 - 3*t^2*x"};
const FamilyCase kCuspToNode{{"t", "x", "y"}, {{"x^2 - y^3 - t*y^2"}}, 1, "y"};
const FamilyCase kSpaceCurve{{"t", "x", "y", "z"},
                             {{"x - 2*t^3", "y - t^4", "z + t*y - t^2*x"}, {"y + 2*t*x", "z + t*y + t^2*x", "x^2"}},
                             2,
                             "y"};

std::vector<long> flatten(const FamilyVerdict& V) {
  std::vector<long> v = {V.good, V.mu_constant, V.m_X_constant, V.m_Y_constant, V.nu_star_constant, V.whitney};
  for (const auto& R : V.per_t_reports) {
    v.push_back(R.mu_f);
    v.insert(v.end(), R.m_X.begin(), R.m_X.end());
    v.insert(v.end(), R.m_Y.begin(), R.m_Y.end());
    v.insert(v.end(), R.nu_star_X.nu.begin(), R.nu_star_X.nu.end());
  }
  for (const auto& c : V.conservation) v.insert(v.end(), c.contributions.begin(), c.contributions.end());
  return v;
}

}  // namespace

TEST_CASE("sample parameters") {
  auto ts = default_t_samples(5);
  REQUIRE(ts.size() == 4);
  CHECK(ts[0] == 0);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    CHECK(ts[i] != 0);
    CHECK(abs(ts[i]) <= 50);
  }
  CHECK(abs(ts[2]) <= Rational(50, 1000));
  CHECK(default_t_samples(5) == ts);
  CHECK(default_t_samples(6) != ts);
}

TEST_CASE("instantiation") {
  auto F = build<Rational>(kCuspToNode);
  auto at0 = instantiate_at(F, Rational(0));
  CHECK(at0.ok());
  auto cusp = germ<Rational>({"x", "y"}, {{"x^2 - y^3"}}, 1, "y");
  CHECK(at0.germ.host.equations().front() == cusp.host.equations().front().in_ring(at0.germ.host.ring()));
  CHECK(at0.germ.f.to_string() == cusp.f.to_string());

  auto at1 = instantiate_at(F, Rational(1));
  CHECK(at1.ok());
  // x^2 - y^2 - y^3: quadratic part x^2 - y^2 has discriminant 0^2 - 4(1)(-1) != 0
  const auto& phi = at1.germ.host.equations().front();
  Rational a, bxy, c;
  for (const auto& t : phi.terms()) {
    if (t.m.deg != 2) continue;
    if (t.m.e[0] == 2) a = t.c;
    if (t.m.e[0] == 1) bxy = t.c;
    if (t.m.e[1] == 2) c = t.c;
  }
  CHECK(bxy * bxy - 4 * a * c != 0);
  CHECK(icis_milnor_number(at1.germ.host, InvariantOptions{}).value == 1);

  auto T = trivial_family(cusp);
  for (auto t0 : {Rational(0), Rational(3, 7), Rational(-40)}) {
    auto inst = instantiate_at(T, t0);
    CHECK(inst.germ.f.to_string() == "y");
    CHECK(inst.germ.host.equations().front().to_string() == cusp.host.equations().front().to_string());
  }
  CHECK_THROWS_AS(instantiate_at(T, Rational(51)), InvalidFamily);
}

TEST_CASE("malformed families") {
  CHECK_THROWS_AS(build<Rational>(FamilyCase{{"t", "x"}, {}, 1, "x + t"}), InvalidFamily);
  CHECK_THROWS_AS(build<Rational>(FamilyCase{{"t", "x"}, {{"x"}}, 2, "x"}), InvalidFamily);
  CHECK_THROWS_AS(build<Rational>(FamilyCase{{"t"}, {}, 1, "t"}), InvalidFamily);
  auto g = germ<Rational>({"t", "y"}, {}, 1, "y");
  CHECK_THROWS_AS(trivial_family(g), InvalidFamily);
}

TEST_CASE("trivial families are Whitney equisingular") {
  const std::vector<std::tuple<std::vector<std::string>, std::vector<std::vector<std::string>>, std::size_t, std::string>>
      pairs = {
          {{"x", "y"}, {{"x^2 - y^3"}}, 1, "y"},
          {{"x", "y"}, {{"x^2 - y^2"}}, 1, "x + 2*y"},
          {{"x", "y"}, {}, 1, "x^2 + y^3"},
          {{"x", "y", "z"}, {{"x^2 + y^2 + z^2"}}, 1, "x"},
          {{"x", "y", "z"}, {{"x^2 + y^2 + z^3"}}, 1, "z"},
          {{"x", "y", "z"}, {{"x^2 + y^2 + z^2", "x*y"}}, 1, "x - 2*y + 3*z"},
          {{"x", "y", "z"}, {{"z - x*y"}}, 1, "z + x^2 + y^2"},
          {{"x", "y", "z", "w"}, {{"x", "y", "z"}, {"y", "z", "w"}}, 2, "x - 2*y + 3*z + w"},
      };
  for (const auto& [vars, psi, s, f] : pairs) {
    CAPTURE(f);
    auto T = trivial_family(germ<Rational>(vars, psi, s, f));
    auto V = whitney_verdict(T, FamilyOptions{});
    CHECK(V.t_samples.size() == 4);
    CHECK(V.good);
    CHECK(V.mu_constant);
    CHECK(V.m_X_constant);
    CHECK(V.m_Y_constant);
    CHECK(V.nu_star_constant);
    CHECK(V.whitney);
    CHECK(V.failing.empty());
    CHECK(V.warnings.empty());
    CHECK(V.scope == "verified at samples");
    for (const auto& c : V.conservation) {
      CHECK(c.ok());
      CHECK(c.escaped == 0);
      CHECK(c.mu_at_origin == c.mu_f);
    }
  }
}

TEST_CASE("critical points splitting off the origin") {
  auto F = build<Rational>(kSplit);
  InvariantOptions o;
  for (auto t0 : {Rational(1, 2), Rational(-7, 3000), Rational(13)}) {
    CAPTURE(t0.get_str());
    // oracle: f_t' = 3x^2 - 3t^2 vanishes exactly at x = t and x = -t, both simple
    auto d = [&](const Rational& x) -> Rational { return 3 * x * x - 3 * t0 * t0; };
    auto dd = [&](const Rational& x) -> Rational { return 6 * x; };
    CHECK(d(t0) == 0);
    CHECK(d(-t0) == 0);
    CHECK(dd(t0) != 0);
    CHECK(dd(-t0) != 0);
    auto c = conservation_check(F, t0, o);
    CHECK(c.mu_f == 2);  // roots of 3x^2 at 0
    CHECK(c.mu_at_origin == 0);
    CHECK(c.escaped == 2);
    CHECK(c.escaped_morse);
    CHECK(c.contributions == std::vector<long>{0, 1, 1});
    CHECK(c.ok());
  }
  auto g = goodness_check(F, {Rational(1, 2), Rational(-3)}, o);
  CHECK_FALSE(g.good);
  CHECK(g.mu_t == std::vector<long>{2, 0, 0});
  CHECK(g.mu_route_agrees);
  auto mu = constancy_check(F, {Rational(1, 2)}, Quantity::mu, o);
  CHECK_FALSE(mu.constant);
  CHECK(mu.values == std::vector<std::vector<long>>{{2}, {0}});

  auto V = whitney_verdict(F, FamilyOptions{});
  CHECK_FALSE(V.good);
  CHECK_FALSE(V.mu_constant);
  CHECK_FALSE(V.whitney);
  CHECK(std::find(V.failing.begin(), V.failing.end(), "good") != V.failing.end());
}

TEST_CASE("cusp degenerating from a node") {
  auto V = whitney_verdict(build<Rational>(kCuspToNode), FamilyOptions{});
  CHECK_FALSE(V.good);
  CHECK_FALSE(V.whitney);
  CHECK_FALSE(V.mu_constant);
  CHECK(V.failing.front() == "good");
  CHECK(V.per_t_reports.front().mu_f == 3);
  for (std::size_t i = 1; i < V.per_t_reports.size(); ++i) {
    CHECK(V.per_t_reports[i].mu_f == 2);
    CHECK(V.per_t_reports[i].m_X.front() == 2);
  }
  for (const auto& c : V.conservation) {
    CHECK(c.contributions == std::vector<long>{2, 1});
    CHECK(c.ok());
  }
  // m_i and nu* jump together
  CHECK(V.m_X_constant == V.nu_star_constant);
}

TEST_CASE("good family with a jumping polar multiplicity") {
  FamilyOptions o;
  o.t_samples = {Rational(-1, 2), Rational(3, 1000)};
  auto V = whitney_verdict(build<Rational>(kSpaceCurve), o);
  CHECK(V.good);
  CHECK(V.mu_constant);
  CHECK(V.m_Y_constant);
  CHECK_FALSE(V.m_X_constant);
  CHECK_FALSE(V.nu_star_constant);
  CHECK_FALSE(V.whitney);
  CHECK(V.failing == std::vector<std::string>{"m_X"});
  // the t = 0 curve is cut out by the 2x2 minors of [[x,y,z],[y,z,x^2]]
  CHECK(V.per_t_reports[0].m_X == std::vector<long>{3, 6});
  CHECK(V.per_t_reports[1].m_X == std::vector<long>{2, 5});
  CHECK(V.per_t_reports[2].m_X == std::vector<long>{2, 5});
  for (const auto& R : V.per_t_reports) CHECK(R.mu_f == 7);
  for (const auto& c : V.conservation) CHECK(c.escaped == 0);
}

TEST_CASE("verdicts are reproducible and field independent") {
  FamilyOptions o;
  auto q = flatten(whitney_verdict(build<Rational>(kCuspToNode), o));
  CHECK(q == flatten(whitney_verdict(build<Rational>(kCuspToNode), o)));
  CHECK(q == flatten(whitney_verdict(build<ModP>(kCuspToNode), o)));
  auto split = flatten(whitney_verdict(build<Rational>(kSplit), o));
  CHECK(split == flatten(whitney_verdict(build<ModP>(kSplit, Field<ModP>{next_prime(1u << 30)}), o)));
}
