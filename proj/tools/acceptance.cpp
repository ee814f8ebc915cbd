// One line per acceptance criterion; exit status 1 if any line fails.
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "germlab/cli.hpp"
#include "germlab/family.hpp"
#include "germlab/invariants.hpp"
#include "germlab/parse.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace germlab;

namespace {

const auto G = MonomialOrder::degrevlex();
const auto L = MonomialOrder::local();

struct Pair {
  std::vector<std::string> vars;
  std::vector<std::vector<std::string>> psi;  // empty: the ambient space
  std::size_t s;
  std::string f;
};

const std::vector<Pair> kCorpus = {
    {{"x", "y"}, {{"x^2 - y^3"}}, 1, "y"},
    {{"x", "y"}, {{"x^2 - y^2"}}, 1, "x + 2*y"},
    {{"x", "y"}, {}, 1, "x^2 + y^3"},
    {{"x", "y", "z"}, {{"x^2 + y^2 + z^2"}}, 1, "x"},
    {{"x", "y", "z"}, {{"x^2 + y^2 + z^3"}}, 1, "z"},
    {{"x", "y", "z"}, {{"x^2 + y^2 + z^2", "x*y"}}, 1, "x - 2*y + 3*z"},
    {{"x", "y", "z"}, {{"z - x*y"}}, 1, "z + x^2 + y^2"},
    {{"x", "y", "z", "w"}, {{"x", "y", "z"}, {"y", "z", "w"}}, 2, "x - 2*y + 3*z + w"},
};

template <class K>
std::vector<PolyList<K>> rows_of(const RingPtr<K>& r, const std::vector<std::vector<std::string>>& psi) {
  std::vector<PolyList<K>> rows;
  for (const auto& row : psi) {
    rows.emplace_back();
    for (const auto& e : row) rows.back().push_back(parse_polynomial<K>(e, r));
  }
  return rows;
}

template <class K>
FunctionGerm<K> germ(const Pair& p) {
  auto r = make_ring<K>(p.vars);
  auto host = p.psi.empty() ? ambient_presentation(r)
                            : make_presentation(PolyMatrix<K>::from_rows(r, rows_of(r, p.psi)), p.s);
  return {host, parse_polynomial<K>(p.f, r)};
}

template <class K>
FamilySpec<K> family(const Pair& p) {  // vars start with t
  auto r = make_ring<K>(p.vars);
  PolyMatrix<K> M;
  if (!p.psi.empty()) M = PolyMatrix<K>::from_rows(r, rows_of(r, p.psi));
  return make_family_spec(std::move(M), p.s, parse_polynomial<K>(p.f, r));
}

const Pair kSplit{{"t", "x"}, {}, 1, "x^3 - 3*t^2*x"};
const Pair kCuspToNode{{"t", "x", "y"}, {{"x^2 - y^3 - t*y^2"}}, 1, "y"};
const Pair kSpaceCurve{{"t", "x", "y", "z"},
                       {{"x - 2*t^3", "y - t^4", "z + t*y - t^2*x"}, {"y + 2*t*x", "z + t*y + t^2*x", "x^2"}},
                       2,
                       "y"};

std::vector<InvariantReport>& reports() {
  static std::vector<InvariantReport> rs = [] {
    std::vector<InvariantReport> out;
    for (const auto& p : kCorpus) {
      auto fg = germ<Rational>(p);
      out.push_back(invariant_report(fg.host, &fg.f, InvariantOptions{}));
    }
    return out;
  }();
  return rs;
}

struct Verdicts {
  std::vector<FamilyVerdict> trivial;
  FamilyVerdict split, cusp_to_node, space_curve;
};

Verdicts& verdicts() {
  static Verdicts v = [] {
    Verdicts out;
    for (const auto& p : kCorpus) out.trivial.push_back(whitney_verdict(trivial_family(germ<Rational>(p)), FamilyOptions{}));
    out.split = whitney_verdict(family<Rational>(kSplit), FamilyOptions{});
    out.cusp_to_node = whitney_verdict(family<Rational>(kCuspToNode), FamilyOptions{});
    FamilyOptions o;
    o.t_samples = {Rational(-1, 2), Rational(3, 1000)};
    out.space_curve = whitney_verdict(family<Rational>(kSpaceCurve), o);
    return out;
  }();
  return v;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  for (const auto& e : v)
    if (e == s) return true;
  return false;
}

using Check = std::function<bool(std::ostringstream&)>;

bool colength_oracle(std::ostringstream& note) {
  Sampler rng(derive_seed(1, 0xc1));
  int ok = 0;
  for (int it = 0; it < 50; ++it) {
    auto n = static_cast<std::size_t>(rng.range(1, 3));
    auto gens = gen::zero_dim_monomials(n, rng, 6, 4);
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(n);
    auto r = make_ring<Rational>(names);
    PolyList<Rational> ps;
    for (const auto& m : gens) ps.push_back(Polynomial<Rational>::from_terms(r, {{m, Rational(1)}}));
    Ideal<Rational> J(r, ps);
    auto expected = oracle::staircase_count(gens, n, 8);
    if (*colength(J, L).colength == expected && *colength(J, G).colength == expected) ++ok;
  }
  note << ok << "/50 ideals";
  return ok == 50;
}

bool milnor_numbers(std::ostringstream& note) {
  bool ok = true;
  auto one = [&](const std::vector<std::string>& vars, const std::string& f, long expected) {
    auto fg = germ<Rational>(Pair{vars, {}, 1, f});
    auto mu = milnor_number(fg, InvariantOptions{});
    bool agree = mu.samples.size() == 2 && mu.samples[0].seed != mu.samples[1].seed &&
                 mu.samples[0].value == mu.samples[1].value;
    if (mu.value != expected || !agree) ok = false;
    note << f << "=" << mu.value << " ";
  };
  for (int k = 1; k <= 5; ++k) one({"x"}, "x^" + std::to_string(k + 1), k);
  one({"x", "y"}, "x^2 - y^2", 1);
  one({"x", "y"}, "x^2 - y^3", 2);
  // <2x, 3y^2, 2z> has the staircase {1, y}
  auto suspension = static_cast<long>(
      oracle::staircase_count({Monomial::var(0), Monomial::var(1, 2), Monomial::var(2)}, 3, 8));
  one({"x", "y", "z"}, "x^2 + y^3 + z^2", suspension);
  return ok;
}

bool le_greuel(std::ostringstream& note) {
  bool ok = true, determinantal = false;
  for (std::size_t i = 0; i < kCorpus.size(); ++i) {
    const auto& R = reports()[i];
    if (R.mu_f != R.nu_X + R.nu_Y || !R.le_greuel_ok) ok = false;
    if (kCorpus[i].s == 2) determinantal = true;
  }
  note << kCorpus.size() << " pairs, s = 2 cone " << (determinantal ? "included" : "missing");
  return ok && determinantal && kCorpus.size() >= 6;
}

bool euler_obstruction(std::ostringstream& note) {
  int ok = 0;
  for (const auto& R : reports())
    if (R.eu_X_check.agree() && R.eu_Y_check.agree()) ++ok;
  note << ok << "/" << reports().size() << " germs, X and Y";
  return ok == static_cast<int>(reports().size());
}

bool nu_star(std::ostringstream& note) {
  int ok = 0;
  for (const auto& R : reports()) {
    const auto& m = R.m_X;
    const auto& nu = R.nu_star_X.nu;
    bool b = R.nu_star_X.bookkeeping_ok && nu.size() == m.size() && nu.front() == m.front() - 1;
    for (std::size_t i = 1; b && i < m.size(); ++i) b = m[i] == nu[i] + nu[i - 1];
    if (b) ++ok;
  }
  auto& V = verdicts();
  std::vector<const FamilyVerdict*> all = {&V.split, &V.cusp_to_node, &V.space_curve};
  for (const auto& t : V.trivial) all.push_back(&t);
  int fam = 0;
  for (auto* v : all)
    if (v->m_X_constant == v->nu_star_constant) ++fam;
  note << ok << "/" << reports().size() << " germs, " << fam << "/" << all.size() << " families";
  return ok == static_cast<int>(reports().size()) && fam == static_cast<int>(all.size());
}

bool conservation(std::ostringstream& note) {
  const auto& V = verdicts().split;
  bool ok = !V.good && !V.mu_constant && !V.conservation.empty();
  for (const auto& c : V.conservation) {
    // f_t' = 3(x - t)(x + t): two simple roots, and x = 0 is regular for t != 0
    ok = ok && c.mu_f == 2 && c.mu_at_origin == 0 && c.escaped_morse && c.contributions == std::vector<long>{0, 1, 1};
  }
  note << "mu(f)=" << V.conservation.front().mu_f << " = 1 + 1 at x = +-t, mu(f_t,0)="
       << V.conservation.front().mu_at_origin << ", good=" << V.good << ", mu_constant=" << V.mu_constant;
  return ok;
}

bool degenerate_detector(std::ostringstream& note) {
  auto r = make_ring<Rational>({"x", "y"});
  auto P = [&](const std::string& s) { return parse_polynomial<Rational>(s, r); };
  auto [J2, S2] = degenerate_critical_set_ideal(P("x^2"), {P("y")}, 1);
  auto [J3, S3] = degenerate_critical_set_ideal(P("x^3"), {P("y")}, 1);
  bool morse = J2.is_unit(G);
  // V = {0}: zero-dimensional and every point sits at the origin
  auto global = colength(J3, G).colength, local = colength(J3, L).colength;
  bool origin = krull_dimension(J3, G) == 0 && global && local && *global == *local && *local > 0;

  const std::vector<std::pair<std::vector<std::string>, std::string>> fs = {
      {{"x"}, "x^3"}, {{"x"}, "x^5"}, {{"x", "y"}, "x^2 - y^3"}, {{"x", "y"}, "x^2 + y^4"}, {{"x", "y", "z"}, "x^2 + y^3 + z^2"}};
  int units = 0, tried = 0;
  for (const auto& [vars, f] : fs)
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto rv = make_ring<Rational>(vars);
      auto g = parse_polynomial<Rational>(f, rv) + random_linear_form(rv, derive_seed(seed, 0xa7), 30);
      auto [J, S] = degenerate_critical_set_ideal<Rational>(g, {}, vars.size());
      if (J.is_unit(G)) ++units;
      ++tried;
    }
  note << "x^2 unit=" << morse << ", x^3 V={0}=" << origin << ", " << units << "/" << tried << " perturbations unit";
  return morse && origin && units == 20 && tried == 20;
}

bool whitney(std::ostringstream& note) {
  auto& V = verdicts();
  int trivial = 0;
  for (const auto& v : V.trivial)
    if (v.whitney && v.good && v.mu_constant && v.m_X_constant && v.m_Y_constant && v.nu_star_constant &&
        v.t_samples.size() == 4)
      ++trivial;
  bool split = !V.split.whitney && contains(V.split.failing, "good");
  bool node = !V.cusp_to_node.whitney && contains(V.cusp_to_node.failing, "good");
  bool curve = V.space_curve.good && !V.space_curve.whitney && V.space_curve.failing == std::vector<std::string>{"m_X"};
  note << trivial << "/" << V.trivial.size() << " trivial, split/cusp-to-node fail good=" << (split && node)
       << ", space curve fails m_X=" << curve;
  return trivial == static_cast<int>(V.trivial.size()) && split && node && curve;
}

// drops the per-sample records, which name the field their certificates were decided over
nlohmann::json integers(const nlohmann::json& j) {
  if (j.is_object()) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [k, v] : j.items())
      if (k != "samples") out[k] = integers(v);
    return out;
  }
  if (j.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : j) out.push_back(integers(v));
    return out;
  }
  return j;
}

bool determinism(std::ostringstream& note) {
  using namespace germlab::cli;
  const std::vector<std::pair<Command, std::string>> runs = {
      {Command::invariants, "cusp.toml"},       {Command::invariants, "icis.toml"},
      {Command::invariants, "cone.toml"},       {Command::family_check, "split.toml"},
      {Command::family_check, "cusp_to_node.toml"}, {Command::jacobian_extension, "cubic_on_line.toml"},
  };
  Sampler rng(derive_seed(1, 0xf9));
  auto prime = next_prime((std::uint64_t(1) << 30) + rng.below(std::uint64_t(1) << 30));
  Flags fp;
  fp.field = "fp:" + std::to_string(prime);
  int same = 0, agree = 0;
  for (const auto& [c, file] : runs) {
    auto p = parse_problem(std::string(GERMLAB_PROBLEMS_DIR) + "/" + file);
    auto a = run(c, p, Flags{});
    if (canonical(a.report) == canonical(run(c, p, Flags{}).report)) ++same;
    auto b = run(c, p, fp);
    if (a.exit_code == b.exit_code && integers(a.report["result"]) == integers(b.report["result"])) ++agree;
  }
  // 1/3 has no image mod 3
  auto third = parse_problem_text("variables = [\"x\", \"y\"]\nmatrix = [[\"x^2 - 1/3*y^3\"]]\nfunction = \"y\"\n");
  Flags three;
  three.field = "fp:3";
  auto q = run(Command::invariants, third, Flags{});
  auto r = run(Command::invariants, third, three);
  bool retry = r.exit_code == 0 && r.report.contains("bad_primes") && r.report["bad_primes"].front() == "3" &&
               q.report["result"]["invariants"] == r.report["result"]["invariants"];
  note << same << "/" << runs.size() << " byte-identical, " << agree << "/" << runs.size() << " agree over fp:" << prime
       << ", fp:3 retried to " << r.report.value("field", std::string("?")) << (retry ? "" : " with disagreement");
  return same == static_cast<int>(runs.size()) && agree == static_cast<int>(runs.size()) && retry;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Check>> criteria = {
      {"colength equals staircase count on random monomial ideals", colength_oracle},
      {"classical Milnor numbers", milnor_numbers},
      {"Le-Greuel identity on the corpus", le_greuel},
      {"Euler obstruction routes agree", euler_obstruction},
      {"nu* bookkeeping and constancy", nu_star},
      {"conservation of mu for x^3 - 3t^2x", conservation},
      {"degenerate critical point detector", degenerate_detector},
      {"Whitney verdicts", whitney},
      {"determinism and field robustness", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream note;
    bool ok = false;
    try {
      ok = criteria[i].second(note);
    } catch (const std::exception& e) {
      note << "error: " << e.what();
    }
    if (!ok) ++failed;
    std::printf("%s %zu %s (%s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, note.str().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
