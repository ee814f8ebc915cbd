#include "germlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <sstream>

#include "germlab/family.hpp"
#include "germlab/parse.hpp"
#include "toml.hpp"

namespace germlab::cli {

using nlohmann::json;

InputError::InputError(const std::string& msg, std::size_t l, std::size_t c)
    : std::runtime_error(l ? std::to_string(l) + ":" + std::to_string(c) + ": " + msg : msg), line(l), column(c) {}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::germ: return "germ";
    case Mode::germ_function: return "germ+function";
    case Mode::family: return "family";
  }
  return "?";
}

std::string to_string(Command c) {
  switch (c) {
    case Command::validate: return "validate";
    case Command::invariants: return "invariants";
    case Command::family_check: return "family-check";
    case Command::jacobian_extension: return "jacobian-extension";
  }
  return "?";
}

Command parse_command(const std::string& name) {
  for (auto c : {Command::validate, Command::invariants, Command::family_check, Command::jacobian_extension})
    if (to_string(c) == name) return c;
  throw InputError("unknown command '" + name + "'");
}

namespace {

// ---------------------------------------------------------------- parsing

[[noreturn]] void fail(const std::string& msg, const toml::node& n) {
  auto b = n.source().begin;
  throw InputError(msg, b.line, b.column);
}

std::string need_string(const toml::node& n, const std::string& what) {
  if (!n.is_string()) fail(what + " must be a string", n);
  return *n.value<std::string>();
}

std::int64_t need_int(const toml::node& n, const std::string& what) {
  if (!n.is_integer()) fail(what + " must be an integer", n);
  return *n.value<std::int64_t>();
}

std::vector<std::vector<std::string>> need_matrix(const toml::node& n, const std::string& what) {
  const auto* rows = n.as_array();
  if (!rows || rows->empty()) fail(what + " must be a non-empty array of rows", n);
  std::vector<std::vector<std::string>> out;
  for (const auto& row : *rows) {
    const auto* r = row.as_array();
    if (!r || r->empty()) fail(what + ": each row must be a non-empty array of strings", row);
    out.emplace_back();
    for (const auto& e : *r) out.back().push_back(need_string(e, what + " entry"));
    if (out.back().size() != out.front().size()) fail(what + ": rows have different lengths", row);
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  auto t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t.empty() || q.set_str(t, 10) != 0 || q.get_den() == 0) throw InputError("not a rational number: '" + s + "'");
  q.canonicalize();
  return q;
}

/// Parses every polynomial string over Q so syntax errors point into the file.
void check_polynomial(const toml::node& n, const std::string& text, const RingPtr<Rational>& ring,
                      const std::string& what) {
  try {
    parse_polynomial<Rational>(text, ring);
  } catch (const ParseError& e) {
    auto b = n.source().begin;
    // one for the opening quote
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" at column "));
    throw InputError(what + ": " + msg, b.line, b.column + 1 + e.pos);
  }
}

}  // namespace

Problem parse_problem_text(const std::string& text, const std::string& source) {
  toml::table tbl;
  try {
    tbl = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    auto b = e.source().begin;
    throw InputError(std::string(e.description()), b.line, b.column);
  }
  Problem p;
  p.source = source;
  const toml::node* vars_node = nullptr;
  const toml::node* s_node = nullptr;
  const toml::node *matrix_node = nullptr, *function_node = nullptr;
  const toml::node *fmatrix_node = nullptr, *ffunction_node = nullptr;
  for (const auto& [k, v] : tbl) {
    const std::string key(k.str());
    if (key == "variables") {
      vars_node = &v;
    } else if (key == "matrix") {
      matrix_node = &v;
      p.matrix = need_matrix(v, "matrix");
    } else if (key == "s") {
      s_node = &v;
      auto s = need_int(v, "s");
      if (s < 1) fail("s must be at least 1", v);
      p.s = static_cast<std::size_t>(s);
    } else if (key == "function") {
      function_node = &v;
      p.function = need_string(v, "function");
    } else if (key == "parameter") {
      p.parameter = need_string(v, "parameter");
      if (!is_identifier(p.parameter)) fail("parameter must be an identifier", v);
    } else if (key == "family_matrix") {
      fmatrix_node = &v;
      p.family_matrix = need_matrix(v, "family_matrix");
    } else if (key == "family_function") {
      ffunction_node = &v;
      p.family_function = need_string(v, "family_function");
    } else if (key == "options") {
      const auto* opts = v.as_table();
      if (!opts) fail("options must be a table", v);
      for (const auto& [ok, ov] : *opts) {
        const std::string name(ok.str());
        if (name == "seed") {
          auto s = need_int(ov, "seed");
          if (s < 0) fail("seed must be non-negative", ov);
          p.seed = static_cast<std::uint64_t>(s);
        } else if (name == "field") {
          p.field = need_string(ov, "field");
        } else if (name == "t_samples") {
          const auto* a = ov.as_array();
          if (!a) fail("t_samples must be an array", ov);
          for (const auto& e : *a) {
            std::string t = e.is_integer() ? std::to_string(*e.value<std::int64_t>()) : need_string(e, "t sample");
            try {
              parse_rational(t);
            } catch (const InputError& err) {
              fail(err.what(), e);
            }
            p.t_samples.push_back(t);
          }
        } else if (name == "max_degree") {
          auto d = need_int(ov, "max_degree");
          if (d < 1 || d > 0xFFFF) fail("max_degree out of range", ov);
          p.max_degree = static_cast<std::uint32_t>(d);
        } else if (name == "max_spairs") {
          auto d = need_int(ov, "max_spairs");
          if (d < 1) fail("max_spairs must be positive", ov);
          p.max_spairs = static_cast<std::size_t>(d);
        } else {
          auto b = ok.source().begin;
          throw InputError("unknown option '" + name + "'", b.line, b.column);
        }
      }
    } else {
      auto b = k.source().begin;
      throw InputError("unknown key '" + key + "'", b.line, b.column);
    }
  }

  if (!vars_node) throw InputError("missing 'variables'");
  const auto* va = vars_node->as_array();
  if (!va || va->empty()) fail("variables must be a non-empty array of names", *vars_node);
  for (const auto& e : *va) {
    auto name = need_string(e, "variable");
    if (!is_identifier(name)) fail("variable names must be identifiers", e);
    if (std::find(p.variables.begin(), p.variables.end(), name) != p.variables.end())
      fail("duplicate variable '" + name + "'", e);
    p.variables.push_back(name);
  }
  if (p.variables.size() > 15) fail("at most 15 variables are supported", *vars_node);

  const bool family = fmatrix_node || ffunction_node;
  if (fmatrix_node && !ffunction_node)
    throw InputError("ambiguous mode: family_matrix given without family_function");
  if (!family && !matrix_node && !function_node) throw InputError("nothing to compute: give a matrix or a function");
  p.mode = family ? Mode::family : function_node ? Mode::germ_function : Mode::germ;
  if (family && std::find(p.variables.begin(), p.variables.end(), p.parameter) != p.variables.end())
    throw InputError("parameter '" + p.parameter + "' is also a variable");

  auto check_s = [&](const std::vector<std::vector<std::string>>& M, const toml::node* at) {
    if (M.empty()) {
      if (p.s != 1) {
        if (s_node) fail("s must be 1 without a matrix", *s_node);
        throw InputError("s must be 1 without a matrix");
      }
      return;
    }
    const std::size_t lo = std::min(M.size(), M.front().size());
    if (p.s > lo) fail("s out of range: must be at most " + std::to_string(lo), s_node ? *s_node : *at);
  };
  if (matrix_node || !fmatrix_node) check_s(p.matrix, matrix_node);
  if (fmatrix_node) check_s(p.family_matrix, fmatrix_node);
  if (matrix_node && fmatrix_node &&
      (p.matrix.size() != p.family_matrix.size() || p.matrix.front().size() != p.family_matrix.front().size()))
    fail("family_matrix and matrix have different shapes", *fmatrix_node);

  auto ring = make_ring<Rational>(p.variables);
  auto check_matrix = [&](const toml::node* n, const RingPtr<Rational>& r, const std::string& what) {
    if (!n) return;
    for (const auto& row : *n->as_array())
      for (const auto& e : *row.as_array()) check_polynomial(e, *e.value<std::string>(), r, what);
  };
  check_matrix(matrix_node, ring, "matrix");
  if (function_node) check_polynomial(*function_node, *p.function, ring, "function");
  if (family) {
    std::vector<std::string> names = {p.parameter};
    names.insert(names.end(), p.variables.begin(), p.variables.end());
    auto fr = make_ring<Rational>(names);
    check_matrix(fmatrix_node, fr, "family_matrix");
    check_polynomial(*ffunction_node, *p.family_function, fr, "family_function");
  }
  return p;
}

Problem parse_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str(), path);
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

namespace {

// ---------------------------------------------------------------- running

struct Settings {
  std::uint64_t seed = 1;
  Budget budget;
  std::vector<Rational> t_samples;
  std::vector<std::size_t> boardman;
};

std::string str(long v) { return std::to_string(v); }
std::string str(const Rational& q) { return q.get_str(); }

template <class T>
json strings(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

json rational_matrix(const std::vector<std::vector<Rational>>& M) {
  json a = json::array();
  for (const auto& row : M) a.push_back(strings(row));
  return a;
}

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json sample_json(const GenericitySample& s) {
  json c = {{"smooth", opt_bool(s.certificate.smooth)},
            {"morse", opt_bool(s.certificate.morse)},
            {"finite", opt_bool(s.certificate.finite)},
            {"dimension", opt_bool(s.certificate.dimension)},
            {"tangent_cone", opt_bool(s.certificate.tangent_cone)},
            {"ok", s.certificate.ok()}};
  if (!s.certificate.morse_method.empty()) c["morse_method"] = s.certificate.morse_method;
  if (!s.certificate.field.empty()) c["field"] = s.certificate.field;
  json j = {{"quantity", s.quantity},
            {"seed", std::to_string(s.seed)},
            {"value", std::to_string(s.value)},
            {"certificate", c}};
  if (!s.A.empty()) j["A"] = rational_matrix(s.A);
  if (!s.b.empty()) j["b"] = strings(s.b);
  if (s.e != 0) j["e"] = str(s.e);
  if (!s.p.empty()) j["p"] = rational_matrix(s.p);
  return j;
}

json report_json(const InvariantReport& R) {
  json inv = {{"d", str(R.d)},
              {"nu_X", str(R.nu_X)},
              {"m_X", strings(R.m_X)},
              {"eu_X", str(R.eu_X)},
              {"nu_star_X", strings(R.nu_star_X.nu)}};
  json checks = {{"eu_X", {{"polar_sum", str(R.eu_X_check.polar_sum)},
                           {"from_nu", str(R.eu_X_check.from_nu)},
                           {"agree", R.eu_X_check.agree()}}},
                 {"nu_star_bookkeeping", R.nu_star_X.bookkeeping_ok},
                 {"cross_checks", R.cross_checks_ok}};
  if (R.mu_X_icis) inv["mu_X_icis"] = str(*R.mu_X_icis);
  if (R.gaffney_md) inv["gaffney_md"] = str(*R.gaffney_md);
  if (R.has_function) {
    inv["mu_f"] = str(R.mu_f);
    inv["nu_Y"] = str(R.nu_Y);
    inv["m_Y"] = strings(R.m_Y);
    inv["eu_Y"] = str(R.eu_Y);
    if (R.mu_f_icis) inv["mu_f_icis"] = str(*R.mu_f_icis);
    checks["le_greuel"] = R.le_greuel_ok;
    checks["eu_Y"] = {{"polar_sum", str(R.eu_Y_check.polar_sum)},
                      {"from_nu", str(R.eu_Y_check.from_nu)},
                      {"agree", R.eu_Y_check.agree()}};
  }
  json samples = json::array();
  for (const auto& s : R.samples) samples.push_back(sample_json(s));
  return {{"invariants", inv}, {"checks", checks}, {"samples", samples}, {"warnings", R.warnings}};
}

template <class K>
struct Built {
  RingPtr<K> ring;
  DeterminantalPresentation<K> host;
  std::optional<Polynomial<K>> f;
  std::optional<FamilySpec<K>> family;
};

template <class K>
PolyMatrix<K> matrix_in(const std::vector<std::vector<std::string>>& M, const RingPtr<K>& r) {
  std::vector<PolyList<K>> rows;
  for (const auto& row : M) {
    rows.emplace_back();
    for (const auto& e : row) rows.back().push_back(parse_polynomial<K>(e, r));
  }
  return PolyMatrix<K>::from_rows(r, rows);
}

template <class K>
Built<K> build(const Problem& p, Field<K> field) {
  Built<K> b;
  b.ring = make_ring<K>(p.variables, field);
  if (p.mode == Mode::family) {
    std::vector<std::string> names = {p.parameter};
    names.insert(names.end(), p.variables.begin(), p.variables.end());
    auto fr = make_ring<K>(names, field);
    std::vector<std::size_t> lift(p.variables.size());
    std::iota(lift.begin(), lift.end(), 1);
    PolyMatrix<K> Psi;
    if (!p.family_matrix.empty())
      Psi = matrix_in<K>(p.family_matrix, fr);
    else if (!p.matrix.empty())
      Psi = matrix_in<K>(p.matrix, b.ring).map(fr, [&](const Polynomial<K>& q) { return q.embed(fr, lift); });
    try {
      b.family = make_family_spec(std::move(Psi), p.s, parse_polynomial<K>(*p.family_function, fr));
    } catch (const InvalidFamily& e) {
      throw InputError(e.what());
    }
    auto at0 = instantiate_at(*b.family, Rational(0));
    b.host = at0.germ.host;
    b.f = at0.germ.f;
    // base data, when given, must be the t = 0 member
    if (!p.matrix.empty() && !p.family_matrix.empty()) {
      auto M = make_presentation(matrix_in<K>(p.matrix, b.ring), p.s).psi;
      for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
          if (!(M.at(i, j) == b.host.psi.at(i, j).in_ring(b.ring)))
            throw InputError("family_matrix at " + p.parameter + " = 0 differs from matrix");
    }
    if (p.function && !(parse_polynomial<K>(*p.function, b.ring) == b.f->in_ring(b.ring)))
      throw InputError("family_function at " + p.parameter + " = 0 differs from function");
    return b;
  }
  try {
    b.host = p.matrix.empty() ? ambient_presentation(b.ring) : make_presentation(matrix_in<K>(p.matrix, b.ring), p.s);
  } catch (const InvalidPresentation& e) {
    throw InputError(e.what());
  }
  if (p.function) b.f = parse_polynomial<K>(*p.function, b.ring);
  return b;
}

template <class K>
json validation_json(const Built<K>& b, const Settings& s, bool& valid) {
  auto pc = validate_presentation(b.host, s.budget);
  json j = {{"presentation",
             {{"N", str(static_cast<long>(b.host.N()))},
              {"d", str(b.host.d())},
              {"codim", str(static_cast<long>(b.host.codim()))},
              {"krull_dimension", str(pc.krull_dimension)},
              {"dimension_ok", pc.dimension_ok},
              {"ids_bound_ok", pc.ids_bound_ok},
              {"isolated_ok", pc.isolated_ok},
              {"ok", pc.ok()}}}};
  valid = pc.ok();
  if (b.f) {
    auto gc = validate_germ(FunctionGerm<K>{b.host, *b.f}, s.budget);
    j["function"] = {{"vanishes_at_origin", gc.vanishes_at_origin},
                     {"isolated_critical_point", gc.isolated_critical_point},
                     {"ok", gc.ok()}};
    valid = valid && gc.ok();
  }
  j["valid"] = valid;
  return j;
}

InvariantOptions invariant_options(const Settings& s) {
  InvariantOptions o;
  o.seed = s.seed;
  o.budget = s.budget;
  return o;
}

json family_json(const FamilyVerdict& V) {
  json per_t = json::array();
  for (std::size_t i = 0; i < V.t_samples.size(); ++i) {
    auto r = report_json(V.per_t_reports[i]);
    r["t"] = str(V.t_samples[i]);
    per_t.push_back(r);
  }
  json cons = json::array();
  for (const auto& c : V.conservation)
    cons.push_back({{"t", str(c.t)},
                    {"mu_f", str(c.mu_f)},
                    {"mu_at_origin", str(c.mu_at_origin)},
                    {"escaped", str(c.escaped)},
                    {"escaped_morse", c.escaped_morse},
                    {"contributions", strings(c.contributions)},
                    {"ok", c.ok()}});
  return {{"t_samples", strings(V.t_samples)},
          {"per_t", per_t},
          {"goodness", {{"good", V.goodness.good}, {"mu_t", strings(V.goodness.mu_t)},
                        {"mu_route_agrees", V.goodness.mu_route_agrees}}},
          {"conservation", cons},
          {"good", V.good},
          {"mu_constant", V.mu_constant},
          {"m_X_constant", V.m_X_constant},
          {"m_Y_constant", V.m_Y_constant},
          {"nu_star_constant", V.nu_star_constant},
          {"whitney", V.whitney},
          {"failing", V.failing},
          {"warnings", V.warnings},
          {"scope", V.scope}};
}

template <class K>
json extension_json(const Built<K>& b, const Settings& s) {
  if (!b.f) throw InputError("jacobian-extension needs a function");
  std::vector<std::size_t> boardman = s.boardman;
  if (boardman.empty()) boardman = {static_cast<std::size_t>(std::max<long>(b.host.d(), 1)), 1};
  Ideal<K> J;
  try {
    J = iterated_jacobian_extension<K>({*b.f}, b.host.ideal(), boardman, {}, s.budget);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto G = MonomialOrder::degrevlex();
  json gens = json::array();
  for (const auto& g : J.global_basis(s.budget)) gens.push_back(g.to_string());
  const bool unit = J.is_unit(G, s.budget);
  PolyList<K> xs;
  for (std::size_t i = 0; i < b.ring->nvars(); ++i) xs.push_back(Polynomial<K>::variable(b.ring, i));
  const bool at_origin = !J.is_unit(MonomialOrder::local(), s.budget);
  const bool only_origin = at_origin && saturate(J, Ideal<K>(b.ring, xs), s.budget).is_unit(G, s.budget);
  auto q = colength(J, MonomialOrder::local(), s.budget);
  json j = {{"boardman", strings(std::vector<long>(boardman.begin(), boardman.end()))},
            {"generators", gens},
            {"unit", unit},
            {"vanishes_at_origin", at_origin},
            {"zero_set_is_origin", only_origin},
            {"local_colength", q.colength ? json(std::to_string(*q.colength)) : json(nullptr)},
            {"verdict", at_origin ? "degenerate" : "morse"}};
  return j;
}

template <class K>
json run_in(Command c, const Problem& p, const Settings& s, Field<K> field, int& code) {
  auto b = build(p, field);
  bool valid = false;
  json out = {{"validation", validation_json(b, s, valid)}};
  if (b.family) {
    auto inst = instantiate_at(*b.family, Rational(0), s.budget);
    valid = valid && inst.ok();
  }
  if (!valid) {
    code = kInputError;
    out["status"] = "input-error";
    out["error"] = "the problem does not describe an isolated determinantal singularity with a valid function germ";
    return out;
  }
  switch (c) {
    case Command::validate: break;
    case Command::invariants: {
      if (p.mode == Mode::family) throw InputError("invariants needs a germ problem; use family-check for families");
      auto R = invariant_report(b.host, b.f ? &*b.f : nullptr, invariant_options(s));
      out["result"] = report_json(R);
      break;
    }
    case Command::family_check: {
      if (p.mode != Mode::family) throw InputError("family-check needs family_function");
      FamilyOptions o;
      o.invariants = invariant_options(s);
      o.t_samples = s.t_samples;
      out["result"] = family_json(whitney_verdict(*b.family, o));
      break;
    }
    case Command::jacobian_extension: out["result"] = extension_json(b, s); break;
  }
  out["status"] = "ok";
  return out;
}

json input_json(const Problem& p) {
  json j = {{"variables", p.variables}, {"s", std::to_string(p.s)}, {"mode", to_string(p.mode)}};
  if (!p.matrix.empty()) j["matrix"] = p.matrix;
  if (p.function) j["function"] = *p.function;
  if (p.mode == Mode::family) {
    j["parameter"] = p.parameter;
    if (!p.family_matrix.empty()) j["family_matrix"] = p.family_matrix;
    j["family_function"] = *p.family_function;
  }
  return j;
}

std::uint64_t parse_prime(const std::string& field) {
  const std::string digits = field.substr(3);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
    throw InputError("field must be q or fp:PRIME");
  auto p = std::stoull(digits);
  if (p >> 32 || !is_prime_u32(p)) throw InputError("fp:" + digits + " is not a prime below 2^32");
  return p;
}

}  // namespace

Outcome run(Command c, const Problem& p, const Flags& f) {
  const auto start = std::chrono::steady_clock::now();
  Settings s;
  s.seed = f.seed ? *f.seed : p.seed ? *p.seed : f.env_seed ? *f.env_seed : 1;
  if (p.max_degree) s.budget.max_degree = *p.max_degree;
  if (f.max_degree) s.budget.max_degree = *f.max_degree;
  if (p.max_spairs) s.budget.max_spairs = *p.max_spairs;
  if (f.max_spairs) s.budget.max_spairs = *f.max_spairs;
  s.boardman = f.boardman;
  std::string field = f.field ? *f.field : p.field ? *p.field : "q";

  Outcome out;
  json& r = out.report;
  r["schema"] = kSchema;
  r["command"] = to_string(c);
  r["source"] = p.source;
  r["input"] = input_json(p);
  r["seed"] = std::to_string(s.seed);
  r["budget"] = {{"max_degree", std::to_string(s.budget.max_degree)},
                 {"max_spairs", std::to_string(s.budget.max_spairs)}};
  r["field_requested"] = field;
  try {
    for (const auto& t : f.t_samples.empty() ? p.t_samples : f.t_samples) s.t_samples.push_back(parse_rational(t));
    if (field != "q" && field.rfind("fp:", 0) != 0) throw InputError("field must be q or fp:PRIME");
    int code = kOk;
    json body;
    if (field == "q") {
      body = run_in<Rational>(c, p, s, Field<Rational>{}, code);
      r["field"] = "q";
    } else {
      std::uint64_t prime = parse_prime(field);
      json bad = json::array();
      for (;;) {
        try {
          body = run_in<ModP>(c, p, s, Field<ModP>{prime}, code);
          break;
        } catch (const BadPrime&) {
          bad.push_back(std::to_string(prime));
          prime = next_prime(prime + 1);
        }
      }
      r["field"] = Field<ModP>{prime}.name();
      if (!bad.empty()) r["bad_primes"] = bad;
    }
    r.update(body);
    out.exit_code = code;
  } catch (const InputError& e) {
    out.exit_code = kInputError;
    r["status"] = "input-error";
    r["error"] = e.what();
  } catch (const ParseError& e) {
    out.exit_code = kInputError;
    r["status"] = "input-error";
    r["error"] = e.what();
  } catch (const InvalidFamily& e) {
    out.exit_code = kInputError;
    r["status"] = "input-error";
    r["error"] = e.what();
  } catch (const InvalidPresentation& e) {
    out.exit_code = kInputError;
    r["status"] = "input-error";
    r["error"] = e.what();
  } catch (const GenericityFailure& e) {
    out.exit_code = kGenericityFailure;
    r["status"] = "genericity-failure";
    r["error"] = e.what();
  } catch (const BudgetExceeded& e) {
    out.exit_code = kBudgetExceeded;
    r["status"] = "budget-exceeded";
    r["error"] = e.what();
  }
  if (f.timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    r["timings"] = {{"total_ms", std::to_string(ms)}};
  }
  return out;
}

}  // namespace germlab::cli
