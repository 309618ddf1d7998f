#include "iwalab/serialize.hpp"

#include <string>

#include "iwalab/error.hpp"

namespace iwalab::io {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::uint64_t as_uint(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::uint64_t>();
  bad(std::string(what) + " must be a non-negative integer");
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Exponents exponents_from_json(const json& j, int f) {
  Exponents e(f, 0);
  if (j.is_null() || (j.is_array() && j.empty())) return e;
  if (!j.is_array() || static_cast<int>(j.size()) != f) bad("exponent lists must have length f");
  for (int i = 0; i < f; ++i) e[i] = static_cast<std::uint32_t>(as_uint(j[i], "exponent"));
  return e;
}

}  // namespace

json field_to_json(const Fq& F, Fq::Elem x) {
  if (F.degree() == 1) return x;
  return F.coords(x);
}

Fq::Elem field_from_json(const Fq& F, const json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
  if (!j.is_array() || static_cast<int>(j.size()) > F.degree()) bad("field element must be at most f coordinates");
  std::vector<std::uint32_t> c(F.degree(), 0);
  for (std::size_t i = 0; i < j.size(); ++i)
    c[i] = F.from_int(as_int(j[i], "field coordinate"));
  return F.from_coords(c);
}

json config_to_json(const PrimeConfig& cfg) {
  return {{"p", cfg.p}, {"f", cfg.f}, {"M", cfg.M}, {"N", cfg.N}, {"case", std::string(to_string(cfg.group))},
          {"seed", cfg.seed}};
}

PrimeConfig config_from_json(const json& j, PrimeConfig base) {
  if (!j.is_object()) bad("configuration must be an object");
  try {
    if (j.contains("p")) base.p = static_cast<std::uint32_t>(as_uint(j["p"], "p"));
    if (j.contains("f")) base.f = static_cast<int>(as_int(j["f"], "f"));
    if (j.contains("M")) base.M = static_cast<int>(as_int(j["M"], "M"));
    if (j.contains("N")) base.N = static_cast<int>(as_int(j["N"], "N"));
    if (j.contains("case")) base.group = parse_group_case(j["case"].get<std::string>());
    if (j.contains("seed")) base.seed = as_uint(j["seed"], "seed");
  } catch (const json::exception& e) {
    bad(e.what());
  }
  return base;
}

json uint_to_json(const UInt& x, int f) { return std::vector<std::uint64_t>(x.c.begin(), x.c.begin() + f); }

UInt uint_from_json(const json& j, int f) {
  UInt x;
  if (j.is_number_integer()) {
    x.c[0] = as_uint(j, "integer");
    return x;
  }
  if (!j.is_array() || static_cast<int>(j.size()) > f) bad("ring element must be at most f coordinates");
  for (std::size_t i = 0; i < j.size(); ++i) x.c[i] = as_uint(j[i], "ring coordinate");
  return x;
}

json digits_to_json(const DigitVector& d) { return d.x; }

DigitVector digits_from_json(const json& j) {
  if (!j.is_array()) bad("digits must be an array");
  DigitVector d;
  for (const auto& v : j) d.x.push_back(as_uint(v, "digit"));
  return d;
}

json element_to_json(const GroupElement& g, int f) {
  json e = json::array();
  for (const UInt& x : g.e) e.push_back(uint_to_json(x, f));
  return {{"case", std::string(to_string(g.kind))}, {"entries", e}};
}

GroupElement element_from_json(const json& j, int f) {
  GroupElement g;
  try {
    g.kind = parse_group_case(field(j, "case").get<std::string>());
  } catch (const json::exception& e) {
    bad(e.what());
  }
  const json& e = field(j, "entries");
  if (!e.is_array() || e.size() != 4) bad("entries must hold 4 ring elements");
  for (int i = 0; i < 4; ++i) g.e[i] = uint_from_json(e[i], f);
  return g;
}

json algebra_to_json(const GroupAlgebra& alg, const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [g, c] : x.terms)
    terms.push_back({{"digits", digits_to_json(alg.group().digits(g))}, {"coeff", field_to_json(alg.field(), c)}});
  return {{"terms", terms}};
}

AlgebraElement algebra_from_json(const GroupAlgebra& alg, const json& j) {
  const QuotientGroup& G = alg.group();
  if (j.is_object() && j.contains("element")) {
    const GroupElement g = element_from_json(j["element"], alg.config().f);
    require(g.kind == alg.config().group, ErrorKind::ConfigMismatch, "element case differs from configuration");
    if (!G.model().is_canonical(g)) raise(ErrorKind::NotInGroup, "element is not a canonical representative");
    return alg.from_group(g);
  }
  AlgebraElement x;
  for (const json& t : field(j, "terms")) {
    DigitVector d = digits_from_json(field(t, "digits"));
    if (static_cast<int>(d.x.size()) != G.rank()) bad("digit vector must have 3f entries");
    for (auto& v : d.x) v %= G.digit_modulus();
    const Fq::Elem c = t.contains("coeff") ? field_from_json(alg.field(), t["coeff"]) : 1;
    alg.axpy(x, c, alg.basis_element(G.index(d)));
  }
  return x;
}

json expansion_to_json(const Fq& F, const MonomialExpansion& e) {
  json terms = json::array();
  for (const auto& [k, c] : e.coeffs) terms.push_back({{"exponents", k}, {"coeff", field_to_json(F, c)}});
  return {{"cutoff", e.cutoff}, {"terms", terms}};
}

json ideal_to_json(const Fq& F, const IdealSpec& J) {
  auto full = [&](const Exponents& e) {
    Exponents out(J.f, 0);
    for (std::size_t i = 0; i < e.size() && i < out.size(); ++i) out[i] = e[i];
    return out;
  };
  json gens = json::array();
  for (const GradedPoly& g : J.f_gens) {
    json poly = json::array();
    for (const GradedTerm& t : g) {
      json term = {{"m", full(t.m)}, {"n", full(t.n)}, {"coeff", field_to_json(F, t.coeff)}};
      bool has_l = false;
      for (auto v : t.l) has_l |= v != 0;
      if (has_l) term["l"] = full(t.l);
      poly.push_back(term);
    }
    gens.push_back(poly);
  }
  return {{"name", J.name}, {"f_gens", gens}};
}

IdealSpec ideal_from_json(const Fq& F, const json& j, int f) {
  IdealSpec J;
  J.f = f;
  J.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
  const json& gens = field(j, "f_gens");
  if (!gens.is_array()) bad("f_gens must be an array");
  for (const json& poly : gens) {
    if (!poly.is_array()) bad("each generator must be an array of terms");
    GradedPoly g;
    for (const json& t : poly) {
      GradedTerm term;
      term.m = exponents_from_json(t.contains("m") ? t["m"] : json(), f);
      term.n = exponents_from_json(t.contains("n") ? t["n"] : json(), f);
      term.l = exponents_from_json(t.contains("l") ? t["l"] : json(), f);
      term.coeff = t.contains("coeff") ? field_from_json(F, t["coeff"]) : 1;
      if (term.coeff != 0) g.push_back(std::move(term));
    }
    J.f_gens.push_back(std::move(g));
  }
  return J;
}

json matrix_to_json(const Fq& F, const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(field_to_json(F, a(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Fq& F, const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad("matrix must be a non-empty list of rows");
  Matrix a(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != a.cols()) bad("matrix rows must have equal length");
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = field_from_json(F, j[i][k]);
  }
  return a;
}

json module_to_json(const Fq& F, const FiniteModule& m) {
  json gens = json::array();
  for (const Matrix& g : m.gens) gens.push_back(matrix_to_json(F, g));
  return {{"dim", m.dim},
          {"field", {{"p", m.cfg.p}, {"f", m.cfg.f}}},
          {"level", m.cfg.M},
          {"case", std::string(to_string(m.cfg.group))},
          {"label", m.label},
          {"generators", gens}};
}

FiniteModule module_from_json(const Fq& F, const json& j, const PrimeConfig& cfg) {
  FiniteModule m;
  m.cfg = cfg;
  m.provenance = Provenance::Loaded;
  m.dim = as_uint(field(j, "dim"), "dim");
  if (m.dim == 0) bad("dim must be positive");
  if (j.contains("field")) {
    const json& fl = j["field"];
    if (as_uint(field(fl, "p"), "p") != cfg.p || as_int(field(fl, "f"), "f") != cfg.f)
      raise(ErrorKind::ConfigMismatch, "module field differs from the configuration");
  }
  if (j.contains("level") && as_int(j["level"], "level") != cfg.M)
    raise(ErrorKind::ConfigMismatch, "module level differs from the configured M");
  if (j.contains("case") && parse_group_case(j["case"].get<std::string>()) != cfg.group)
    raise(ErrorKind::ConfigMismatch, "module case differs from the configuration");
  m.label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "loaded";
  const json& gens = field(j, "generators");
  if (!gens.is_array() || static_cast<int>(gens.size()) != cfg.rank()) bad("expected 3f generator matrices");
  for (const json& g : gens) {
    Matrix a = matrix_from_json(F, g);
    if (a.rows() != m.dim || a.cols() != m.dim) bad("generator matrix shape differs from dim");
    m.gens.push_back(std::move(a));
  }
  return m;
}

}  // namespace iwalab::io
