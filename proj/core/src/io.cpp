#include "infsub/io.hpp"

#include "infsub/errors.hpp"

namespace infsub::io {

namespace {

const json &require(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw UsageError(std::string("JSON: missing key '") + key + "'");
  return j.at(key);
}

long long as_int(const json &j, const char *what) {
  if (!j.is_number_integer())
    throw UsageError(std::string("JSON: expected integer for ") + what);
  return j.get<long long>();
}

Field field_of(const json &j, const Field *fallback) {
  if (j.is_object() && j.contains("field"))
    return field_from_json(j.at("field"));
  if (j.is_object() && j.contains("p"))
    return Field::prime(static_cast<unsigned>(as_int(j.at("p"), "p")));
  if (fallback)
    return *fallback;
  throw UsageError("JSON: no field given");
}

long long scalar_entry(const json &e) {
  if (e.is_array()) {
    if (e.size() > 1)
      for (std::size_t i = 1; i < e.size(); ++i)
        if (as_int(e[i], "matrix entry") != 0)
          throw UsageError("JSON: matrices are prime-field only; entry has extension part");
    return e.empty() ? 0 : as_int(e[0], "matrix entry");
  }
  return as_int(e, "matrix entry");
}

} // namespace

json field_to_json(const Field &f) {
  json j = {{"p", f.p()}, {"k", f.degree()}};
  if (f.degree() > 1)
    j["poly"] = f.defining_poly();
  return j;
}

Field field_from_json(const json &j) {
  const auto p = static_cast<unsigned>(as_int(require(j, "p"), "p"));
  const long long k = j.contains("k") ? as_int(j.at("k"), "k") : 1;
  if (k == 1 && (!j.contains("poly") || j.at("poly").size() <= 2))
    return Field::prime(p);
  const auto poly = require(j, "poly").get<std::vector<long long>>();
  if (static_cast<long long>(poly.size()) != k + 1)
    throw UsageError("JSON: field poly length must be k + 1");
  return Field::extension(p, poly);
}

json element_to_json(const FieldElement &a) {
  if (a.field().is_prime_field())
    return a.value();
  return std::vector<Residue>(a.coeffs().begin(), a.coeffs().end());
}

FieldElement element_from_json(const Field &f, const json &j) {
  if (j.is_array())
    return f.element(j.get<std::vector<long long>>());
  return f.from_int(as_int(j, "field element"));
}

json matrix_to_json(const Matrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return {{"n", m.rows()}, {"field", field_to_json(m.field())}, {"rows", rows}};
}

Matrix matrix_from_json(const json &j, const Field *fallback) {
  const Field f = field_of(j, fallback);
  const json &rows = require(j, "rows");
  if (!rows.is_array())
    throw UsageError("JSON: rows must be an array");
  const std::size_t n = rows.size();
  if (j.contains("n") && as_int(j.at("n"), "n") != static_cast<long long>(n))
    throw UsageError("JSON: n does not match number of rows");
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw UsageError("JSON: matrix must be square");
    for (std::size_t c = 0; c < n; ++c)
      m.set(i, c, scalar_entry(rows[i][c]));
  }
  return m;
}

json truncpoly_to_json(const TruncPoly &a) {
  return {{"p", a.p()}, {"r", a.r()}, {"coeffs", a.coeffs()}};
}

TruncPoly truncpoly_from_json(const json &j, const Field *fallback) {
  const Field f = field_of(j, fallback);
  const auto r = static_cast<unsigned>(as_int(require(j, "r"), "r"));
  return TruncPoly(f, r, require(j, "coeffs").get<std::vector<long long>>());
}

json polymatrix_to_json(const PolyMatrix &phi) {
  json rows = json::array();
  for (std::size_t i = 0; i < phi.n(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < phi.n(); ++c)
      row.push_back(truncpoly_to_json(phi.entry(i, c)));
    rows.push_back(std::move(row));
  }
  return {{"n", phi.n()}, {"r", phi.r()}, {"field", field_to_json(phi.field())}, {"rows", rows}};
}

PolyMatrix polymatrix_from_json(const json &j, const Field *fallback) {
  const Field f = field_of(j, fallback);
  const json &rows = require(j, "rows");
  const std::size_t n = rows.size();
  if (n == 0)
    throw UsageError("JSON: empty polynomial matrix");
  std::vector<TruncPoly> entries;
  for (const auto &row : rows) {
    if (!row.is_array() || row.size() != n)
      throw UsageError("JSON: polynomial matrix must be square");
    for (const auto &e : row)
      entries.push_back(truncpoly_from_json(e, &f));
  }
  PolyMatrix phi = PolyMatrix::from_entries(n, entries);
  if (j.contains("r") && as_int(j.at("r"), "r") != phi.r())
    throw UsageError("JSON: r does not match entries");
  return phi;
}

json dist_to_json(const DistElement &a) {
  return {{"p", a.p()}, {"r", a.r()}, {"coeffs", a.coeffs()}};
}

DistElement dist_from_json(const json &j, const Field *fallback) {
  const Field f = field_of(j, fallback);
  const auto r = static_cast<unsigned>(as_int(require(j, "r"), "r"));
  return DistElement(f, r, require(j, "coeffs").get<std::vector<long long>>());
}

json tuple_to_json(const CommutingTuple &t) {
  json layers = json::array();
  for (std::size_t i = 0; i < t.r(); ++i)
    layers.push_back(matrix_to_json(t[i]));
  return {{"p", t.field().p()},
          {"r", t.r()},
          {"n", t.n()},
          {"field", field_to_json(t.field())},
          {"layers", layers}};
}

CommutingTuple tuple_from_json(const json &j) {
  const Field f = field_of(j, nullptr);
  const json &layers = require(j, "layers");
  if (!layers.is_array() || layers.empty())
    throw UsageError("JSON: layers must be a nonempty array");
  std::vector<Matrix> ms;
  for (const auto &l : layers)
    ms.push_back(matrix_from_json(l, &f));
  if (j.contains("r") && as_int(j.at("r"), "r") != static_cast<long long>(ms.size()))
    throw UsageError("JSON: r does not match number of layers");
  return CommutingTuple(std::move(ms));
}

json oneparam_to_json(const PolyMatrix &phi) {
  return {{"p", phi.p()},
          {"r", phi.r()},
          {"n", phi.n()},
          {"field", field_to_json(phi.field())},
          {"phi", polymatrix_to_json(phi)}};
}

PolyMatrix oneparam_from_json(const json &j) {
  const Field f = field_of(j, nullptr);
  return polymatrix_from_json(require(j, "phi"), &f);
}

json datum_to_json(const RootDatum &d) {
  json j = {{"rank", d.rank}, {"roots", d.roots}, {"coroots", d.coroots}};
  if (!d.name.empty())
    j["name"] = d.name;
  if (!d.simple.empty())
    j["simple"] = d.simple;
  if (!d.type_labels.empty())
    j["types"] = d.type_labels;
  return j;
}

RootDatum datum_from_json(const json &j) {
  RootDatum d;
  d.rank = static_cast<std::size_t>(as_int(require(j, "rank"), "rank"));
  d.roots = require(j, "roots").get<std::vector<std::vector<long long>>>();
  d.coroots = require(j, "coroots").get<std::vector<std::vector<long long>>>();
  if (j.contains("name"))
    d.name = j.at("name").get<std::string>();
  if (j.contains("simple"))
    d.simple = j.at("simple").get<std::vector<std::size_t>>();
  if (j.contains("types"))
    d.type_labels = j.at("types").get<std::vector<std::string>>();
  d.validate();
  return d;
}

json model_to_json(const UnipotentRadicalModel &m) {
  return {{"n", m.n()}, {"blocks", m.block_sizes()}, {"field", field_to_json(m.field())}};
}

UnipotentRadicalModel model_from_json(const json &j) {
  const Field f = field_of(j, nullptr);
  UnipotentRadicalModel m(f, require(j, "blocks").get<std::vector<std::size_t>>());
  if (j.contains("n") && as_int(j.at("n"), "n") != static_cast<long long>(m.n()))
    throw UsageError("JSON: n does not match block sizes");
  return m;
}

json report_to_json(const Report &r) {
  json checks = json::object();
  for (const auto &c : r.checks())
    checks[c.name] = {{"pass", c.failed == 0}, {"evaluated", c.evaluated}, {"failed", c.failed}};
  json violations = json::array();
  for (const auto &v : r.violations())
    violations.push_back({{"check", v.check}, {"sample", v.sample}, {"detail", v.detail}});
  json facts = json::object();
  for (const auto &[k, v] : r.facts())
    facts[k] = v;
  return {{"suite", r.name()},
          {"pass", r.passed()},
          {"checks", checks},
          {"facts", facts},
          {"violations", violations}};
}

json hopf_map_to_json(const HopfMapCandidate &c) {
  return {{"fX", c.fx.coeffs()}, {"fY", c.fy.coeffs()}};
}

json counterexample_to_json(const CounterexampleReport &r) {
  json maps = json::array();
  for (const auto &m : r.maps)
    maps.push_back(hopf_map_to_json(m));
  return {{"p", r.p},
          {"r", r.r},
          {"hom_count", r.hom_count},
          {"tuple_count", r.tuple_count},
          {"complete_search", r.complete_search},
          {"mismatch", r.mismatch()},
          {"maps", maps}};
}

json family_to_json(const FamilyReport &r) {
  return {{"p", r.p}, {"r", r.r}, {"checked", r.checked}, {"passed", r.passed},
          {"pass", r.all_pass()}};
}

std::string canonical(const json &j) { return j.dump(2) + "\n"; }

} // namespace infsub::io
