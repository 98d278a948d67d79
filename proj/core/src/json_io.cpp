#include "liebasis/json_io.hpp"

#include "liebasis/errors.hpp"

#include <fstream>

namespace liebasis {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& value = require(j, key);
  if (!value.is_number_integer())
    fail(ErrorKind::Parse, std::string("field '") + key + "' must be an integer");
  return value.get<int>();
}

Rational require_rational(const Json& j, const char* key) {
  const Json& value = require(j, key);
  if (!value.is_string())
    fail(ErrorKind::Parse,
         std::string("field '") + key + "' must be a rational string");
  return rational_from_string(value.get<std::string>());
}

const Json& require_array(const Json& j, const char* key) {
  const Json& value = require(j, key);
  if (!value.is_array())
    fail(ErrorKind::Parse, std::string("field '") + key + "' must be an array");
  return value;
}

} // namespace

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  // Leading term first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json term;
    term["coeff"] = rational_to_string(it->second);
    term["exps"] = it->first.exps();
    terms.push_back(std::move(term));
  }
  return Json{{"n", p.vars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
  int n = require_int(j, "n");
  if (n < 1) fail(ErrorKind::Parse, "polynomial needs n >= 1");
  Polynomial p(n);
  for (const Json& term : require_array(j, "terms")) {
    Rational coeff = require_rational(term, "coeff");
    const Json& exps = require_array(term, "exps");
    if (static_cast<int>(exps.size()) != n)
      fail(ErrorKind::Parse, "term exponent count differs from n");
    std::vector<int> e;
    e.reserve(exps.size());
    for (const Json& entry : exps) {
      if (!entry.is_number_integer() || entry.get<int>() < 0)
        fail(ErrorKind::Parse, "exponents must be non-negative integers");
      e.push_back(entry.get<int>());
    }
    p = p + Polynomial::term(Monomial(std::move(e)), coeff);
  }
  return p;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

PolyMatrix poly_matrix_from_json(const Json& j) {
  int rows = require_int(j, "rows");
  int cols = require_int(j, "cols");
  const Json& entries = require_array(j, "entries");
  if (rows < 1 || cols < 1 || static_cast<int>(entries.size()) != rows)
    fail(ErrorKind::Parse, "matrix shape mismatch");
  std::vector<std::vector<Polynomial>> parsed;
  int vars = -1;
  for (const Json& row : entries) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(ErrorKind::Parse, "matrix row width mismatch");
    std::vector<Polynomial> prow;
    for (const Json& cell : row) {
      prow.push_back(polynomial_from_json(cell));
      if (vars < 0) vars = prow.back().vars();
      if (prow.back().vars() != vars)
        fail(ErrorKind::Parse, "matrix entries in different rings");
    }
    parsed.push_back(std::move(prow));
  }
  PolyMatrix m(rows, cols, vars);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = parsed[static_cast<size_t>(r)][static_cast<size_t>(c)];
  return m;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(rational_to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RatMatrix rat_matrix_from_json(const Json& j) {
  int rows = require_int(j, "rows");
  int cols = require_int(j, "cols");
  const Json& entries = require_array(j, "entries");
  if (rows < 0 || cols < 1 || static_cast<int>(entries.size()) != rows)
    fail(ErrorKind::Parse, "matrix shape mismatch");
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = entries.at(static_cast<size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(ErrorKind::Parse, "matrix row width mismatch");
    for (int c = 0; c < cols; ++c) {
      const Json& cell = row.at(static_cast<size_t>(c));
      if (!cell.is_string())
        fail(ErrorKind::Parse, "rational entries must be strings");
      m.at(r, c) = rational_from_string(cell.get<std::string>());
    }
  }
  return m;
}

Json to_json(const LieAlgebra& L) {
  Json brackets = Json::array();
  for (const auto& [key, value] : L.entries()) {
    auto [i, j, k] = key;
    brackets.push_back(Json{{"i", i},
                            {"j", j},
                            {"k", k},
                            {"c", rational_to_string(value)}});
  }
  return Json{{"dim", L.dim()}, {"brackets", std::move(brackets)}};
}

LieAlgebra algebra_from_json(const Json& j) {
  int dim = require_int(j, "dim");
  std::vector<BracketEntry> entries;
  for (const Json& entry : require_array(j, "brackets"))
    entries.push_back({require_int(entry, "i"), require_int(entry, "j"),
                       require_int(entry, "k"), require_rational(entry, "c")});
  try {
    return LieAlgebra::from_entries(dim, entries);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Structural)
      fail(ErrorKind::Parse, e.what());
    throw;
  }
}

Json to_json(const SolvableSplit& split) {
  return Json{{"solvable", Json{{"k", split.k}, {"m", split.m}}}};
}

Json to_json(const LeviData& levi) {
  Json inner{{"m", levi.borel_end}};
  if (levi.solvable_dim > 0) inner["solvable_dim"] = levi.solvable_dim;
  return Json{{"levi", std::move(inner)}};
}

std::pair<std::optional<SolvableSplit>, std::optional<LeviData>>
splits_from_json(const Json& j) {
  std::optional<SolvableSplit> solvable;
  std::optional<LeviData> levi;
  if (j.contains("solvable")) {
    const Json& s = j.at("solvable");
    solvable = SolvableSplit{require_int(s, "k"), require_int(s, "m")};
  }
  if (j.contains("levi")) {
    const Json& s = j.at("levi");
    LeviData data{require_int(s, "m"), 0};
    if (s.contains("solvable_dim")) data.solvable_dim = require_int(s, "solvable_dim");
    levi = data;
  }
  if (!solvable && !levi)
    fail(ErrorKind::Parse, "split file needs a 'solvable' or 'levi' object");
  return {solvable, levi};
}

Json to_json(const FieldFamily& fam) {
  Json fields = Json::array();
  for (int i = 1; i <= fam.size(); ++i) {
    Json coeffs = Json::array();
    for (int c = 1; c <= fam.vars(); ++c)
      coeffs.push_back(to_json(fam.field(i).coeff(c)));
    fields.push_back(Json{{"coeffs", std::move(coeffs)}});
  }
  return Json{{"n", fam.vars()}, {"fields", std::move(fields)}};
}

FieldFamily field_family_from_json(const Json& j) {
  int n = require_int(j, "n");
  std::vector<VectorField> fields;
  for (const Json& field : require_array(j, "fields")) {
    std::vector<Polynomial> coeffs;
    for (const Json& cell : require_array(field, "coeffs"))
      coeffs.push_back(polynomial_from_json(cell));
    if (static_cast<int>(coeffs.size()) != n)
      fail(ErrorKind::Parse, "field coefficient count differs from n");
    for (const Polynomial& p : coeffs)
      if (p.vars() != n)
        fail(ErrorKind::Parse, "field coefficients in the wrong ring");
    fields.emplace_back(std::move(coeffs));
  }
  if (fields.empty()) fail(ErrorKind::Parse, "field file lists no fields");
  return FieldFamily(std::move(fields));
}

Json to_json(const TensorElement& t) {
  Json coords = Json::array();
  for (int i = 1; i <= t.dim(); ++i) coords.push_back(to_json(t.coord(i)));
  return Json{{"coords", std::move(coords)}};
}

TensorElement tensor_from_json(const Json& j,
                               std::shared_ptr<const LieAlgebra> algebra) {
  std::vector<Polynomial> coords;
  for (const Json& cell : require_array(j, "coords"))
    coords.push_back(polynomial_from_json(cell));
  if (static_cast<int>(coords.size()) != algebra->dim())
    fail(ErrorKind::Parse, "tensor coordinate count differs from dim");
  return TensorElement(std::move(algebra), std::move(coords));
}

Json to_json(const AhatElement& a) {
  Json j = to_json(a.tensor);
  Json partials = Json::array();
  for (const Rational& r : a.partials)
    partials.push_back(rational_to_string(r));
  j["partials"] = std::move(partials);
  return j;
}

AhatElement ahat_from_json(const Json& j,
                           std::shared_ptr<const LieAlgebra> algebra) {
  const Json& raw = require_array(j, "partials");
  std::vector<Rational> partials;
  for (const Json& cell : raw) {
    if (!cell.is_string())
      fail(ErrorKind::Parse, "partials must be rational strings");
    partials.push_back(rational_from_string(cell.get<std::string>()));
  }
  if (static_cast<int>(partials.size()) != algebra->dim())
    fail(ErrorKind::Parse, "partial count differs from dim");
  return AhatElement{std::move(partials), tensor_from_json(j, std::move(algebra))};
}

Json to_json(const Realization& real) {
  Json witness = Json::object();
  if (real.witness.w) witness["w"] = to_json(*real.witness.w);
  if (real.witness.u) witness["u"] = to_json(*real.witness.u);
  if (real.witness.basis_change) {
    witness["basis_change"] = to_json(real.witness.basis_change->matrix);
    witness["basis_change_inverse"] =
        to_json(real.witness.basis_change->inverse);
  }
  witness["notes"] = real.witness.notes;
  return Json{{"algebra", to_json(real.algebra)},
              {"fields", to_json(real.fields)},
              {"B", to_json(real.b_matrix)},
              {"A", to_json(real.a_matrix)},
              {"witness", std::move(witness)}};
}

Realization realization_from_json(const Json& j) {
  LieAlgebra algebra = algebra_from_json(require(j, "algebra"));
  auto shared_algebra = std::make_shared<const LieAlgebra>(algebra);
  FieldFamily fields = field_family_from_json(require(j, "fields"));
  PolyMatrix b = poly_matrix_from_json(require(j, "B"));
  PolyMatrix a = poly_matrix_from_json(require(j, "A"));
  Witness witness;
  if (j.contains("witness")) {
    const Json& w = j.at("witness");
    if (w.contains("w")) witness.w = tensor_from_json(w.at("w"), shared_algebra);
    if (w.contains("u")) witness.u = tensor_from_json(w.at("u"), shared_algebra);
    if (w.contains("basis_change"))
      witness.basis_change =
          BasisChange{rat_matrix_from_json(w.at("basis_change")),
                      rat_matrix_from_json(require(w, "basis_change_inverse"))};
    if (w.contains("notes"))
      for (const Json& note : w.at("notes"))
        witness.notes.push_back(note.get<std::string>());
  }
  return Realization{std::move(algebra), std::move(fields), std::move(b),
                     std::move(a), std::move(witness)};
}

Json to_json(const FactoredAutomorphism& fact) {
  Json factors = Json::array();
  for (const auto& factor : fact.factors)
    factors.push_back(Json{{"column", factor.column}, {"h", to_json(factor.h)}});
  return Json{{"factors", std::move(factors)}};
}

FactoredAutomorphism factored_automorphism_from_json(const Json& j) {
  FactoredAutomorphism fact;
  for (const Json& factor : require_array(j, "factors"))
    fact.factors.push_back({require_int(factor, "column"),
                            polynomial_from_json(require(factor, "h"))});
  return fact;
}

Json polynomial_list_to_json(const std::vector<Polynomial>& polys) {
  Json list = Json::array();
  for (const Polynomial& p : polys) list.push_back(to_json(p));
  int n = polys.empty() ? 1 : polys.front().vars();
  return Json{{"n", n}, {"polys", std::move(list)}};
}

std::vector<Polynomial> polynomial_list_from_json(const Json& j) {
  int n = require_int(j, "n");
  std::vector<Polynomial> polys;
  for (const Json& cell : require_array(j, "polys")) {
    polys.push_back(polynomial_from_json(cell));
    if (polys.back().vars() != n)
      fail(ErrorKind::Parse, "list entry in the wrong ring");
  }
  return polys;
}

namespace {

Json bracket_failures_to_json(const BasicReport& report) {
  Json failures = Json::array();
  for (const BracketFailure& f : report.bracket_failures) {
    Json coeffs = Json::array();
    for (int c = 1; c <= f.residual.vars(); ++c)
      coeffs.push_back(to_json(f.residual.coeff(c)));
    failures.push_back(Json{{"i", f.i}, {"j", f.j}, {"residual", std::move(coeffs)}});
  }
  return failures;
}

Json det_to_json(const BasicReport& report) {
  return report.det.has_value() ? to_json(*report.det) : Json(nullptr);
}

} // namespace

Json to_json(const BasicReport& report) {
  return Json{{"verdict", report.verdict},
              {"det", det_to_json(report)},
              {"bracket_failures", bracket_failures_to_json(report)},
              {"compat_residuals", Json(nullptr)},
              {"trace_div", Json(nullptr)},
              {"notes", report.notes}};
}

Json to_json(const VerificationReport& report) {
  Json residuals = Json::array();
  for (const CompatResidual& r : report.compat.residuals)
    residuals.push_back(Json{
        {"p", r.p}, {"q", r.q}, {"k", r.k}, {"value", to_json(r.value)}});
  Json samples = Json::array();
  for (const TraceDivSample& s : report.trace_div.samples) {
    Json coords = Json::array();
    for (const Rational& c : s.coords)
      coords.push_back(rational_to_string(c));
    samples.push_back(Json{{"coords", std::move(coords)},
                           {"trace", rational_to_string(s.trace)},
                           {"div", to_json(s.div)},
                           {"ok", s.ok}});
  }
  return Json{{"verdict", report.verdict},
              {"det", det_to_json(report.basic)},
              {"bracket_failures", bracket_failures_to_json(report.basic)},
              {"compat_residuals", std::move(residuals)},
              {"trace_div", std::move(samples)},
              {"product_is_identity", report.product_is_identity},
              {"notes", report.basic.notes}};
}

void save_json_file(const std::filesystem::path& path, Json content) {
  content["format_version"] = 1;
  std::ofstream out(path);
  if (!out)
    fail(ErrorKind::Parse, "cannot open '" + path.string() + "' for writing");
  out << content.dump(2) << "\n";
  if (!out)
    fail(ErrorKind::Parse, "failed writing '" + path.string() + "'");
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorKind::Parse, "cannot open '" + path.string() + "'");
  Json content;
  try {
    content = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse,
         "invalid JSON in '" + path.string() + "': " + e.what());
  }
  if (!content.is_object() || !content.contains("format_version") ||
      content.at("format_version") != 1)
    fail(ErrorKind::Parse,
         "'" + path.string() + "' is missing format_version 1");
  return content;
}

} // namespace liebasis
