#include "liebasis/verify.hpp"

#include "liebasis/errors.hpp"

#include <sstream>

namespace liebasis {

BasicReport check_basic(const LieAlgebra& L, const FieldFamily& fam) {
  BasicReport report;
  int n = L.dim();
  if (fam.size() != n) {
    report.notes.push_back("family has " + std::to_string(fam.size()) +
                           " fields but the algebra has dimension " +
                           std::to_string(n));
    return report;
  }
  ModuleBasisCheck basis = is_module_basis(fam);
  report.det = basis.det;
  report.det_constant_nonzero = basis.verdict;
  if (!basis.det.has_value())
    report.notes.push_back("family has " + std::to_string(fam.size()) +
                           " fields in " + std::to_string(fam.vars()) +
                           " variables; coefficient matrix is not square");
  else if (!basis.verdict)
    report.notes.push_back("coefficient determinant is " + basis.det->str() +
                           ", not a nonzero constant");
  if (fam.size() == fam.vars()) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        VectorField residual = field_bracket(fam.field(i), fam.field(j));
        for (int k = 1; k <= n; ++k)
          residual = residual - fam.field(k).scaled(L.c(i, j, k));
        if (!residual.is_zero())
          report.bracket_failures.push_back({i, j, std::move(residual)});
      }
  }
  report.verdict =
      report.det_constant_nonzero && report.bracket_failures.empty() &&
      fam.size() == fam.vars();
  return report;
}

CompatReport check_compat_equations(const LieAlgebra& L, const PolyMatrix& b) {
  int n = L.dim();
  if (b.rows() != n || b.cols() != n || b.vars() != n)
    fail(ErrorKind::Structural, "B must be square of the algebra dimension");
  CompatReport report;
  // The equation is antisymmetric in (p, q) and trivial on the diagonal, so
  // p < q lists each constraint exactly once.
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int k = 1; k <= n; ++k) {
        Polynomial residual(n);
        for (const auto& [key, value] : L.entries()) {
          auto [i, j, kk] = key;
          if (kk != k) continue;
          // c_ij^k (b_pi b_qj - b_pj b_qi), both orientations folded in.
          Polynomial pair = b.at(p - 1, i - 1) * b.at(q - 1, j - 1) -
                            b.at(p - 1, j - 1) * b.at(q - 1, i - 1);
          residual = residual + pair.scaled(value);
        }
        residual = residual + b.at(q - 1, k - 1).partial(p) -
                   b.at(p - 1, k - 1).partial(q);
        if (!residual.is_zero())
          report.residuals.push_back({p, q, k, std::move(residual)});
      }
  report.verdict = report.residuals.empty();
  return report;
}

std::vector<Polynomial> extract_bracket_coefficients(const FieldFamily& fam,
                                                     int i, int j) {
  PolyMatrix inverse = adjugate_inverse(fam.coefficient_matrix());
  VectorField bracket = field_bracket(fam.field(i), fam.field(j));
  int n = fam.vars();
  std::vector<Polynomial> gamma;
  gamma.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Polynomial sum(n);
    for (int t = 1; t <= n; ++t)
      sum = sum + bracket.coeff(t) * inverse.at(t - 1, k - 1);
    gamma.push_back(std::move(sum));
  }
  return gamma;
}

namespace {

TraceDivSample trace_div_sample(const LieAlgebra& L, const Realization& real,
                                std::vector<Rational> coords) {
  Rational trace = L.ad_trace(coords);
  VectorField combined = VectorField::zero(real.fields.vars());
  for (int i = 1; i <= L.dim(); ++i)
    combined =
        combined + real.fields.field(i).scaled(coords[static_cast<size_t>(i - 1)]);
  Polynomial div = divergence(combined);
  bool ok = (div == Polynomial::constant(real.fields.vars(), -trace));
  return TraceDivSample{std::move(coords), std::move(trace), std::move(div), ok};
}

} // namespace

TraceDivReport check_trace_divergence(const LieAlgebra& L,
                                      const Realization& real,
                                      std::uint64_t seed, int extra_samples) {
  if (real.fields.size() != L.dim() || real.fields.vars() != L.dim())
    fail(ErrorKind::Structural,
         "realization shape does not match the algebra");
  TraceDivReport report;
  report.verdict = true;
  int n = L.dim();
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> e(static_cast<size_t>(n), Rational(0));
    e[static_cast<size_t>(i - 1)] = 1;
    report.samples.push_back(trace_div_sample(L, real, std::move(e)));
    report.verdict = report.verdict && report.samples.back().ok;
  }
  SmallRationalStream stream(seed);
  for (int s = 0; s < extra_samples; ++s) {
    std::vector<Rational> coords(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
      coords[static_cast<size_t>(i)] = stream.next_integer(-3, 3);
    report.samples.push_back(trace_div_sample(L, real, std::move(coords)));
    report.verdict = report.verdict && report.samples.back().ok;
  }
  return report;
}

VerificationReport verify_realization(const LieAlgebra& L,
                                      const Realization& real,
                                      std::uint64_t seed) {
  VerificationReport report;
  report.basic = check_basic(L, real.fields);
  report.compat = check_compat_equations(L, real.b_matrix);
  report.trace_div = check_trace_divergence(L, real, seed);
  report.product_is_identity =
      (real.b_matrix * real.a_matrix ==
       PolyMatrix::identity(L.dim(), L.dim()));
  report.verdict = report.basic.verdict && report.compat.verdict &&
                   report.trace_div.verdict && report.product_is_identity;
  return report;
}

namespace {

void render_basic(std::ostream& out, const LieAlgebra& L,
                  const FieldFamily& fam, const BasicReport& report) {
  for (int i = 1; i <= fam.size(); ++i)
    out << "D" << i << " = " << fam.field(i).str() << "\n";
  if (report.det.has_value())
    out << "det = " << report.det->str() << "\n";
  for (const std::string& note : report.notes) out << "note: " << note << "\n";
  for (const BracketFailure& failure : report.bracket_failures)
    out << "bracket mismatch at (" << failure.i << "," << failure.j
        << "): residual " << failure.residual.str() << "\n";
  if (report.verdict)
    out << "basis check: pass (" << L.dim() << " fields close under bracket)\n";
  else
    out << "basis check: FAIL\n";
}

} // namespace

std::string report_to_text(const LieAlgebra& L, const FieldFamily& fam,
                           const BasicReport& report) {
  std::ostringstream out;
  render_basic(out, L, fam, report);
  out << "verdict: " << (report.verdict ? "pass" : "FAIL") << "\n";
  return out.str();
}

std::string report_to_text(const LieAlgebra& L, const Realization& real,
                           const VerificationReport& report) {
  std::ostringstream out;
  render_basic(out, L, real.fields, report.basic);
  for (const std::string& note : real.witness.notes)
    out << "note: " << note << "\n";
  if (report.compat.verdict) {
    out << "closure equations: pass\n";
  } else {
    for (const CompatResidual& r : report.compat.residuals)
      out << "closure residual at (" << r.p << "," << r.q << "," << r.k
          << "): " << r.value.str() << "\n";
    out << "closure equations: FAIL\n";
  }
  out << "B*A = identity: " << (report.product_is_identity ? "pass" : "FAIL")
      << "\n";
  out << "trace/divergence: "
      << (report.trace_div.verdict ? "pass" : "FAIL") << " ("
      << report.trace_div.samples.size() << " samples)\n";
  out << "verdict: " << (report.verdict ? "pass" : "FAIL") << "\n";
  return out.str();
}

} // namespace liebasis
