#include "liebasis/vector_field.hpp"

#include "liebasis/errors.hpp"

#include <sstream>

namespace liebasis {

VectorField::VectorField(std::vector<Polynomial> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    fail(ErrorKind::Structural, "vector field needs coefficients");
  int n = coeffs_.front().vars();
  if (static_cast<int>(coeffs_.size()) != n)
    fail(ErrorKind::Structural,
         "vector field needs one coefficient per variable");
  for (const Polynomial& p : coeffs_)
    if (p.vars() != n)
      fail(ErrorKind::Structural, "field coefficients in different rings");
}

VectorField VectorField::zero(int vars) {
  return VectorField(std::vector<Polynomial>(static_cast<size_t>(vars),
                                             Polynomial(vars)));
}

VectorField VectorField::partial(int vars, int axis) {
  if (axis < 1 || axis > vars)
    fail(ErrorKind::Structural, "partial axis out of range");
  std::vector<Polynomial> coeffs(static_cast<size_t>(vars), Polynomial(vars));
  coeffs[static_cast<size_t>(axis - 1)] =
      Polynomial::constant(vars, Rational(1));
  return VectorField(std::move(coeffs));
}

const Polynomial& VectorField::coeff(int j) const {
  if (j < 1 || j > vars())
    fail(ErrorKind::Structural, "field coefficient index out of range");
  return coeffs_[static_cast<size_t>(j - 1)];
}

VectorField VectorField::operator+(const VectorField& other) const {
  if (vars() != other.vars())
    fail(ErrorKind::Structural, "fields over different rings");
  std::vector<Polynomial> coeffs;
  coeffs.reserve(coeffs_.size());
  for (size_t j = 0; j < coeffs_.size(); ++j)
    coeffs.push_back(coeffs_[j] + other.coeffs_[j]);
  return VectorField(std::move(coeffs));
}

VectorField VectorField::operator-(const VectorField& other) const {
  return *this + (-other);
}

VectorField VectorField::operator-() const {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const Polynomial& p : coeffs_) coeffs.push_back(-p);
  return VectorField(std::move(coeffs));
}

VectorField VectorField::scaled(const Rational& factor) const {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const Polynomial& p : coeffs_) coeffs.push_back(p.scaled(factor));
  return VectorField(std::move(coeffs));
}

bool VectorField::is_zero() const {
  for (const Polynomial& p : coeffs_)
    if (!p.is_zero()) return false;
  return true;
}

bool VectorField::operator==(const VectorField& other) const {
  return coeffs_ == other.coeffs_;
}

std::string VectorField::str() const {
  std::ostringstream out;
  bool first = true;
  for (int j = 1; j <= vars(); ++j) {
    const Polynomial& a = coeff(j);
    // Expand the coefficient term by term so every printed summand is a
    // signed monomial times d/dx_j.
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
      const auto& [mono, coeff_value] = *it;
      Rational magnitude = abs(coeff_value);
      if (first) {
        if (sgn(coeff_value) < 0) out << "-";
        first = false;
      } else {
        out << (sgn(coeff_value) < 0 ? " - " : " + ");
      }
      if (magnitude != 1) out << rational_to_string(magnitude) << "*";
      for (int axis = 1; axis <= mono.vars(); ++axis) {
        int e = mono.exp(axis);
        if (e == 0) continue;
        out << "x" << axis;
        if (e > 1) out << "^" << e;
        out << "*";
      }
      out << "d/dx" << j;
    }
  }
  return first ? "0" : out.str();
}

Polynomial apply(const VectorField& d, const Polynomial& h) {
  if (h.vars() != d.vars())
    fail(ErrorKind::Structural, "field and polynomial in different rings");
  Polynomial result(h.vars());
  for (int j = 1; j <= d.vars(); ++j)
    result = result + d.coeff(j) * h.partial(j);
  return result;
}

VectorField field_bracket(const VectorField& d1, const VectorField& d2) {
  if (d1.vars() != d2.vars())
    fail(ErrorKind::Structural, "fields over different rings");
  std::vector<Polynomial> coeffs;
  coeffs.reserve(static_cast<size_t>(d1.vars()));
  for (int j = 1; j <= d1.vars(); ++j)
    coeffs.push_back(apply(d1, d2.coeff(j)) - apply(d2, d1.coeff(j)));
  return VectorField(std::move(coeffs));
}

Polynomial divergence(const VectorField& d) {
  Polynomial result(d.vars());
  for (int j = 1; j <= d.vars(); ++j)
    result = result + d.coeff(j).partial(j);
  return result;
}

FieldFamily::FieldFamily(std::vector<VectorField> fields)
    : fields_(std::move(fields)) {
  if (fields_.empty())
    fail(ErrorKind::Structural, "field family needs at least one field");
  int n = fields_.front().vars();
  for (const VectorField& f : fields_)
    if (f.vars() != n)
      fail(ErrorKind::Structural, "family fields over different rings");
}

FieldFamily FieldFamily::from_matrix(const PolyMatrix& coeffs) {
  std::vector<VectorField> fields;
  fields.reserve(static_cast<size_t>(coeffs.rows()));
  for (int r = 0; r < coeffs.rows(); ++r) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<size_t>(coeffs.cols()));
    for (int c = 0; c < coeffs.cols(); ++c) row.push_back(coeffs.at(r, c));
    fields.emplace_back(std::move(row));
  }
  return FieldFamily(std::move(fields));
}

int FieldFamily::vars() const { return fields_.front().vars(); }

const VectorField& FieldFamily::field(int i) const {
  if (i < 1 || i > size())
    fail(ErrorKind::Structural, "family index out of range");
  return fields_[static_cast<size_t>(i - 1)];
}

PolyMatrix FieldFamily::coefficient_matrix() const {
  PolyMatrix m(size(), vars(), vars());
  for (int i = 0; i < size(); ++i)
    for (int j = 1; j <= vars(); ++j)
      m.at(i, j - 1) = fields_[static_cast<size_t>(i)].coeff(j);
  return m;
}

ModuleBasisCheck is_module_basis(const FieldFamily& fam) {
  if (fam.size() != fam.vars()) return {std::nullopt, false};
  Polynomial d = det(fam.coefficient_matrix());
  bool ok = d.is_constant() && !d.is_zero();
  return {std::move(d), ok};
}

} // namespace liebasis
