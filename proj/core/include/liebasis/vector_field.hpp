#ifndef LIEBASIS_VECTOR_FIELD_HPP
#define LIEBASIS_VECTOR_FIELD_HPP

#include "liebasis/poly_matrix.hpp"
#include "liebasis/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liebasis {

/// Polynomial derivation of Q[x1..xn]: D = sum_j a_j d/dx_j.
class VectorField {
public:
  explicit VectorField(std::vector<Polynomial> coeffs);
  static VectorField zero(int vars);
  /// d/dx_axis.
  static VectorField partial(int vars, int axis);

  int vars() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  const Polynomial& coeff(int j) const;  // 1-based

  VectorField operator+(const VectorField& other) const;
  VectorField operator-(const VectorField& other) const;
  VectorField operator-() const;
  VectorField scaled(const Rational& factor) const;
  bool is_zero() const;

  bool operator==(const VectorField& other) const;
  bool operator!=(const VectorField& other) const { return !(*this == other); }

  /// Rendering like "d/dx1 - 1/2*x2*d/dx3".
  std::string str() const;

private:
  std::vector<Polynomial> coeffs_;
};

/// D(h), the derivation applied to a polynomial.
Polynomial apply(const VectorField& d, const Polynomial& h);

/// [D1, D2], with j-th coefficient D1(b_j) - D2(a_j).
VectorField field_bracket(const VectorField& d1, const VectorField& d2);

/// div D = sum_j da_j/dx_j.
Polynomial divergence(const VectorField& d);

/// Ordered family of fields over one variable ring.  The family may be
/// rectangular (m fields in n variables); the coefficient matrix has the
/// fields as rows.
class FieldFamily {
public:
  explicit FieldFamily(std::vector<VectorField> fields);
  static FieldFamily from_matrix(const PolyMatrix& coeffs);

  int size() const { return static_cast<int>(fields_.size()); }
  int vars() const;
  const std::vector<VectorField>& fields() const { return fields_; }
  const VectorField& field(int i) const;  // 1-based
  PolyMatrix coefficient_matrix() const;

  bool operator==(const FieldFamily& other) const {
    return fields_ == other.fields_;
  }

private:
  std::vector<VectorField> fields_;
};

struct ModuleBasisCheck {
  /// Determinant of the coefficient matrix; absent when it is not square.
  std::optional<Polynomial> det;
  bool verdict;
};

/// Whether the family is a basis of the free module of derivations: square
/// coefficient matrix with nonzero constant determinant.
ModuleBasisCheck is_module_basis(const FieldFamily& fam);

} // namespace liebasis

#endif
