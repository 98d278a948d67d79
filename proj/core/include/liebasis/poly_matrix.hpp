#ifndef LIEBASIS_POLY_MATRIX_HPP
#define LIEBASIS_POLY_MATRIX_HPP

#include "liebasis/polynomial.hpp"

#include <vector>

namespace liebasis {

/// Dense matrix of polynomials sharing one ambient variable count.
class PolyMatrix {
public:
  PolyMatrix(int rows, int cols, int vars);
  static PolyMatrix identity(int n, int vars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int vars() const { return vars_; }

  Polynomial& at(int r, int c);
  const Polynomial& at(int r, int c) const;

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  bool is_zero() const;

  bool operator==(const PolyMatrix& other) const;
  bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

private:
  int rows_, cols_, vars_;
  std::vector<Polynomial> entries_;
};

/// Exact determinant of a square matrix: direct cofactor expansion up to 3x3,
/// fraction-free (Bareiss) elimination beyond that so intermediate entries
/// stay polynomial.
Polynomial det(const PolyMatrix& m);

/// Inverse of a square matrix whose determinant is a nonzero constant, via
/// the adjugate scaled by 1/det.  Raises Singular when det = 0 and
/// NotUnimodular when det is a non-constant polynomial.
PolyMatrix adjugate_inverse(const PolyMatrix& m);

/// Jacobian of a polynomial map: row i is the gradient of fs[i].
PolyMatrix jacobian(const std::vector<Polynomial>& fs);

} // namespace liebasis

#endif
