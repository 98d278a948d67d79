#ifndef LIEBASIS_RAT_MATRIX_HPP
#define LIEBASIS_RAT_MATRIX_HPP

#include "liebasis/rational.hpp"

#include <vector>

namespace liebasis {

/// Dense matrix of rationals.  Rows double as coordinate vectors throughout
/// the subspace machinery; a subspace is represented by its reduced
/// row-echelon basis.
class RatMatrix {
public:
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                             int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c);
  const Rational& at(int r, int c) const;
  std::vector<Rational> row(int r) const;

  RatMatrix operator*(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const;
  bool operator!=(const RatMatrix& other) const { return !(*this == other); }

private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

/// Reduced row echelon form with zero rows dropped, so the result is a
/// canonical basis of the row space.  Pivoting is deterministic: the first
/// row with a nonzero entry in the leftmost open column wins.  Pivot column
/// indices (0-based) are reported through `pivots` when requested.
RatMatrix rref(const RatMatrix& m, std::vector<int>* pivots = nullptr);

int rank(const RatMatrix& m);

/// Gauss-Jordan inverse; Singular error when the matrix is not invertible.
RatMatrix rat_inverse(const RatMatrix& m);

/// Rows of `a` followed by rows of `b` (same width).
RatMatrix stack(const RatMatrix& a, const RatMatrix& b);

/// Whether v lies in the row space of `basis` (any spanning set).
bool in_row_space(const RatMatrix& basis, const std::vector<Rational>& v);

/// Coordinates x with x * basis = v, for `basis` in reduced echelon form with
/// independent rows.  Structural error when v is outside the span.
std::vector<Rational> coordinates_in(const RatMatrix& basis,
                                     const std::vector<Rational>& v);

/// Canonical basis of the intersection of two row spaces (Zassenhaus).
RatMatrix intersect_row_spaces(const RatMatrix& a, const RatMatrix& b);

/// Canonical basis of the right kernel {x : m x = 0}, rows = basis vectors.
RatMatrix right_kernel(const RatMatrix& m);

bool same_row_space(const RatMatrix& a, const RatMatrix& b);

} // namespace liebasis

#endif
