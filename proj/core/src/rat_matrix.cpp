#include "liebasis/rat_matrix.hpp"

#include "liebasis/errors.hpp"

#include <algorithm>

namespace liebasis {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 1)
    fail(ErrorKind::Structural, "rational matrix needs valid dimensions");
  entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols),
                  Rational(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                               int cols) {
  RatMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      fail(ErrorKind::Structural, "row width mismatch");
    for (int c = 0; c < cols; ++c)
      m.at(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
  }
  return m;
}

Rational& RatMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    fail(ErrorKind::Structural, "rational matrix index out of range");
  return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
                  static_cast<size_t>(c)];
}

const Rational& RatMatrix::at(int r, int c) const {
  return const_cast<RatMatrix*>(this)->at(r, c);
}

std::vector<Rational> RatMatrix::row(int r) const {
  std::vector<Rational> result(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) result[static_cast<size_t>(c)] = at(r, c);
  return result;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_)
    fail(ErrorKind::Structural, "rational matrix product shape mismatch");
  RatMatrix result(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) {
      Rational sum(0);
      for (int k = 0; k < cols_; ++k) sum += at(i, k) * other.at(k, j);
      result.at(i, j) = sum;
    }
  return result;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != other.entries_[i]) return false;
  return true;
}

RatMatrix rref(const RatMatrix& m, std::vector<int>* pivots) {
  RatMatrix work = m;
  if (pivots) pivots->clear();
  int lead_row = 0;
  std::vector<int> pivot_cols;
  for (int col = 0; col < work.cols() && lead_row < work.rows(); ++col) {
    int pivot = -1;
    for (int r = lead_row; r < work.rows(); ++r)
      if (!is_zero(work.at(r, col))) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != lead_row)
      for (int c = 0; c < work.cols(); ++c)
        std::swap(work.at(pivot, c), work.at(lead_row, c));
    Rational inv = Rational(1) / work.at(lead_row, col);
    for (int c = 0; c < work.cols(); ++c) work.at(lead_row, c) *= inv;
    for (int r = 0; r < work.rows(); ++r) {
      if (r == lead_row || is_zero(work.at(r, col))) continue;
      Rational factor = work.at(r, col);
      for (int c = 0; c < work.cols(); ++c)
        work.at(r, c) -= factor * work.at(lead_row, c);
    }
    pivot_cols.push_back(col);
    ++lead_row;
  }
  RatMatrix result(lead_row, work.cols());
  for (int r = 0; r < lead_row; ++r)
    for (int c = 0; c < work.cols(); ++c) result.at(r, c) = work.at(r, c);
  if (pivots) *pivots = pivot_cols;
  return result;
}

int rank(const RatMatrix& m) { return rref(m).rows(); }

RatMatrix rat_inverse(const RatMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::Structural, "inverse of a non-square rational matrix");
  int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots;
  RatMatrix red = rref(aug, &pivots);
  if (red.rows() != n || pivots.size() != static_cast<size_t>(n) ||
      pivots.back() >= n)
    fail(ErrorKind::Singular, "rational matrix is not invertible");
  for (int i = 0; i < n; ++i)
    if (pivots[static_cast<size_t>(i)] != i)
      fail(ErrorKind::Singular, "rational matrix is not invertible");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
  return inv;
}

RatMatrix stack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols())
    fail(ErrorKind::Structural, "stacked matrices have different widths");
  RatMatrix result(a.rows() + b.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) result.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) result.at(a.rows() + r, c) = b.at(r, c);
  return result;
}

bool in_row_space(const RatMatrix& basis, const std::vector<Rational>& v) {
  RatMatrix vec = RatMatrix::from_rows({v}, basis.cols());
  return rank(basis) == rank(stack(basis, vec));
}

std::vector<Rational> coordinates_in(const RatMatrix& basis,
                                     const std::vector<Rational>& v) {
  // basis is echelon with independent rows: read coordinates off the pivot
  // columns, then confirm the combination reproduces v exactly.
  std::vector<int> pivots;
  RatMatrix red = rref(basis, &pivots);
  if (red.rows() != basis.rows())
    fail(ErrorKind::Structural, "coordinate basis has dependent rows");
  if (static_cast<int>(v.size()) != basis.cols())
    fail(ErrorKind::Structural, "coordinate vector width mismatch");
  std::vector<Rational> coords(static_cast<size_t>(basis.rows()), Rational(0));
  for (int r = 0; r < red.rows(); ++r)
    coords[static_cast<size_t>(r)] = v[static_cast<size_t>(pivots[static_cast<size_t>(r)])];
  for (int c = 0; c < basis.cols(); ++c) {
    Rational sum(0);
    for (int r = 0; r < red.rows(); ++r)
      sum += coords[static_cast<size_t>(r)] * red.at(r, c);
    if (sum != v[static_cast<size_t>(c)])
      fail(ErrorKind::Structural, "vector lies outside the basis span");
  }
  // coords is relative to the echelon rows; convert to the caller's rows when
  // they differ.  basis rows B relate to echelon rows E by B = T E with T
  // invertible, and x B = v means (x T) E = v, so solve x T = coords_E.
  if (red != basis) {
    // T columns: each basis row expressed in echelon coordinates.
    RatMatrix t(basis.rows(), basis.rows());
    for (int r = 0; r < basis.rows(); ++r)
      for (int c = 0; c < red.rows(); ++c)
        t.at(r, c) = basis.at(r, pivots[static_cast<size_t>(c)]);
    RatMatrix tinv = rat_inverse(t);
    std::vector<Rational> adjusted(static_cast<size_t>(basis.rows()),
                                   Rational(0));
    for (int j = 0; j < basis.rows(); ++j) {
      Rational sum(0);
      for (int i = 0; i < basis.rows(); ++i)
        sum += coords[static_cast<size_t>(i)] * tinv.at(i, j);
      adjusted[static_cast<size_t>(j)] = sum;
    }
    coords = adjusted;
  }
  return coords;
}

RatMatrix intersect_row_spaces(const RatMatrix& a, const RatMatrix& b) {
  // Zassenhaus: reduce [A | A; B | 0]; rows with zero left half carry an
  // intersection basis in the right half.
  int w = a.cols();
  if (b.cols() != w)
    fail(ErrorKind::Structural, "intersecting spaces of different widths");
  RatMatrix big(a.rows() + b.rows(), 2 * w);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < w; ++c) {
      big.at(r, c) = a.at(r, c);
      big.at(r, w + c) = a.at(r, c);
    }
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < w; ++c) big.at(a.rows() + r, c) = b.at(r, c);
  RatMatrix red = rref(big);
  std::vector<std::vector<Rational>> rows;
  for (int r = 0; r < red.rows(); ++r) {
    bool left_zero = true;
    for (int c = 0; c < w; ++c)
      if (!is_zero(red.at(r, c))) { left_zero = false; break; }
    if (!left_zero) continue;
    std::vector<Rational> row(static_cast<size_t>(w));
    for (int c = 0; c < w; ++c) row[static_cast<size_t>(c)] = red.at(r, w + c);
    rows.push_back(std::move(row));
  }
  return rref(RatMatrix::from_rows(rows, w));
}

RatMatrix right_kernel(const RatMatrix& m) {
  std::vector<int> pivots;
  RatMatrix red = rref(m, &pivots);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<Rational>> rows;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<size_t>(m.cols()), Rational(0));
    v[static_cast<size_t>(free)] = 1;
    for (int r = 0; r < red.rows(); ++r)
      v[static_cast<size_t>(pivots[static_cast<size_t>(r)])] =
          -red.at(r, free);
    rows.push_back(std::move(v));
  }
  return rref(RatMatrix::from_rows(rows, m.cols()));
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
  return rref(a) == rref(b);
}

} // namespace liebasis
