#include "liebasis/poly_matrix.hpp"

#include "liebasis/errors.hpp"

#include <utility>

namespace liebasis {

PolyMatrix::PolyMatrix(int rows, int cols, int vars)
    : rows_(rows), cols_(cols), vars_(vars) {
  if (rows < 1 || cols < 1)
    fail(ErrorKind::Structural, "matrix needs positive dimensions");
  entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols),
                  Polynomial(vars));
}

PolyMatrix PolyMatrix::identity(int n, int vars) {
  PolyMatrix m(n, n, vars);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = Polynomial::constant(vars, Rational(1));
  return m;
}

Polynomial& PolyMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    fail(ErrorKind::Structural, "matrix index out of range");
  return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
                  static_cast<size_t>(c)];
}

const Polynomial& PolyMatrix::at(int r, int c) const {
  return const_cast<PolyMatrix*>(this)->at(r, c);
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_ || vars_ != other.vars_)
    fail(ErrorKind::Structural, "matrix product shape mismatch");
  PolyMatrix result(rows_, other.cols_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) {
      Polynomial sum(vars_);
      for (int k = 0; k < cols_; ++k)
        sum = sum + at(i, k) * other.at(k, j);
      result.at(i, j) = std::move(sum);
    }
  return result;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || vars_ != other.vars_)
    fail(ErrorKind::Structural, "matrix sum shape mismatch");
  PolyMatrix result(rows_, cols_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      result.at(i, j) = at(i, j) + other.at(i, j);
  return result;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || vars_ != other.vars_)
    fail(ErrorKind::Structural, "matrix difference shape mismatch");
  PolyMatrix result(rows_, cols_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      result.at(i, j) = at(i, j) - other.at(i, j);
  return result;
}

bool PolyMatrix::is_zero() const {
  for (const Polynomial& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         vars_ == other.vars_ && entries_ == other.entries_;
}

namespace {

Polynomial det_cofactor(const PolyMatrix& m) {
  int n = m.rows();
  if (n == 1) return m.at(0, 0);
  if (n == 2)
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  // 3x3: expand along the first row.
  Polynomial result(m.vars());
  for (int j = 0; j < 3; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix minor(2, 2, m.vars());
    int cc = 0;
    for (int c = 0; c < 3; ++c) {
      if (c == j) continue;
      minor.at(0, cc) = m.at(1, c);
      minor.at(1, cc) = m.at(2, c);
      ++cc;
    }
    Polynomial contrib = m.at(0, j) * det_cofactor(minor);
    result = (j % 2 == 0) ? result + contrib : result - contrib;
  }
  return result;
}

Polynomial det_bareiss(PolyMatrix m) {
  int n = m.rows();
  int vars = m.vars();
  Polynomial prev_pivot = Polynomial::constant(vars, Rational(1));
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot_row = -1;
    for (int r = k; r < n; ++r)
      if (!m.at(r, k).is_zero()) { pivot_row = r; break; }
    if (pivot_row < 0) return Polynomial(vars);  // zero column, det = 0
    if (pivot_row != k) {
      for (int c = 0; c < n; ++c)
        std::swap(m.at(k, c), m.at(pivot_row, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = divide_exact(
            m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev_pivot);
      m.at(i, k) = Polynomial(vars);
    }
    prev_pivot = m.at(k, k);
  }
  Polynomial result = m.at(n - 1, n - 1);
  return negate ? -result : result;
}

} // namespace

Polynomial det(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::Structural, "determinant of a non-square matrix");
  return m.rows() <= 3 ? det_cofactor(m) : det_bareiss(m);
}

PolyMatrix adjugate_inverse(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::Structural, "inverse of a non-square matrix");
  int n = m.rows();
  Polynomial d = det(m);
  if (d.is_zero())
    fail(ErrorKind::Singular, "matrix determinant is identically zero");
  if (!d.is_constant())
    fail(ErrorKind::NotUnimodular,
         "matrix determinant is not constant: " + d.str());
  Rational scale = Rational(1) / d.constant_value();
  PolyMatrix inv(n, n, m.vars());
  if (n == 1) {
    inv.at(0, 0) = Polynomial::constant(m.vars(), scale);
    return inv;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // adj(m)_ij is the (j,i) cofactor.
      PolyMatrix minor(n - 1, n - 1, m.vars());
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Polynomial cof = det(minor).scaled(scale);
      inv.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return inv;
}

PolyMatrix jacobian(const std::vector<Polynomial>& fs) {
  if (fs.empty())
    fail(ErrorKind::Structural, "jacobian of an empty map");
  int vars = fs.front().vars();
  for (const Polynomial& f : fs)
    if (f.vars() != vars)
      fail(ErrorKind::Structural, "jacobian entries in different rings");
  PolyMatrix j(static_cast<int>(fs.size()), vars, vars);
  for (int i = 0; i < j.rows(); ++i)
    for (int c = 1; c <= vars; ++c)
      j.at(i, c - 1) = fs[static_cast<size_t>(i)].partial(c);
  return j;
}

} // namespace liebasis
