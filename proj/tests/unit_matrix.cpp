#include "test_support.hpp"

#include "liebasis/poly_matrix.hpp"
#include "liebasis/rat_matrix.hpp"

#include <doctest.h>

using namespace liebasis;
using liebasis::testing::next_int;
using liebasis::testing::raised_kind;
using liebasis::testing::random_polynomial;

namespace {

/// Independent determinant oracle: plain Laplace expansion along the first
/// row, no pivoting, no fraction-free tricks.
Polynomial laplace_det(const PolyMatrix& m) {
  int n = m.rows();
  if (n == 1) return m.at(0, 0);
  Polynomial sum(m.vars());
  for (int c = 0; c < n; ++c) {
    PolyMatrix minor(n - 1, n - 1, m.vars());
    for (int r = 1; r < n; ++r)
      for (int cc = 0, target = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor.at(r - 1, target++) = m.at(r, cc);
      }
    Polynomial term = m.at(0, c) * laplace_det(minor);
    sum = (c % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

PolyMatrix random_matrix(SmallRationalStream& rng, int n, int vars) {
  PolyMatrix m(n, n, vars);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = random_polynomial(rng, vars, 2, 2);
  return m;
}

RatMatrix rat_from(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> converted;
  for (const auto& row : rows)
    converted.emplace_back(row.begin(), row.end());
  return RatMatrix::from_rows(converted,
                              static_cast<int>(converted.front().size()));
}

} // namespace

TEST_CASE("polynomial matrix determinant on fixed values") {
  Polynomial x1 = Polynomial::variable(2, 1);
  Polynomial x2 = Polynomial::variable(2, 2);
  PolyMatrix m(2, 2, 2);
  m.at(0, 0) = x1;
  m.at(0, 1) = Polynomial::constant(2, 1);
  m.at(1, 0) = x2;
  m.at(1, 1) = x1;
  CHECK(det(m) == x1 * x1 - x2);
  CHECK(det(PolyMatrix::identity(4, 2)) == Polynomial::constant(2, 1));
  PolyMatrix zero_col(2, 2, 2);
  zero_col.at(0, 0) = x1;
  zero_col.at(1, 0) = x2;
  CHECK(det(zero_col).is_zero());
  CHECK(raised_kind([] { (void)det(PolyMatrix(2, 3, 1)); }) ==
        ErrorKind::Structural);
}

TEST_CASE("fraction-free determinant agrees with Laplace expansion") {
  SmallRationalStream rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    PolyMatrix m = random_matrix(rng, 4, 2);
    CHECK(det(m) == laplace_det(m));
  }
  for (int trial = 0; trial < 4; ++trial) {
    PolyMatrix m = random_matrix(rng, 5, 1);
    CHECK(det(m) == laplace_det(m));
  }
}

TEST_CASE("determinant is multiplicative") {
  SmallRationalStream rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    PolyMatrix a = random_matrix(rng, 3, 2);
    PolyMatrix b = random_matrix(rng, 3, 2);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("adjugate inverse of a unimodular matrix") {
  Polynomial x2 = Polynomial::variable(2, 2);
  PolyMatrix m = PolyMatrix::identity(2, 2);
  m.at(0, 1) = x2;
  PolyMatrix inv = adjugate_inverse(m);
  CHECK(m * inv == PolyMatrix::identity(2, 2));
  CHECK(inv * m == PolyMatrix::identity(2, 2));
  CHECK(inv.at(0, 1) == -x2);

  // Unimodular with determinant -3: entries pick up the 1/det factor.
  PolyMatrix s = PolyMatrix::identity(2, 2);
  s.at(0, 0) = Polynomial::constant(2, -3);
  s.at(0, 1) = x2;
  PolyMatrix sinv = adjugate_inverse(s);
  CHECK(s * sinv == PolyMatrix::identity(2, 2));

  PolyMatrix bad = PolyMatrix::identity(2, 2);
  bad.at(0, 0) = Polynomial::variable(2, 1);
  CHECK(raised_kind([&] { (void)adjugate_inverse(bad); }) ==
        ErrorKind::NotUnimodular);

  PolyMatrix sing(2, 2, 2);
  sing.at(0, 0) = x2;
  sing.at(0, 1) = x2;
  sing.at(1, 0) = x2;
  sing.at(1, 1) = x2;
  CHECK(raised_kind([&] { (void)adjugate_inverse(sing); }) ==
        ErrorKind::Singular);
}

TEST_CASE("adjugate inverse round trips on random shears") {
  SmallRationalStream rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    // Product of elementary shears is unimodular.
    PolyMatrix m = PolyMatrix::identity(3, 3);
    for (int step = 0; step < 3; ++step) {
      PolyMatrix shear = PolyMatrix::identity(3, 3);
      int r = next_int(rng, 0, 2), c = next_int(rng, 0, 2);
      if (r != c) shear.at(r, c) = random_polynomial(rng, 3, 2, 2);
      m = m * shear;
    }
    CHECK(m * adjugate_inverse(m) == PolyMatrix::identity(3, 3));
  }
}

TEST_CASE("jacobian rows are gradients") {
  Polynomial x1 = Polynomial::variable(2, 1);
  Polynomial x2 = Polynomial::variable(2, 2);
  PolyMatrix j = jacobian({x1, x1 * x1 + x2});
  CHECK(j.rows() == 2);
  CHECK(j.at(0, 0) == Polynomial::constant(2, 1));
  CHECK(j.at(0, 1).is_zero());
  CHECK(j.at(1, 0) == Rational(2) * x1);
  CHECK(j.at(1, 1) == Polynomial::constant(2, 1));
}

TEST_CASE("reduced echelon form is canonical") {
  RatMatrix m = rat_from({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}});
  std::vector<int> pivots;
  RatMatrix r = rref(m, &pivots);
  CHECK(r.rows() == 2);  // rank 2, zero rows dropped
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(r.at(0, 0) == 1);
  CHECK(r.at(0, 1) == 0);
  CHECK(r.at(0, 2) == -1);
  CHECK(r.at(1, 0) == 0);
  CHECK(r.at(1, 1) == 1);
  CHECK(r.at(1, 2) == 2);
  CHECK(rank(m) == 2);
  CHECK(same_row_space(m, r));

  // Any spanning set of the same space reduces to the same echelon basis.
  RatMatrix other = rat_from({{1, 3, 5}, {2, 4, 6}});
  CHECK(rref(other) == r);
}

TEST_CASE("rational inverse and multiplication") {
  RatMatrix m = rat_from({{2, 1}, {1, 1}});
  RatMatrix inv = rat_inverse(m);
  CHECK(m * inv == RatMatrix::identity(2));
  CHECK(inv * m == RatMatrix::identity(2));
  CHECK(raised_kind([] {
          (void)rat_inverse(rat_from({{1, 2}, {2, 4}}));
        }) == ErrorKind::Singular);
}

TEST_CASE("row-space membership and coordinates") {
  RatMatrix basis = rref(rat_from({{1, 0, 2}, {0, 1, 3}}));
  CHECK(in_row_space(basis, {Rational(2), Rational(-1), Rational(1)}));
  CHECK_FALSE(in_row_space(basis, {Rational(0), Rational(0), Rational(1)}));

  std::vector<Rational> coords =
      coordinates_in(basis, {Rational(2), Rational(-1), Rational(1)});
  CHECK(coords == std::vector<Rational>{2, -1});

  // Non-echelon independent rows work too.
  RatMatrix skew = rat_from({{1, 1, 5}, {1, -1, -1}});
  std::vector<Rational> c2 =
      coordinates_in(skew, {Rational(2), Rational(0), Rational(4)});
  CHECK(c2 == std::vector<Rational>{1, 1});
  CHECK(raised_kind([&] {
          (void)coordinates_in(skew, {Rational(0), Rational(0), Rational(1)});
        }) == ErrorKind::Structural);
}

TEST_CASE("row-space intersection and kernel") {
  // Two planes in 3-space meeting in a line.
  RatMatrix a = rat_from({{1, 0, 0}, {0, 1, 0}});
  RatMatrix b = rat_from({{0, 1, 0}, {0, 0, 1}});
  RatMatrix meet = intersect_row_spaces(a, b);
  CHECK(meet.rows() == 1);
  CHECK(meet.at(0, 0) == 0);
  CHECK(meet.at(0, 1) == 1);
  CHECK(meet.at(0, 2) == 0);

  RatMatrix k = right_kernel(rat_from({{1, 1, 1}}));
  CHECK(k.rows() == 2);
  for (int r = 0; r < k.rows(); ++r)
    CHECK(k.at(r, 0) + k.at(r, 1) + k.at(r, 2) == 0);
  CHECK(right_kernel(RatMatrix::identity(3)).rows() == 0);

  RatMatrix stacked = stack(a, b);
  CHECK(stacked.rows() == 4);
  CHECK(rank(stacked) == 3);
}
