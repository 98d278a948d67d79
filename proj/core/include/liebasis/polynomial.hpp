#ifndef LIEBASIS_POLYNOMIAL_HPP
#define LIEBASIS_POLYNOMIAL_HPP

#include "liebasis/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace liebasis {

/// Exponent vector over a fixed variable count.  Variables are x1..xn and
/// axis arguments throughout the engine are 1-based to match that naming.
class Monomial {
public:
  explicit Monomial(int vars);
  explicit Monomial(std::vector<int> exps);

  int vars() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  int exp(int axis) const;
  const std::vector<int>& exps() const { return exps_; }

  bool is_constant() const { return degree() == 0; }
  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial divide(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
  std::vector<int> exps_;
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// earlier variables weighing more.  This fixes term order everywhere.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(a, b);
  }
};

/// Sparse polynomial over Rational in a fixed number of variables.  Terms map
/// monomials to nonzero coefficients; all operations keep that invariant, so
/// equality is plain term-by-term comparison.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit Polynomial(int vars);
  static Polynomial constant(int vars, const Rational& value);
  static Polynomial variable(int vars, int axis);
  static Polynomial term(const Monomial& mono, const Rational& coeff);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero included).  Structural error if the
  /// polynomial has a term of positive degree.
  Rational constant_value() const;
  int total_degree() const;  // 0 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& mono) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& factor) const;

  Polynomial partial(int axis) const;
  Polynomial antiderivative(int axis) const;

  /// Same polynomial viewed in a larger variable ring (new variables absent).
  Polynomial embed(int new_vars) const;

  /// Substitutes x1 = ... = x_count = 0.
  Polynomial substitute_zero_prefix(int count) const;

  std::string str() const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
  void add_term(const Monomial& mono, const Rational& coeff);
  void check_same_ring(const Polynomial& other) const;

  int vars_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& factor, const Polynomial& p) {
  return p.scaled(factor);
}

/// Quotient p/q when q divides p exactly in the polynomial ring.  Raises an
/// Internal error otherwise; callers use this only where exactness is a
/// theorem (fraction-free elimination).
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

} // namespace liebasis

#endif
