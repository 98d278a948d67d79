#ifndef LIEBASIS_TENSOR_HPP
#define LIEBASIS_TENSOR_HPP

#include "liebasis/lie_algebra.hpp"
#include "liebasis/polynomial.hpp"

#include <memory>
#include <vector>

namespace liebasis {

/// Element of R (x) L for R = Q[x1..xn], n = dim L: a polynomial coordinate
/// per basis vector.  The variable count always equals the algebra dimension.
/// Instances are immutable values sharing the algebra by pointer.
class TensorElement {
public:
  TensorElement(std::shared_ptr<const LieAlgebra> algebra,
                std::vector<Polynomial> coords);

  static TensorElement zero(std::shared_ptr<const LieAlgebra> algebra);
  /// 1 (x) l_i.
  static TensorElement unit(std::shared_ptr<const LieAlgebra> algebra, int i);

  const LieAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const LieAlgebra> algebra_ptr() const { return algebra_; }
  int dim() const { return algebra_->dim(); }
  const std::vector<Polynomial>& coords() const { return coords_; }
  const Polynomial& coord(int i) const;  // 1-based
  bool is_zero() const;

  TensorElement operator+(const TensorElement& other) const;
  TensorElement operator-(const TensorElement& other) const;
  TensorElement operator-() const;
  TensorElement scaled(const Rational& factor) const;
  TensorElement scaled_by(const Polynomial& factor) const;

  bool operator==(const TensorElement& other) const;
  bool operator!=(const TensorElement& other) const { return !(*this == other); }

  std::string str() const;

private:
  std::shared_ptr<const LieAlgebra> algebra_;
  std::vector<Polynomial> coords_;
};

/// [f, g] with k-th coordinate sum_{i,j} c_ij^k f_i g_j.
TensorElement tensor_bracket(const TensorElement& f, const TensorElement& g);

/// Coordinatewise partial derivative.
TensorElement tensor_partial(const TensorElement& f, int axis);

/// (ad w)^power applied to f inside R (x) L.
TensorElement ad_power(const TensorElement& w, const TensorElement& f,
                       int power);

/// phi_w(f) = sum_{i>=1} (1/i!) (ad w)^{i-1}(f).  The series must terminate:
/// if (ad w)^{n+1} f is still nonzero for n = dim L, NotNilpotentAction is
/// raised.
TensorElement phi_series(const TensorElement& w, const TensorElement& f);

/// Element of the extension of R (x) L by the commuting constant-coefficient
/// derivations d/dx_p: a rational coefficient per d/dx_p plus a tensor part.
struct AhatElement {
  std::vector<Rational> partials;
  TensorElement tensor;

  static AhatElement partial_basis(std::shared_ptr<const LieAlgebra> algebra,
                                   int p);
  static AhatElement from_tensor(TensorElement t);

  AhatElement operator+(const AhatElement& other) const;
  AhatElement operator-(const AhatElement& other) const;
  bool operator==(const AhatElement& other) const;
  bool operator!=(const AhatElement& other) const { return !(*this == other); }
  bool is_zero() const;
  std::string str() const;
};

/// Bracket in the extended algebra.  The d/dx_p span is abelian and
/// [d/dx_p, f] = df/dx_p, so the result always lies in R (x) L (returned with
/// zero partials).
AhatElement ahat_bracket(const AhatElement& a, const AhatElement& b);

/// e^{ad w}(target) = sum_{i>=0} (1/i!) (ad w)^i(target) for w in R (x) L.
/// The partial-derivative part of target is preserved verbatim; only the
/// tensor part grows.  NotNilpotentAction when the series fails to terminate
/// within dim L + 2 powers.
AhatElement exp_ad(const TensorElement& w, const AhatElement& target);

/// Convenience overload acting inside R (x) L.
TensorElement exp_ad(const TensorElement& w, const TensorElement& target);

} // namespace liebasis

#endif
