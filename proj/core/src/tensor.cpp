#include "liebasis/tensor.hpp"

#include "liebasis/errors.hpp"

#include <sstream>

namespace liebasis {

namespace {

void check_same_algebra(const TensorElement& a, const TensorElement& b) {
  if (a.algebra_ptr() == b.algebra_ptr()) return;
  if (a.algebra() == b.algebra()) return;
  fail(ErrorKind::Structural, "tensor elements over different algebras");
}

} // namespace

TensorElement::TensorElement(std::shared_ptr<const LieAlgebra> algebra,
                             std::vector<Polynomial> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_)
    fail(ErrorKind::Structural, "tensor element needs an algebra");
  if (static_cast<int>(coords_.size()) != algebra_->dim())
    fail(ErrorKind::Structural, "tensor coordinate count differs from dim");
  for (const Polynomial& p : coords_)
    if (p.vars() != algebra_->dim())
      fail(ErrorKind::Structural,
           "tensor coordinates must use one variable per basis vector");
}

TensorElement TensorElement::zero(std::shared_ptr<const LieAlgebra> algebra) {
  int n = algebra->dim();
  return TensorElement(std::move(algebra),
                       std::vector<Polynomial>(static_cast<size_t>(n),
                                               Polynomial(n)));
}

TensorElement TensorElement::unit(std::shared_ptr<const LieAlgebra> algebra,
                                  int i) {
  int n = algebra->dim();
  if (i < 1 || i > n)
    fail(ErrorKind::Structural, "unit index out of range");
  std::vector<Polynomial> coords(static_cast<size_t>(n), Polynomial(n));
  coords[static_cast<size_t>(i - 1)] = Polynomial::constant(n, Rational(1));
  return TensorElement(std::move(algebra), std::move(coords));
}

const Polynomial& TensorElement::coord(int i) const {
  if (i < 1 || i > dim())
    fail(ErrorKind::Structural, "tensor coordinate index out of range");
  return coords_[static_cast<size_t>(i - 1)];
}

bool TensorElement::is_zero() const {
  for (const Polynomial& p : coords_)
    if (!p.is_zero()) return false;
  return true;
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
  check_same_algebra(*this, other);
  std::vector<Polynomial> coords;
  coords.reserve(coords_.size());
  for (size_t i = 0; i < coords_.size(); ++i)
    coords.push_back(coords_[i] + other.coords_[i]);
  return TensorElement(algebra_, std::move(coords));
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
  check_same_algebra(*this, other);
  std::vector<Polynomial> coords;
  coords.reserve(coords_.size());
  for (size_t i = 0; i < coords_.size(); ++i)
    coords.push_back(coords_[i] - other.coords_[i]);
  return TensorElement(algebra_, std::move(coords));
}

TensorElement TensorElement::operator-() const {
  std::vector<Polynomial> coords;
  coords.reserve(coords_.size());
  for (const Polynomial& p : coords_) coords.push_back(-p);
  return TensorElement(algebra_, std::move(coords));
}

TensorElement TensorElement::scaled(const Rational& factor) const {
  std::vector<Polynomial> coords;
  coords.reserve(coords_.size());
  for (const Polynomial& p : coords_) coords.push_back(p.scaled(factor));
  return TensorElement(algebra_, std::move(coords));
}

TensorElement TensorElement::scaled_by(const Polynomial& factor) const {
  std::vector<Polynomial> coords;
  coords.reserve(coords_.size());
  for (const Polynomial& p : coords_) coords.push_back(p * factor);
  return TensorElement(algebra_, std::move(coords));
}

bool TensorElement::operator==(const TensorElement& other) const {
  if (algebra_ptr() != other.algebra_ptr() && !(algebra() == other.algebra()))
    return false;
  return coords_ == other.coords_;
}

std::string TensorElement::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= dim(); ++i) {
    if (coord(i).is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coord(i).str() << ")(x)l" << i;
  }
  return first ? "0" : out.str();
}

TensorElement tensor_bracket(const TensorElement& f, const TensorElement& g) {
  check_same_algebra(f, g);
  const LieAlgebra& L = f.algebra();
  int n = L.dim();
  std::vector<Polynomial> coords(static_cast<size_t>(n), Polynomial(n));
  for (const auto& [key, value] : L.entries()) {
    auto [i, j, k] = key;
    Polynomial pair =
        f.coord(i) * g.coord(j) - f.coord(j) * g.coord(i);
    coords[static_cast<size_t>(k - 1)] =
        coords[static_cast<size_t>(k - 1)] + pair.scaled(value);
  }
  return TensorElement(f.algebra_ptr(), std::move(coords));
}

TensorElement tensor_partial(const TensorElement& f, int axis) {
  std::vector<Polynomial> coords;
  coords.reserve(f.coords().size());
  for (const Polynomial& p : f.coords()) coords.push_back(p.partial(axis));
  return TensorElement(f.algebra_ptr(), std::move(coords));
}

TensorElement ad_power(const TensorElement& w, const TensorElement& f,
                       int power) {
  if (power < 0)
    fail(ErrorKind::Structural, "negative ad power");
  TensorElement result = f;
  for (int i = 0; i < power; ++i) result = tensor_bracket(w, result);
  return result;
}

TensorElement phi_series(const TensorElement& w, const TensorElement& f) {
  check_same_algebra(w, f);
  int cap = w.dim() + 1;
  TensorElement sum = TensorElement::zero(w.algebra_ptr());
  TensorElement power = f;  // (ad w)^j (f)
  for (int j = 0; j <= cap; ++j) {
    if (power.is_zero()) return sum;
    sum = sum + power.scaled(factorial_reciprocal(
                    static_cast<unsigned long>(j) + 1));
    power = tensor_bracket(w, power);
  }
  fail(ErrorKind::NotNilpotentAction,
       "ad-series does not terminate within dim + 1 powers");
}

AhatElement AhatElement::partial_basis(
    std::shared_ptr<const LieAlgebra> algebra, int p) {
  int n = algebra->dim();
  if (p < 1 || p > n)
    fail(ErrorKind::Structural, "partial index out of range");
  std::vector<Rational> partials(static_cast<size_t>(n), Rational(0));
  partials[static_cast<size_t>(p - 1)] = 1;
  return AhatElement{std::move(partials), TensorElement::zero(algebra)};
}

AhatElement AhatElement::from_tensor(TensorElement t) {
  std::vector<Rational> partials(static_cast<size_t>(t.dim()), Rational(0));
  return AhatElement{std::move(partials), std::move(t)};
}

AhatElement AhatElement::operator+(const AhatElement& other) const {
  if (partials.size() != other.partials.size())
    fail(ErrorKind::Structural, "extended elements of different dimension");
  std::vector<Rational> sums = partials;
  for (size_t i = 0; i < sums.size(); ++i) sums[i] += other.partials[i];
  return AhatElement{std::move(sums), tensor + other.tensor};
}

AhatElement AhatElement::operator-(const AhatElement& other) const {
  if (partials.size() != other.partials.size())
    fail(ErrorKind::Structural, "extended elements of different dimension");
  std::vector<Rational> sums = partials;
  for (size_t i = 0; i < sums.size(); ++i) sums[i] -= other.partials[i];
  return AhatElement{std::move(sums), tensor - other.tensor};
}

bool AhatElement::operator==(const AhatElement& other) const {
  if (partials.size() != other.partials.size()) return false;
  for (size_t i = 0; i < partials.size(); ++i)
    if (partials[i] != other.partials[i]) return false;
  return tensor == other.tensor;
}

bool AhatElement::is_zero() const {
  for (const Rational& r : partials)
    if (!liebasis::is_zero(r)) return false;
  return tensor.is_zero();
}

std::string AhatElement::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t p = 0; p < partials.size(); ++p) {
    if (liebasis::is_zero(partials[p])) continue;
    if (!first) out << " + ";
    first = false;
    if (partials[p] != 1) out << rational_to_string(partials[p]) << "*";
    out << "d/dx" << (p + 1);
  }
  if (!tensor.is_zero()) {
    if (!first) out << " + ";
    first = false;
    out << tensor.str();
  }
  return first ? "0" : out.str();
}

AhatElement ahat_bracket(const AhatElement& a, const AhatElement& b) {
  if (a.partials.size() != b.partials.size())
    fail(ErrorKind::Structural, "extended elements of different dimension");
  check_same_algebra(a.tensor, b.tensor);
  // [sum a_p d/dx_p + f, sum b_p d/dx_p + g]
  //   = sum_p a_p dg/dx_p - sum_p b_p df/dx_p + [f, g].
  TensorElement result = tensor_bracket(a.tensor, b.tensor);
  for (size_t p = 0; p < a.partials.size(); ++p) {
    int axis = static_cast<int>(p) + 1;
    if (!is_zero(a.partials[p]))
      result = result + tensor_partial(b.tensor, axis).scaled(a.partials[p]);
    if (!is_zero(b.partials[p]))
      result = result - tensor_partial(a.tensor, axis).scaled(b.partials[p]);
  }
  return AhatElement::from_tensor(std::move(result));
}

AhatElement exp_ad(const TensorElement& w, const AhatElement& target) {
  int cap = w.dim() + 2;
  AhatElement result = target;
  AhatElement power = target;  // (ad w)^j (target)
  AhatElement w_hat = AhatElement::from_tensor(w);
  for (int j = 1; j <= cap; ++j) {
    power = ahat_bracket(w_hat, power);
    if (power.is_zero()) return result;
    AhatElement scaled{power.partials,
                       power.tensor.scaled(factorial_reciprocal(
                           static_cast<unsigned long>(j)))};
    result = result + scaled;
  }
  fail(ErrorKind::NotNilpotentAction,
       "exponential series does not terminate within dim + 2 powers");
}

TensorElement exp_ad(const TensorElement& w, const TensorElement& target) {
  return exp_ad(w, AhatElement::from_tensor(target)).tensor;
}

} // namespace liebasis
