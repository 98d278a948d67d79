#include "liebasis/polynomial.hpp"

#include "liebasis/errors.hpp"

#include <sstream>

namespace liebasis {

Monomial::Monomial(int vars) {
  if (vars < 1)
    fail(ErrorKind::Structural, "monomial needs at least one variable");
  exps_.assign(static_cast<size_t>(vars), 0);
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty())
    fail(ErrorKind::Structural, "monomial needs at least one variable");
  for (int e : exps_)
    if (e < 0)
      fail(ErrorKind::Structural, "negative exponent in monomial");
}

int Monomial::degree() const {
  int total = 0;
  for (int e : exps_) total += e;
  return total;
}

int Monomial::exp(int axis) const {
  if (axis < 1 || axis > vars())
    fail(ErrorKind::Structural, "monomial axis out of range");
  return exps_[static_cast<size_t>(axis - 1)];
}

Monomial Monomial::times(const Monomial& other) const {
  if (vars() != other.vars())
    fail(ErrorKind::Structural, "monomial variable counts differ");
  std::vector<int> e = exps_;
  for (size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (vars() != other.vars())
    fail(ErrorKind::Structural, "monomial variable counts differ");
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& other) const {
  if (vars() != other.vars())
    fail(ErrorKind::Structural, "monomial variable counts differ");
  std::vector<int> e = exps_;
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] -= other.exps_[i];
    if (e[i] < 0)
      fail(ErrorKind::Structural, "monomial quotient has negative exponent");
  }
  return Monomial(std::move(e));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Equal degree: lexicographic, x1 heaviest.  a < b when at the first
  // differing axis a has the smaller exponent.
  const auto& ea = a.exps();
  const auto& eb = b.exps();
  for (size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] < eb[i];
  return false;
}

Polynomial::Polynomial(int vars) : vars_(vars) {
  if (vars < 1)
    fail(ErrorKind::Structural, "polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int vars, const Rational& value) {
  Polynomial p(vars);
  p.add_term(Monomial(vars), value);
  return p;
}

Polynomial Polynomial::variable(int vars, int axis) {
  if (axis < 1 || axis > vars)
    fail(ErrorKind::Structural, "variable axis out of range");
  std::vector<int> e(static_cast<size_t>(vars), 0);
  e[static_cast<size_t>(axis - 1)] = 1;
  Polynomial p(vars);
  p.add_term(Monomial(std::move(e)), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& mono, const Rational& coeff) {
  Polynomial p(mono.vars());
  p.add_term(mono, coeff);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant())
    fail(ErrorKind::Structural, "polynomial is not constant");
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& mono, const Rational& coeff) {
  if (mono.vars() != vars_)
    fail(ErrorKind::Structural, "term variable count differs from polynomial");
  if (liebasis::is_zero(coeff)) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (liebasis::is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (vars_ != other.vars_)
    fail(ErrorKind::Structural, "polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial result = *this;
  for (const auto& [mono, coeff] : other.terms_) result.add_term(mono, coeff);
  return result;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial result = *this;
  for (const auto& [mono, coeff] : other.terms_)
    result.add_term(mono, -coeff);
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial result(vars_);
  for (const auto& [mono, coeff] : terms_) result.terms_.emplace(mono, -coeff);
  return result;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial result(vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_)
      result.add_term(ma.times(mb), ca * cb);
  return result;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  Polynomial result(vars_);
  if (liebasis::is_zero(factor)) return result;
  for (const auto& [mono, coeff] : terms_)
    result.terms_.emplace(mono, coeff * factor);
  return result;
}

Polynomial Polynomial::partial(int axis) const {
  if (axis < 1 || axis > vars_)
    fail(ErrorKind::Structural, "partial axis out of range");
  Polynomial result(vars_);
  for (const auto& [mono, coeff] : terms_) {
    int e = mono.exp(axis);
    if (e == 0) continue;
    std::vector<int> exps = mono.exps();
    exps[static_cast<size_t>(axis - 1)] = e - 1;
    result.add_term(Monomial(std::move(exps)), coeff * Rational(e));
  }
  return result;
}

Polynomial Polynomial::antiderivative(int axis) const {
  if (axis < 1 || axis > vars_)
    fail(ErrorKind::Structural, "antiderivative axis out of range");
  Polynomial result(vars_);
  for (const auto& [mono, coeff] : terms_) {
    std::vector<int> exps = mono.exps();
    int e = ++exps[static_cast<size_t>(axis - 1)];
    result.add_term(Monomial(std::move(exps)), coeff / Rational(e));
  }
  return result;
}

Polynomial Polynomial::embed(int new_vars) const {
  if (new_vars < vars_)
    fail(ErrorKind::Structural, "cannot embed into fewer variables");
  Polynomial result(new_vars);
  for (const auto& [mono, coeff] : terms_) {
    std::vector<int> exps = mono.exps();
    exps.resize(static_cast<size_t>(new_vars), 0);
    result.terms_.emplace(Monomial(std::move(exps)), coeff);
  }
  return result;
}

Polynomial Polynomial::substitute_zero_prefix(int count) const {
  if (count < 0 || count > vars_)
    fail(ErrorKind::Structural, "zero-substitution count out of range");
  Polynomial result(vars_);
  for (const auto& [mono, coeff] : terms_) {
    bool kills = false;
    for (int axis = 1; axis <= count; ++axis)
      if (mono.exp(axis) > 0) { kills = true; break; }
    if (!kills) result.terms_.emplace(mono, coeff);
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

namespace {

void append_monomial(std::ostringstream& out, const Monomial& mono,
                     bool coeff_is_unit) {
  bool first = coeff_is_unit;
  for (int axis = 1; axis <= mono.vars(); ++axis) {
    int e = mono.exp(axis);
    if (e == 0) continue;
    if (!first) out << "*";
    first = false;
    out << "x" << axis;
    if (e > 1) out << "^" << e;
  }
}

} // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading term first: iterate the map from its largest key down.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, coeff] = *it;
    Rational magnitude = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(coeff) < 0 ? " - " : " + ");
    }
    bool unit = (magnitude == 1) && !mono.is_constant();
    if (!unit) out << rational_to_string(magnitude);
    append_monomial(out, mono, unit);
  }
  return out.str();
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero())
    fail(ErrorKind::Internal, "exact division by zero polynomial");
  Polynomial remainder = p;
  Polynomial quotient(p.vars());
  const auto& qlead = *q.terms().rbegin();
  while (!remainder.is_zero()) {
    const auto& rlead = *remainder.terms().rbegin();
    if (!qlead.first.divides(rlead.first))
      fail(ErrorKind::Internal, "polynomial division is not exact");
    Polynomial t = Polynomial::term(rlead.first.divide(qlead.first),
                                    rlead.second / qlead.second);
    quotient = quotient + t;
    remainder = remainder - t * q;
  }
  return quotient;
}

} // namespace liebasis
