#include "liebasis/realize.hpp"

#include "liebasis/errors.hpp"
#include "liebasis/poly_matrix.hpp"

#include <memory>
#include <sstream>
#include <utility>

namespace liebasis {

namespace {

std::shared_ptr<const LieAlgebra> shared(const LieAlgebra& L) {
  return std::make_shared<const LieAlgebra>(L);
}

/// sign * sum_{i in [from, to]} x_i (x) l_i.
TensorElement coordinate_seed(std::shared_ptr<const LieAlgebra> algebra,
                              int from, int to, int sign) {
  int n = algebra->dim();
  std::vector<Polynomial> coords(static_cast<size_t>(n), Polynomial(n));
  for (int i = from; i <= to; ++i)
    coords[static_cast<size_t>(i - 1)] =
        Polynomial::variable(n, i).scaled(Rational(sign));
  return TensorElement(std::move(algebra), std::move(coords));
}

/// B matrix whose row p holds the coordinates of rows[p].
PolyMatrix rows_to_matrix(const std::vector<TensorElement>& rows) {
  int n = rows.front().dim();
  PolyMatrix b(n, n, n);
  for (int p = 1; p <= n; ++p)
    for (int i = 1; i <= n; ++i)
      b.at(p - 1, i - 1) = rows[static_cast<size_t>(p - 1)].coord(i);
  return b;
}

Realization assemble(const LieAlgebra& L,
                     const std::vector<TensorElement>& b_rows,
                     Witness witness) {
  PolyMatrix b = rows_to_matrix(b_rows);
  PolyMatrix a = adjugate_inverse(b);
  return Realization{L, FieldFamily::from_matrix(a), std::move(b),
                     std::move(a), std::move(witness)};
}

/// The Heisenberg constants in standard order: dim 2r+1 with
/// [l_i, l_{r+i}] = l_{2r+1} for i <= r and nothing else.
bool heisenberg_pattern(const LieAlgebra& L) {
  int n = L.dim();
  if (n < 3 || n % 2 == 0) return false;
  int r = (n - 1) / 2;
  if (static_cast<int>(L.entries().size()) != r) return false;
  for (int i = 1; i <= r; ++i)
    if (L.c(i, r + i, n) != 1) return false;
  return true;
}

} // namespace

Realization realize_nilpotent(const LieAlgebra& L,
                              const RealizeOptions& options) {
  (void)options;  // both sign conventions share the nilpotent seed
  Witness witness;
  LieAlgebra working = L;
  if (!flag_condition_holds(working)) {
    auto [change, adapted] = adapted_nilpotent_basis(working);
    working = adapted;
    witness.basis_change = change;
    witness.notes.push_back(
        "basis adapted to the lower central series before construction");
  } else if (!is_nilpotent(working)) {
    fail(ErrorKind::NotNilpotent, "algebra is not nilpotent");
  }
  auto algebra = shared(working);
  int n = working.dim();
  TensorElement w = coordinate_seed(algebra, 1, n, -1);
  std::vector<TensorElement> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int p = 1; p <= n; ++p)
    rows.push_back(phi_series(w, -tensor_partial(w, p)));
  witness.w = w;
  witness.notes.push_back("construction: nilpotent, seed w = " + w.str());
  if (heisenberg_pattern(working))
    witness.notes.push_back(
        "Heisenberg family: coefficients for r < i <= 2r use the subscript "
        "x[i-r]; the variant x[r-i] does not close under bracket");
  return assemble(working, rows, std::move(witness));
}

FactoredAutomorphism peel_to_factored_automorphism(const LieAlgebra& L,
                                                   const PolyMatrix& b) {
  int n = L.dim();
  if (b.rows() != n || b.cols() != n || b.vars() != n)
    fail(ErrorKind::Structural, "B must be square of the algebra dimension");
  if (!flag_condition_holds(L))
    fail(ErrorKind::Structural,
         "basis does not satisfy the flag condition c_ij^k = 0 for "
         "k <= max(i,j)");
  if (!is_nilpotent(L))
    fail(ErrorKind::NotNilpotent, "algebra is not nilpotent");
  auto algebra = shared(L);
  std::vector<AhatElement> t;
  t.reserve(static_cast<size_t>(n));
  for (int p = 1; p <= n; ++p) {
    std::vector<Polynomial> coords;
    coords.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) coords.push_back(b.at(p - 1, i - 1));
    t.push_back(AhatElement::partial_basis(algebra, p) +
                AhatElement::from_tensor(
                    TensorElement(algebra, std::move(coords))));
  }
  // The rows must commute as derivations-to-be: [d/dx_p + b_p, d/dx_q + b_q]
  // vanishing is the closure condition in disguise.
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      if (!ahat_bracket(t[static_cast<size_t>(p - 1)],
                        t[static_cast<size_t>(q - 1)])
               .is_zero())
        fail(ErrorKind::CompatibilityFails,
             "rows " + std::to_string(p) + " and " + std::to_string(q) +
                 " of B do not commute");

  FactoredAutomorphism result;
  int last_column = 0;
  while (true) {
    int column = 0;
    for (int i = 1; i <= n && column == 0; ++i)
      for (int p = 1; p <= n; ++p)
        if (!t[static_cast<size_t>(p - 1)].tensor.coord(i).is_zero()) {
          column = i;
          break;
        }
    if (column == 0) break;  // everything peeled
    if (column <= last_column)
      fail(ErrorKind::NoProgress,
           "column " + std::to_string(column) + " reappeared after clearing");
    std::vector<Polynomial> g;
    g.reserve(static_cast<size_t>(n));
    for (int p = 1; p <= n; ++p)
      g.push_back(t[static_cast<size_t>(p - 1)].tensor.coord(column));
    Polynomial h = integrate_gradient(g);
    std::vector<Polynomial> coords(static_cast<size_t>(n), Polynomial(n));
    coords[static_cast<size_t>(column - 1)] = h;
    TensorElement factor(algebra, std::move(coords));
    for (int p = 1; p <= n; ++p)
      t[static_cast<size_t>(p - 1)] =
          exp_ad(factor, t[static_cast<size_t>(p - 1)]);
    for (int p = 1; p <= n; ++p)
      if (!t[static_cast<size_t>(p - 1)].tensor.coord(column).is_zero())
        fail(ErrorKind::NoProgress,
             "column " + std::to_string(column) + " did not clear");
    result.factors.push_back({column, std::move(h)});
    last_column = column;
  }
  for (int p = 1; p <= n; ++p)
    if (t[static_cast<size_t>(p - 1)] !=
        AhatElement::partial_basis(algebra, p))
      fail(ErrorKind::Internal, "peeling left a nontrivial row");
  return result;
}

Realization realize_solvable(const LieAlgebra& L, const SolvableSplit& split,
                             const RealizeOptions& options) {
  verify_split(L, split);
  int n = L.dim(), k = split.k;
  int sign = options.paper_signs ? 1 : -1;
  auto algebra = shared(L);
  TensorElement w = coordinate_seed(algebra, 1, k, sign);
  TensorElement u = coordinate_seed(algebra, k + 1, n, sign);
  std::vector<TensorElement> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int p = 1; p <= n; ++p) {
    if (p <= k) {
      TensorElement d = phi_series(w, -tensor_partial(w, p));
      rows.push_back(exp_ad(u, d));
    } else {
      rows.push_back(phi_series(u, -tensor_partial(u, p)));
    }
  }
  Witness witness;
  witness.w = w;
  witness.u = u;
  std::ostringstream note;
  note << "construction: solvable with split k=" << split.k
       << " m=" << split.m << ", seeds w = " << w.str()
       << " and u = " << u.str();
  witness.notes.push_back(note.str());
  return assemble(L, rows, std::move(witness));
}

namespace {

/// Embeds a tensor element over the prefix algebra into the full algebra,
/// padding coordinates and widening the polynomial ring.
TensorElement embed_tensor(std::shared_ptr<const LieAlgebra> algebra,
                           const TensorElement& inner) {
  int n = algebra->dim();
  std::vector<Polynomial> coords(static_cast<size_t>(n), Polynomial(n));
  for (int i = 1; i <= inner.dim(); ++i)
    coords[static_cast<size_t>(i - 1)] = inner.coord(i).embed(n);
  return TensorElement(std::move(algebra), std::move(coords));
}

void check_tail_action(const LieAlgebra& L, int m) {
  int n = L.dim();
  for (int i = m + 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= m; ++k)
        if (!is_zero(L.c(i, j, k)))
          fail(ErrorKind::SplitInvalid,
               "suffix l" + std::to_string(m + 1) + "..l" + std::to_string(n) +
                   " is not a subalgebra");
  // Iterated brackets of the suffix must exhaust the algebra within n steps.
  std::vector<std::vector<Rational>> tail_rows;
  for (int i = m + 1; i <= n; ++i) {
    std::vector<Rational> v(static_cast<size_t>(n), Rational(0));
    v[static_cast<size_t>(i - 1)] = 1;
    tail_rows.push_back(std::move(v));
  }
  RatMatrix tail = RatMatrix::from_rows(tail_rows, n);
  RatMatrix space = RatMatrix::identity(n);
  for (int step = 0; step < n; ++step) {
    std::vector<std::vector<Rational>> next;
    for (int r = 0; r < tail.rows(); ++r)
      for (int s = 0; s < space.rows(); ++s)
        next.push_back(L.bracket(tail.row(r), space.row(s)));
    space = rref(RatMatrix::from_rows(next, n));
    if (space.rows() == 0) return;
  }
  fail(ErrorKind::SplitInvalid,
       "suffix does not act nilpotently on the algebra");
}

} // namespace

Realization extend_realization(const LieAlgebra& L, int m,
                               const Realization& inner,
                               const RealizeOptions& options) {
  (void)options;  // the extension seed keeps the default orientation
  int n = L.dim();
  if (m < 1 || m > n)
    fail(ErrorKind::Structural, "prefix length out of range");
  LieAlgebra prefix = prefix_subalgebra(L, m);
  if (!(inner.algebra == prefix))
    fail(ErrorKind::Structural,
         "inner realization does not match the prefix subalgebra");
  if (m == n) {
    Realization result = inner;
    result.witness.notes.push_back("extension: trivial, prefix is everything");
    return result;
  }
  check_tail_action(L, m);
  auto algebra = shared(L);
  TensorElement seed = coordinate_seed(algebra, m + 1, n, -1);
  std::vector<TensorElement> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int p = 1; p <= n; ++p) {
    AhatElement base = AhatElement::partial_basis(algebra, p);
    if (p <= m) {
      std::vector<Polynomial> coords(static_cast<size_t>(n), Polynomial(n));
      for (int i = 1; i <= m; ++i)
        coords[static_cast<size_t>(i - 1)] =
            inner.b_matrix.at(p - 1, i - 1).embed(n);
      base = base + AhatElement::from_tensor(
                        TensorElement(algebra, std::move(coords)));
    }
    AhatElement image = exp_ad(seed, base);
    rows.push_back(image.tensor);
  }
  Witness witness;
  witness.u = seed;
  if (inner.witness.w)
    witness.w = embed_tensor(algebra, *inner.witness.w);
  for (const std::string& note : inner.witness.notes)
    witness.notes.push_back("inner: " + note);
  witness.notes.push_back("extension: prefix length " + std::to_string(m) +
                          ", seed b = " + seed.str());
  return assemble(L, rows, std::move(witness));
}

Realization realize_general(const LieAlgebra& L, const LeviData& levi,
                            const SolvableSplit& inner_split,
                            const RealizeOptions& options) {
  (void)options;  // the pipeline fixes its seeds to the default orientation
  verify_split(L, levi);
  int m = levi.borel_end;
  if (m < 1)
    fail(ErrorKind::SplitInvalid,
         "general construction needs a nonempty solvable prefix");
  RealizeOptions inner_options;  // default signs regardless of the caller's
  if (m == L.dim()) {
    Realization result = realize_solvable(L, inner_split, inner_options);
    result.witness.notes.push_back(
        "general pipeline: no tail, solvable construction only");
    return result;
  }
  LieAlgebra prefix = prefix_subalgebra(L, m);
  Realization inner = realize_solvable(prefix, inner_split, inner_options);
  Realization result = extend_realization(L, m, inner, inner_options);
  result.witness.notes.push_back("general pipeline: solvable prefix of size " +
                                 std::to_string(m) + " extended across the tail");
  return result;
}

FieldFamily jacobian_dual_basis(const std::vector<Polynomial>& fs) {
  int n = static_cast<int>(fs.size());
  if (n == 0)
    fail(ErrorKind::Structural, "commuting basis needs a nonempty map");
  for (const Polynomial& f : fs)
    if (f.vars() != n)
      fail(ErrorKind::Structural,
           "map must have as many polynomials as variables");
  PolyMatrix j = jacobian(fs);
  Polynomial jac_det = det(j);
  if (!jac_det.is_constant() || jac_det.is_zero())
    fail(ErrorKind::NonConstantJacobian,
         "Jacobian determinant is " + jac_det.str() +
             ", not a nonzero constant");
  PolyMatrix coeffs(n, n, n);
  if (n == 1) {
    coeffs.at(0, 0) = Polynomial::constant(1, Rational(1));
  } else {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        PolyMatrix minor(n - 1, n - 1, n);
        for (int rr = 0, mr = 0; rr < n; ++rr) {
          if (rr == r) continue;
          for (int cc = 0, mc = 0; cc < n; ++cc) {
            if (cc == c) continue;
            minor.at(mr, mc) = j.at(rr, cc);
            ++mc;
          }
          ++mr;
        }
        Polynomial cof = det(minor);
        coeffs.at(r, c) = ((r + c) % 2 == 0) ? cof : -cof;
      }
  }
  return FieldFamily::from_matrix(coeffs);
}

Polynomial integrate_gradient(const std::vector<Polynomial>& g) {
  int n = static_cast<int>(g.size());
  if (n == 0)
    fail(ErrorKind::Structural, "gradient must be nonempty");
  for (const Polynomial& p : g)
    if (p.vars() != n)
      fail(ErrorKind::Structural,
           "gradient needs one component per variable");
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      if (g[static_cast<size_t>(q - 1)].partial(p) !=
          g[static_cast<size_t>(p - 1)].partial(q))
        fail(ErrorKind::NotClosed,
             "mixed partials disagree between components " +
                 std::to_string(p) + " and " + std::to_string(q));
  // Piece together h = sum_v int g_v(0,..,0,x_v,..,x_n) dx_v; closedness
  // makes the earlier integrals account for all earlier-variable dependence.
  Polynomial h(n);
  for (int v = 1; v <= n; ++v)
    h = h + g[static_cast<size_t>(v - 1)]
                .substitute_zero_prefix(v - 1)
                .antiderivative(v);
  for (int p = 1; p <= n; ++p)
    if (h.partial(p) != g[static_cast<size_t>(p - 1)])
      fail(ErrorKind::Internal, "gradient integration produced a mismatch");
  return h;
}

} // namespace liebasis
