#include "liebasis/lie_algebra.hpp"

#include "liebasis/errors.hpp"

#include <algorithm>
#include <sstream>

namespace liebasis {

namespace {

std::string triple(int i, int j, int k) {
  std::ostringstream out;
  out << "(" << i << "," << j << "," << k << ")";
  return out.str();
}

} // namespace

LieAlgebra LieAlgebra::from_entries(int dim,
                                    const std::vector<BracketEntry>& entries) {
  if (dim < 1)
    fail(ErrorKind::Structural, "algebra dimension must be positive");
  LieAlgebra L(dim);
  // Canonicalize to i < j, folding sign; keep zero-valued entries visible
  // during the pass so an explicit c_ji^k that contradicts c_ij^k is caught.
  std::map<std::tuple<int, int, int>, Rational> canonical;
  for (const BracketEntry& e : entries) {
    if (e.i < 1 || e.i > dim || e.j < 1 || e.j > dim || e.k < 1 || e.k > dim)
      fail(ErrorKind::Structural,
           "structure constant index out of range at " + triple(e.i, e.j, e.k));
    if (e.i == e.j) {
      if (!is_zero(e.c))
        fail(ErrorKind::NotAntisymmetric,
             "nonzero constant on a repeated index at " + triple(e.i, e.j, e.k));
      continue;
    }
    int i = e.i, j = e.j;
    Rational value = e.c;
    if (i > j) {
      std::swap(i, j);
      value = -value;
    }
    auto key = std::make_tuple(i, j, e.k);
    auto it = canonical.find(key);
    if (it == canonical.end()) {
      canonical.emplace(key, value);
    } else if (it->second != value) {
      fail(ErrorKind::NotAntisymmetric,
           "conflicting constants for " + triple(i, j, e.k) + " and its swap");
    }
  }
  for (auto& [key, value] : canonical)
    if (!is_zero(value)) L.entries_.emplace(key, value);

  // Jacobi: [[li,lj],lk] + [[lj,lk],li] + [[lk,li],lj] = 0 componentwise.
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j)
      for (int k = j + 1; k <= dim; ++k)
        for (int l = 1; l <= dim; ++l) {
          Rational sum(0);
          for (int m = 1; m <= dim; ++m)
            sum += L.c(i, j, m) * L.c(m, k, l) + L.c(j, k, m) * L.c(m, i, l) +
                   L.c(k, i, m) * L.c(m, j, l);
          if (!is_zero(sum))
            fail(ErrorKind::JacobiFails,
                 "Jacobi identity fails at " + triple(i, j, k) +
                     " in coordinate " + std::to_string(l));
        }
  return L;
}

LieAlgebra LieAlgebra::abelian(int dim) {
  return from_entries(dim, {});
}

Rational LieAlgebra::c(int i, int j, int k) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_ || k < 1 || k > dim_)
    fail(ErrorKind::Structural, "structure constant index out of range");
  if (i == j) return Rational(0);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = entries_.find(std::make_tuple(i, j, k));
  if (it == entries_.end()) return Rational(0);
  return flip ? -it->second : it->second;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& u,
                                          const std::vector<Rational>& v) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
    fail(ErrorKind::Structural, "bracket coordinate width mismatch");
  std::vector<Rational> result(static_cast<size_t>(dim_), Rational(0));
  for (const auto& [key, value] : entries_) {
    auto [i, j, k] = key;
    Rational pair = u[static_cast<size_t>(i - 1)] * v[static_cast<size_t>(j - 1)] -
                    u[static_cast<size_t>(j - 1)] * v[static_cast<size_t>(i - 1)];
    result[static_cast<size_t>(k - 1)] += value * pair;
  }
  return result;
}

RatMatrix LieAlgebra::ad_matrix(const std::vector<Rational>& d) const {
  RatMatrix m(dim_, dim_);
  for (int j = 1; j <= dim_; ++j) {
    std::vector<Rational> e(static_cast<size_t>(dim_), Rational(0));
    e[static_cast<size_t>(j - 1)] = 1;
    std::vector<Rational> image = bracket(d, e);
    for (int i = 1; i <= dim_; ++i)
      m.at(i - 1, j - 1) = image[static_cast<size_t>(i - 1)];
  }
  return m;
}

Rational LieAlgebra::ad_trace(const std::vector<Rational>& d) const {
  if (static_cast<int>(d.size()) != dim_)
    fail(ErrorKind::Structural, "ad-trace coordinate width mismatch");
  Rational total(0);
  for (int i = 1; i <= dim_; ++i) {
    Rational column(0);
    for (int j = 1; j <= dim_; ++j) column += c(i, j, j);
    total += d[static_cast<size_t>(i - 1)] * column;
  }
  return total;
}

void validate(int dim, const std::vector<BracketEntry>& entries) {
  (void)LieAlgebra::from_entries(dim, entries);
}

namespace {

/// Span of all brackets [a, b], a over rows of A, b over rows of B.
RatMatrix bracket_span(const LieAlgebra& L, const RatMatrix& a,
                       const RatMatrix& b) {
  std::vector<std::vector<Rational>> rows;
  for (int r = 0; r < a.rows(); ++r)
    for (int s = 0; s < b.rows(); ++s)
      rows.push_back(L.bracket(a.row(r), b.row(s)));
  if (rows.empty()) return RatMatrix(0, L.dim());
  return rref(RatMatrix::from_rows(rows, L.dim()));
}

std::vector<RatMatrix> series_by(const LieAlgebra& L, bool derived) {
  std::vector<RatMatrix> terms;
  terms.push_back(rref(RatMatrix::identity(L.dim())));
  // Stop once the series hits zero or repeats; the repeated term is listed
  // once so stabilization stays visible.
  while (true) {
    const RatMatrix& current = terms.back();
    RatMatrix next =
        derived ? bracket_span(L, current, current)
                : bracket_span(L, terms.front(), current);
    bool stabilized = (next == current);
    terms.push_back(std::move(next));
    if (stabilized || terms.back().rows() == 0) break;
  }
  return terms;
}

} // namespace

std::vector<RatMatrix> lower_central_series(const LieAlgebra& L) {
  return series_by(L, false);
}

std::vector<RatMatrix> derived_series(const LieAlgebra& L) {
  return series_by(L, true);
}

bool is_nilpotent(const LieAlgebra& L) {
  return lower_central_series(L).back().rows() == 0;
}

bool is_solvable(const LieAlgebra& L) {
  return derived_series(L).back().rows() == 0;
}

LieAlgebra transform(const LieAlgebra& L, const RatMatrix& p_rows) {
  if (p_rows.rows() != L.dim() || p_rows.cols() != L.dim())
    fail(ErrorKind::Structural, "basis change must be square of the dimension");
  RatMatrix p_inv = rat_inverse(p_rows);
  std::vector<BracketEntry> entries;
  for (int i = 1; i <= L.dim(); ++i)
    for (int j = i + 1; j <= L.dim(); ++j) {
      std::vector<Rational> w = L.bracket(p_rows.row(i - 1), p_rows.row(j - 1));
      // Coordinates in the new basis: x with x * P = w, i.e. x = w * P^{-1}.
      for (int k = 1; k <= L.dim(); ++k) {
        Rational coord(0);
        for (int t = 0; t < L.dim(); ++t)
          coord += w[static_cast<size_t>(t)] * p_inv.at(t, k - 1);
        if (!is_zero(coord)) entries.push_back({i, j, k, coord});
      }
    }
  return LieAlgebra::from_entries(L.dim(), entries);
}

bool flag_condition_holds(const LieAlgebra& L) {
  for (const auto& [key, value] : L.entries()) {
    (void)value;
    auto [i, j, k] = key;
    if (k <= std::max(i, j)) return false;
  }
  return true;
}

std::pair<BasisChange, LieAlgebra> adapted_nilpotent_basis(const LieAlgebra& L) {
  std::vector<RatMatrix> series = lower_central_series(L);
  if (series.back().rows() != 0)
    fail(ErrorKind::NotNilpotent,
         "lower central series stabilizes at dimension " +
             std::to_string(series.back().rows()));
  // Pick, for each series layer, the echelon rows whose pivots disappear in
  // the next layer.  Nested echelon bases have nested pivot sets, so the
  // concatenation runs shallow to deep and spans everything exactly once.
  std::vector<std::vector<Rational>> new_rows;
  for (size_t depth = 0; depth + 1 < series.size(); ++depth) {
    std::vector<int> here, deeper;
    RatMatrix basis = rref(series[depth], &here);
    rref(series[depth + 1], &deeper);
    for (int r = 0; r < basis.rows(); ++r) {
      int pivot = here[static_cast<size_t>(r)];
      if (std::find(deeper.begin(), deeper.end(), pivot) == deeper.end())
        new_rows.push_back(basis.row(r));
    }
  }
  RatMatrix p = RatMatrix::from_rows(new_rows, L.dim());
  if (p.rows() != L.dim())
    fail(ErrorKind::Internal, "adapted basis has wrong cardinality");
  BasisChange change{p, rat_inverse(p)};
  LieAlgebra adapted = transform(L, p);
  if (!flag_condition_holds(adapted))
    fail(ErrorKind::Internal, "adapted basis misses the flag condition");
  return {change, adapted};
}

namespace {

/// Echelon basis of the coordinate subspace spanned by e_{from}..e_{to}
/// (1-based, inclusive); empty when from > to.
RatMatrix coordinate_span(int dim, int from, int to) {
  std::vector<std::vector<Rational>> rows;
  for (int i = from; i <= to; ++i) {
    std::vector<Rational> v(static_cast<size_t>(dim), Rational(0));
    v[static_cast<size_t>(i - 1)] = 1;
    rows.push_back(std::move(v));
  }
  return RatMatrix::from_rows(rows, dim);
}

bool prefix_closes(const LieAlgebra& L, int m) {
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = m + 1; k <= L.dim(); ++k)
        if (!is_zero(L.c(i, j, k))) return false;
  return true;
}

/// Abstract algebra on the coordinate prefix l1..lm (requires closure).
LieAlgebra prefix_algebra(const LieAlgebra& L, int m) {
  std::vector<BracketEntry> entries;
  for (const auto& [key, value] : L.entries()) {
    auto [i, j, k] = key;
    if (i <= m && j <= m && k <= m) entries.push_back({i, j, k, value});
  }
  return LieAlgebra::from_entries(m, entries);
}

} // namespace

void verify_split(const LieAlgebra& L, const SolvableSplit& split) {
  int n = L.dim(), k = split.k, m = split.m;
  if (!(1 <= k && k <= m && m <= n))
    fail(ErrorKind::SplitInvalid,
         "split indices must satisfy 1 <= k <= m <= dim");
  if (!is_solvable(L))
    fail(ErrorKind::SplitInvalid, "algebra is not solvable");
  if (!prefix_closes(L, m))
    fail(ErrorKind::SplitInvalid,
         "prefix l1..l" + std::to_string(m) + " is not a subalgebra");
  if (!is_nilpotent(prefix_algebra(L, m)))
    fail(ErrorKind::SplitInvalid,
         "prefix l1..l" + std::to_string(m) + " is not nilpotent");
  RatMatrix derived = lower_central_series(L)[1];  // [L, L]
  RatMatrix tail = coordinate_span(n, k + 1, n);
  if (!same_row_space(derived, tail))
    fail(ErrorKind::SplitInvalid,
         "l" + std::to_string(k + 1) + "..l" + std::to_string(n) +
             " does not span the derived algebra");
}

void verify_split(const LieAlgebra& L, const LeviData& levi) {
  int n = L.dim(), m = levi.borel_end;
  if (!(0 <= m && m <= n))
    fail(ErrorKind::SplitInvalid, "borel_end out of range");
  if (levi.solvable_dim < 0 || levi.solvable_dim > m)
    fail(ErrorKind::SplitInvalid, "solvable_dim out of range");
  if (m > 0) {
    if (!prefix_closes(L, m))
      fail(ErrorKind::SplitInvalid,
           "prefix l1..l" + std::to_string(m) + " is not a subalgebra");
    if (!is_solvable(prefix_algebra(L, m)))
      fail(ErrorKind::SplitInvalid,
           "prefix l1..l" + std::to_string(m) + " is not solvable");
  }
  if (m == n) return;
  // Tail must close and act nilpotently on the whole algebra.
  for (int i = m + 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= m; ++k)
        if (!is_zero(L.c(i, j, k)))
          fail(ErrorKind::SplitInvalid,
               "suffix l" + std::to_string(m + 1) + "..l" + std::to_string(n) +
                   " is not a subalgebra");
  RatMatrix tail = coordinate_span(n, m + 1, n);
  RatMatrix space = rref(RatMatrix::identity(n));
  for (int step = 0; step < n; ++step) {
    space = bracket_span(L, tail, space);
    if (space.rows() == 0) return;
  }
  fail(ErrorKind::SplitInvalid,
       "suffix does not act nilpotently on the algebra");
}

LieAlgebra prefix_subalgebra(const LieAlgebra& L, int m) {
  if (m < 1 || m > L.dim())
    fail(ErrorKind::Structural, "prefix length out of range");
  if (!prefix_closes(L, m))
    fail(ErrorKind::SplitInvalid,
         "prefix l1..l" + std::to_string(m) + " is not a subalgebra");
  return prefix_algebra(L, m);
}

LieAlgebra subalgebra_on(const LieAlgebra& L, const RatMatrix& basis_rows) {
  int r = basis_rows.rows();
  if (basis_rows.cols() != L.dim())
    fail(ErrorKind::Structural, "subalgebra basis width mismatch");
  if (rank(basis_rows) != r)
    fail(ErrorKind::Structural, "subalgebra basis rows are dependent");
  std::vector<BracketEntry> entries;
  for (int a = 1; a <= r; ++a)
    for (int b = a + 1; b <= r; ++b) {
      std::vector<Rational> w =
          L.bracket(basis_rows.row(a - 1), basis_rows.row(b - 1));
      if (!in_row_space(basis_rows, w))
        fail(ErrorKind::Structural, "rows do not close under bracket");
      std::vector<Rational> coords = coordinates_in(basis_rows, w);
      for (int k = 1; k <= r; ++k)
        if (!is_zero(coords[static_cast<size_t>(k - 1)]))
          entries.push_back({a, b, k, coords[static_cast<size_t>(k - 1)]});
    }
  return LieAlgebra::from_entries(r, entries);
}

std::optional<CartanSuggestion> heuristic_cartan_split(const LieAlgebra& L,
                                                       std::uint64_t seed,
                                                       int tries) {
  if (!is_solvable(L)) return std::nullopt;
  int n = L.dim();
  RatMatrix derived = lower_central_series(L)[1];
  SmallRationalStream stream(seed);
  for (int attempt = 0; attempt < tries; ++attempt) {
    std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      d[static_cast<size_t>(i)] = stream.next_integer(-3, 3);
      nonzero = nonzero || !is_zero(d[static_cast<size_t>(i)]);
    }
    if (!nonzero) continue;
    // Fitting-null component of ad d.
    RatMatrix power = RatMatrix::identity(n);
    RatMatrix ad = L.ad_matrix(d);
    for (int i = 0; i < n; ++i) power = ad * power;
    RatMatrix h = right_kernel(power);
    if (h.rows() == 0) continue;
    LieAlgebra h_algebra(LieAlgebra::abelian(1));
    try {
      h_algebra = subalgebra_on(L, h);
    } catch (const Error&) {
      continue;  // candidate does not close; resample
    }
    if (!is_nilpotent(h_algebra)) continue;
    RatMatrix meet = intersect_row_spaces(h, derived);
    int m = h.rows();
    int k = m - meet.rows();
    if (k + derived.rows() != n) continue;  // H + [L,L] falls short of L
    // Assemble the reordered basis: H-part outside [L,L], then the
    // intersection, then the rest of [L,L].  Nested pivot sets make the pick
    // deterministic.
    std::vector<int> h_pivots, meet_pivots, derived_pivots;
    RatMatrix h_red = rref(h, &h_pivots);
    rref(meet, &meet_pivots);
    RatMatrix derived_red = rref(derived, &derived_pivots);
    std::vector<std::vector<Rational>> rows;
    for (int r = 0; r < h_red.rows(); ++r)
      if (std::find(meet_pivots.begin(), meet_pivots.end(),
                    h_pivots[static_cast<size_t>(r)]) == meet_pivots.end())
        rows.push_back(h_red.row(r));
    for (int r = 0; r < meet.rows(); ++r) rows.push_back(meet.row(r));
    for (int r = 0; r < derived_red.rows(); ++r)
      if (std::find(meet_pivots.begin(), meet_pivots.end(),
                    derived_pivots[static_cast<size_t>(r)]) ==
          meet_pivots.end())
        rows.push_back(derived_red.row(r));
    if (static_cast<int>(rows.size()) != n) continue;
    RatMatrix p = RatMatrix::from_rows(rows, n);
    if (rank(p) != n) continue;
    CartanSuggestion suggestion{{p, rat_inverse(p)}, transform(L, p), {k, m}};
    try {
      verify_split(suggestion.transformed, suggestion.split);
    } catch (const Error&) {
      continue;
    }
    return suggestion;
  }
  return std::nullopt;
}

} // namespace liebasis
