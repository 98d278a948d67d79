#ifndef LIEBASIS_LIE_ALGEBRA_HPP
#define LIEBASIS_LIE_ALGEBRA_HPP

#include "liebasis/rat_matrix.hpp"
#include "liebasis/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace liebasis {

/// One raw structure constant c_ij^k, indices 1-based.  Entries may arrive in
/// either orientation; ingestion canonicalizes to i < j.
struct BracketEntry {
  int i, j, k;
  Rational c;
};

/// Finite-dimensional Lie algebra presented by structure constants over a
/// fixed basis l1..ln: [l_i, l_j] = sum_k c_ij^k l_k.  Construction validates
/// both axioms, so an instance can always be trusted.
class LieAlgebra {
public:
  /// Builds and validates.  Raises NotAntisymmetric for i = j entries with a
  /// nonzero constant or conflicting (i,j)/(j,i) pairs, JacobiFails (naming a
  /// violating triple) when the Jacobi identity breaks.
  static LieAlgebra from_entries(int dim, const std::vector<BracketEntry>& entries);

  static LieAlgebra abelian(int dim);

  int dim() const { return dim_; }

  /// c_ij^k with antisymmetry resolved (works for any orientation of i, j).
  Rational c(int i, int j, int k) const;

  /// Canonical nonzero constants, keys (i,j,k) with i < j.
  const std::map<std::tuple<int, int, int>, Rational>& entries() const {
    return entries_;
  }

  /// Coordinates of [u, v] for coordinate vectors over this basis.
  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const;

  /// Matrix of ad d acting on coordinate columns: (ad d) e_j = [d, l_j].
  RatMatrix ad_matrix(const std::vector<Rational>& d) const;

  /// Trace of ad d, computed directly from the constants:
  /// sum_i d_i sum_j c_ij^j.
  Rational ad_trace(const std::vector<Rational>& d) const;

  bool operator==(const LieAlgebra& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
  }

private:
  explicit LieAlgebra(int dim) : dim_(dim) {}

  int dim_;
  std::map<std::tuple<int, int, int>, Rational> entries_;
};

/// Re-runs the construction-time checks; raises on violation.  Useful for
/// exercising the validator on raw data.
void validate(int dim, const std::vector<BracketEntry>& entries);

/// Lower central series L = C1 >= C2 >= ... as echelon bases, listed until
/// the series reaches zero or repeats (the repeated term appears once), so a
/// nilpotent algebra ends with the zero space.
std::vector<RatMatrix> lower_central_series(const LieAlgebra& L);

/// Derived series L = D0 >= [D0,D0] >= ..., same listing convention.
std::vector<RatMatrix> derived_series(const LieAlgebra& L);

bool is_nilpotent(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);

/// Invertible change of basis; matrix rows are the new basis vectors in the
/// old coordinates.
struct BasisChange {
  RatMatrix matrix;
  RatMatrix inverse;
};

/// Structure constants after passing to the basis given by the rows of P.
LieAlgebra transform(const LieAlgebra& L, const RatMatrix& p_rows);

/// Whether every nonzero c_ij^k has k > max(i,j), i.e. the basis is adapted
/// to a flag of ideals.
bool flag_condition_holds(const LieAlgebra& L);

/// Reorders/combines the basis of a nilpotent algebra along its lower central
/// series so the flag condition holds.  Returns the change of basis and the
/// algebra rewritten in the new basis.  NotNilpotent when the series does not
/// terminate.
std::pair<BasisChange, LieAlgebra> adapted_nilpotent_basis(const LieAlgebra& L);

/// Basis split used by the solvable construction: l1..lm span a nilpotent
/// subalgebra H, l_{k+1}..l_n span [L,L], so l_{k+1}..l_m is a basis of the
/// intersection.
struct SolvableSplit {
  int k, m;
};

/// Basis split for the general construction: l1..l_borel_end span a solvable
/// subalgebra containing the radical, the tail spans a subalgebra acting
/// nilpotently on the whole algebra.
struct LeviData {
  int borel_end;
  int solvable_dim = 0;
};

/// Checks every structural requirement of a split against the algebra and
/// raises SplitInvalid describing the first failure.
void verify_split(const LieAlgebra& L, const SolvableSplit& split);
void verify_split(const LieAlgebra& L, const LeviData& levi);

/// The subalgebra spanned by rows of an echelon basis, as an abstract algebra
/// over those rows.  Structural error when the rows do not close.
LieAlgebra subalgebra_on(const LieAlgebra& L, const RatMatrix& basis_rows);

/// The subalgebra on the coordinate prefix l1..lm, as an m-dimensional
/// algebra.  SplitInvalid when the prefix does not close under bracket.
LieAlgebra prefix_subalgebra(const LieAlgebra& L, int m);

/// Result of the randomized Cartan-style search used by automatic dispatch.
struct CartanSuggestion {
  BasisChange change;
  LieAlgebra transformed;
  SolvableSplit split;
};

/// For a solvable algebra, tries seeded random elements whose Fitting-null
/// component yields a nilpotent complement-of-derived split; reorders the
/// basis accordingly.  Returns nothing after `tries` failed attempts.
std::optional<CartanSuggestion> heuristic_cartan_split(const LieAlgebra& L,
                                                       std::uint64_t seed,
                                                       int tries = 8);

} // namespace liebasis

#endif
