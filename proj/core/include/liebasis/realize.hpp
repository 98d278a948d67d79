#ifndef LIEBASIS_REALIZE_HPP
#define LIEBASIS_REALIZE_HPP

#include "liebasis/lie_algebra.hpp"
#include "liebasis/tensor.hpp"
#include "liebasis/vector_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liebasis {

struct RealizeOptions {
  /// Default seeds are w = -sum x_i (x) l_i and friends, which make an
  /// abelian algebra come out as +d/dx_i.  The alternate convention flips the
  /// solvable construction's seeds to +sum x_i (x) l_i.
  bool paper_signs = false;
};

/// Generator data retained so a realization can be audited: the exponential
/// seeds, any basis change applied first, and free-form notes.
struct Witness {
  std::optional<TensorElement> w;
  std::optional<TensorElement> u;
  std::optional<BasisChange> basis_change;
  std::vector<std::string> notes;
};

/// A realization of L by polynomial vector fields: fields D_1..D_n with
/// [D_i, D_j] = sum_k c_ij^k D_k, their coefficient matrix A, and the inverse
/// transition matrix B (rows express d/dx_p over the D_i), B * A = identity.
/// `algebra` records the constants the fields actually satisfy, which differ
/// from the input's when a basis change was needed first.
struct Realization {
  LieAlgebra algebra;
  FieldFamily fields;
  PolyMatrix b_matrix;
  PolyMatrix a_matrix;
  Witness witness;
};

/// Realizes a nilpotent algebra.  The basis is first adapted to the lower
/// central series when needed so every nonzero c_ij^k has k > max(i,j); then
/// the rows of B are phi_w(-dw/dx_p) for w = -sum x_i (x) l_i and the fields
/// are the rows of B^{-1}.  Raises NotNilpotent for non-nilpotent input.
Realization realize_nilpotent(const LieAlgebra& L,
                              const RealizeOptions& options = {});

/// Ordered product of coordinate shear automorphisms exp(h * d/dx_column).
struct FactoredAutomorphism {
  struct Factor {
    int column;  // 1-based basis index the factor acts along
    Polynomial h;
  };
  std::vector<Factor> factors;
};

/// Inverts the nilpotent construction: strips B down to the identity by
/// successive exponentials e^{ad h (x) l_col}, one per initially nonzero
/// column, with strictly increasing column indices.  Requires the basis to
/// satisfy the flag condition and B to satisfy the closure equations
/// (CompatibilityFails otherwise); NotClosed and NoProgress signal data that
/// no valid B can produce.
FactoredAutomorphism peel_to_factored_automorphism(const LieAlgebra& L,
                                                   const PolyMatrix& b);

/// Realizes a solvable algebra from a split basis (see SolvableSplit).
/// Seeds: w over the nilpotent prefix l1..lk, u over l_{k+1}..l_n; rows of B
/// are e^{ad u}(phi_w(-dw/dx_p)) for p <= k and phi_u(-du/dx_p) beyond.
Realization realize_solvable(const LieAlgebra& L, const SolvableSplit& split,
                             const RealizeOptions& options = {});

/// Extends a realization of the subalgebra on l1..lm to all of L, given that
/// the tail l_{m+1}..l_n spans a subalgebra acting nilpotently on L.  Rows of
/// the inner B embed as d_p; with b = -sum_{i>m} x_i (x) l_i the new rows are
/// e^{ad b}(d/dx_p + d_p) - d/dx_p.
Realization extend_realization(const LieAlgebra& L, int m,
                               const Realization& inner,
                               const RealizeOptions& options = {});

/// Full pipeline: realize the solvable prefix l1..l_borel_end via its inner
/// split, then extend across the tail.
Realization realize_general(const LieAlgebra& L, const LeviData& levi,
                            const SolvableSplit& inner_split,
                            const RealizeOptions& options = {});

/// Commuting basis attached to a polynomial map f1..fn with constant nonzero
/// Jacobian determinant: D_i(h) = det of the Jacobian with row i replaced by
/// the gradient of h, so the coefficients are signed Jacobian cofactors.
/// Raises NonConstantJacobian otherwise.
FieldFamily jacobian_dual_basis(const std::vector<Polynomial>& fs);

/// Polynomial h with dh/dx_p = g_p and zero constant term.  The mixed-partial
/// conditions dg_q/dx_p = dg_p/dx_q are checked first (NotClosed).
Polynomial integrate_gradient(const std::vector<Polynomial>& g);

} // namespace liebasis

#endif
