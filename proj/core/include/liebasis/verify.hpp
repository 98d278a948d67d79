#ifndef LIEBASIS_VERIFY_HPP
#define LIEBASIS_VERIFY_HPP

#include "liebasis/lie_algebra.hpp"
#include "liebasis/realize.hpp"
#include "liebasis/vector_field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liebasis {

/// Default seed for the verifier's sample elements; the LIEBASIS_SEED
/// environment variable (parsed by the CLI) overrides it.
inline constexpr std::uint64_t kDefaultVerifySeed = 0x11EBA515u;

struct BracketFailure {
  int i, j;
  VectorField residual;  // [D_i, D_j] - sum_k c_ij^k D_k
};

/// Outcome of the direct basis check: never throws, the report carries all
/// failures.
struct BasicReport {
  bool verdict = false;
  std::optional<Polynomial> det;  // absent when the matrix is not square
  bool det_constant_nonzero = false;
  std::vector<BracketFailure> bracket_failures;
  std::vector<std::string> notes;
};

/// Checks that the family is a module basis realizing the constants of L:
/// the coefficient determinant is a nonzero constant and every
/// [D_i, D_j] - sum_k c_ij^k D_k vanishes identically.
BasicReport check_basic(const LieAlgebra& L, const FieldFamily& fam);

struct CompatResidual {
  int p, q, k;
  Polynomial value;
};

/// Left-hand sides of the closure equations for a candidate transition
/// matrix B: for all p, q, k,
///   sum_{i,j} b_pi b_qj c_ij^k + db_qk/dx_p - db_pk/dx_q
/// must vanish.  The expression is antisymmetric in (p, q), so the report
/// lists every nonzero residual once, with its triple (p, q, k), p < q.
struct CompatReport {
  bool verdict = false;
  std::vector<CompatResidual> residuals;
};

CompatReport check_compat_equations(const LieAlgebra& L, const PolyMatrix& b);

/// Coefficients gamma with [D_i, D_j] = sum_k gamma_k D_k, recovered by
/// multiplying the bracket's coefficients with the inverse of the family's
/// coefficient matrix.  NotUnimodular/Singular when that inverse does not
/// exist.
std::vector<Polynomial> extract_bracket_coefficients(const FieldFamily& fam,
                                                     int i, int j);

struct TraceDivSample {
  std::vector<Rational> coords;
  Rational trace;
  Polynomial div;
  bool ok = false;
};

struct TraceDivReport {
  bool verdict = false;
  std::vector<TraceDivSample> samples;
};

/// For each basis element and `extra_samples` seeded random combinations d:
/// the trace of ad d computed from the constants must equal minus the
/// divergence of the realized field (which is then necessarily constant).
TraceDivReport check_trace_divergence(const LieAlgebra& L,
                                      const Realization& real,
                                      std::uint64_t seed = kDefaultVerifySeed,
                                      int extra_samples = 16);

/// Bundle of every check run against a realization, including that
/// B * A = identity exactly.
struct VerificationReport {
  BasicReport basic;
  CompatReport compat;
  TraceDivReport trace_div;
  bool product_is_identity = false;
  bool verdict = false;
};

VerificationReport verify_realization(const LieAlgebra& L,
                                      const Realization& real,
                                      std::uint64_t seed = kDefaultVerifySeed);

/// Human rendering of reports, one finding per line.
std::string report_to_text(const LieAlgebra& L, const Realization& real,
                           const VerificationReport& report);
std::string report_to_text(const LieAlgebra& L, const FieldFamily& fam,
                           const BasicReport& report);

} // namespace liebasis

#endif
