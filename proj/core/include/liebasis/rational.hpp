#ifndef LIEBASIS_RATIONAL_HPP
#define LIEBASIS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace liebasis {

/// Exact rational scalar.  Values are kept canonical (lowest terms, positive
/// denominator, zero stored as 0/1) by GMP; helpers below preserve that.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" in base 10.  Throws Error(Parse) on malformed
/// input or a zero denominator; the result is canonicalized.
Rational rational_from_string(const std::string& text);

/// Renders in lowest terms, "p/q" with the "/q" omitted when q = 1.
std::string rational_to_string(const Rational& value);

/// 1/k! as an exact rational.
Rational factorial_reciprocal(unsigned long k);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// Deterministic pseudo-random stream of small rationals, used wherever the
/// engine needs reproducible sample points.  Implemented directly on the raw
/// xorshift output so results do not depend on the standard library's
/// distribution internals.
class SmallRationalStream {
public:
  explicit SmallRationalStream(std::uint64_t seed);

  /// Uniform-ish integer in [lo, hi] as a Rational.
  Rational next_integer(int lo, int hi);

  /// Raw 64-bit word.
  std::uint64_t next_word();

private:
  std::uint64_t state_;
};

} // namespace liebasis

#endif
