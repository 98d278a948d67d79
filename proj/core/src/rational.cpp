#include "liebasis/rational.hpp"

#include "liebasis/errors.hpp"

namespace liebasis {

Rational rational_from_string(const std::string& text) {
  if (text.empty())
    fail(ErrorKind::Parse, "empty rational literal");
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    fail(ErrorKind::Parse, "malformed rational literal '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    fail(ErrorKind::Parse, "zero denominator in rational literal '" + text + "'");
  }
  mpq_canonicalize(raw);
  Rational value(raw);
  mpq_clear(raw);
  return value;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str(10);
}

Rational factorial_reciprocal(unsigned long k) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  return Rational(1) / Rational(fact);
}

SmallRationalStream::SmallRationalStream(std::uint64_t seed)
    : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

std::uint64_t SmallRationalStream::next_word() {
  // xorshift64*; fixed here so streams replay identically on any platform.
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545f4914f6cdd1dULL;
}

Rational SmallRationalStream::next_integer(int lo, int hi) {
  if (hi < lo)
    fail(ErrorKind::Structural, "empty integer range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return Rational(lo + static_cast<long>(next_word() % span));
}

} // namespace liebasis
