#pragma once

#include <gmpxx.h>

#include <string>

namespace halftwist {

using Rat = mpq_class;
using Int = mpz_class;

// Canonicalized num/den rational.  mpq_class(n, d) alone does not reduce.
inline Rat ratio(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline int sign_of(const Rat& r) { return sgn(r); }

// Parses "p" or "p/q" with optional leading '-'.  Throws input_error.
Rat parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rat& r);

bool is_perfect_square(const Int& n);

// True iff r is a square in Q (r >= 0 and numerator and denominator are
// integer squares after canonicalization).
bool is_square(const Rat& r);

Int int_binomial(long n, long k);

// Binomial coefficient small enough for a long; asserts at desk scale.
long binomial_long(long n, long k);

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, unsigned long e);

// d >= 1 with no repeated prime factor.  Trial division, desk scale.
bool is_squarefree(long d);

}  // namespace halftwist
