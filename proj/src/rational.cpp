#include "halftwist/rational.hpp"

#include <cassert>
#include <cctype>

#include "halftwist/errors.hpp"

namespace halftwist {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (s[i] == '-' || s[i] == '+') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw input_error("malformed rational '" + s + "'");
  if (num_end == s.size()) {
    Rat r(s, 10);
    r.canonicalize();
    return r;
  }
  if (s[num_end] != '/') throw input_error("malformed rational '" + s + "'");
  std::size_t den_begin = num_end + 1;
  std::size_t den_end = digits(den_begin);
  if (den_end == den_begin || den_end != s.size())
    throw input_error("malformed rational '" + s + "'");
  Rat r(s, 10);
  if (r.get_den() == 0) throw input_error("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_perfect_square(const Int& n) {
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rat& r) {
  if (sgn(r) < 0) return false;
  return is_perfect_square(r.get_num()) && is_perfect_square(r.get_den());
}

Int int_binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

long binomial_long(long n, long k) {
  Int b = int_binomial(n, k);
  assert(b.fits_slong_p());
  return b.get_si();
}

Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat out = 1;
  Rat b = base;
  unsigned long k = e;
  while (k) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

bool is_squarefree(long d) {
  if (d < 1) return false;
  long n = d;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

}  // namespace halftwist
