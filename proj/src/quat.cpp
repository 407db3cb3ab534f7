#include "halftwist/quat.hpp"

#include <algorithm>
#include <set>

#include "halftwist/errors.hpp"

namespace halftwist {

QuatAlg::QuatAlg(Rat a_val, Rat b_val)
    : a(std::move(a_val)), b(std::move(b_val)) {
  if (a == 0 || b == 0)
    throw input_error("quaternion algebra needs nonzero structure constants");
}

Place Place::prime(Int prime) {
  if (prime < 2 || mpz_probab_prime_p(prime.get_mpz_t(), 40) == 0)
    throw input_error("place must be a prime or infinity");
  return {false, std::move(prime)};
}

std::string Place::str() const {
  return infinite ? "infinity" : p.get_str();
}

namespace {

// Square-class representative of a nonzero rational as an integer.
Int square_class_int(const Rat& a) { return a.get_num() * a.get_den(); }

// n = p^k * u with p not dividing u; returns k and leaves u in n.
unsigned long split_valuation(Int& n, const Int& p) {
  unsigned long k = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++k;
  }
  return k;
}

int legendre(const Int& u, const Int& p) {
  return mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
}

// (u-1)/2 mod 2 for odd u.
int eps2(const Int& u) {
  Int r = u % 4;
  if (r < 0) r += 4;
  return r == 3 ? 1 : 0;
}

// (u^2-1)/8 mod 2 for odd u.
int omega2(const Int& u) {
  Int r = u % 8;
  if (r < 0) r += 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

int hilbert_infinity(const Rat& a, const Rat& b) {
  return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
}

int hilbert_odd(const Rat& a, const Rat& b, const Int& p) {
  Int u = square_class_int(a);
  Int v = square_class_int(b);
  unsigned long alpha = split_valuation(u, p) & 1;
  unsigned long beta = split_valuation(v, p) & 1;
  int exponent = 0;
  if (alpha && beta) exponent += eps2(p);
  if (beta && legendre(u, p) < 0) exponent += 1;
  if (alpha && legendre(v, p) < 0) exponent += 1;
  return (exponent & 1) ? -1 : 1;
}

int hilbert_two(const Rat& a, const Rat& b) {
  Int u = square_class_int(a);
  Int v = square_class_int(b);
  Int two = 2;
  unsigned long alpha = split_valuation(u, two) & 1;
  unsigned long beta = split_valuation(v, two) & 1;
  int exponent = eps2(u) * eps2(v);
  if (alpha) exponent += omega2(v);
  if (beta) exponent += omega2(u);
  return (exponent & 1) ? -1 : 1;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0)
    throw input_error("Hilbert symbol requires nonzero arguments");
  if (v.infinite) return hilbert_infinity(a, b);
  if (v.p == 2) return hilbert_two(a, b);
  if (v.p < 2 || mpz_probab_prime_p(v.p.get_mpz_t(), 40) == 0)
    throw input_error("place must be a prime or infinity");
  return hilbert_odd(a, b, v.p);
}

std::vector<Place> relevant_places(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0)
    throw input_error("Hilbert symbol requires nonzero arguments");
  std::set<Int> odd;
  for (const Rat* x : {&a, &b}) {
    for (const Int& p : prime_factors(square_class_int(*x)))
      if (p != 2) odd.insert(p);
  }
  std::vector<Place> places;
  places.push_back(Place::infinity());
  places.push_back(Place{false, 2});
  for (const Int& p : odd) places.push_back(Place{false, p});
  return places;
}

int symbol_product(const Rat& a, const Rat& b) {
  int prod = 1;
  for (const Place& v : relevant_places(a, b)) prod *= hilbert_symbol(a, b, v);
  return prod;
}

bool is_split(const QuatAlg& alg) {
  for (const Place& v : relevant_places(alg.a, alg.b))
    if (hilbert_symbol(alg.a, alg.b, v) != 1) return false;
  return true;
}

bool same_symbol_vector(const QuatAlg& x, const QuatAlg& y) {
  std::vector<Place> places = relevant_places(x.a, x.b);
  for (const Place& v : relevant_places(y.a, y.b))
    if (std::find(places.begin(), places.end(), v) == places.end())
      places.push_back(v);
  for (const Place& v : places)
    if (hilbert_symbol(x.a, x.b, v) != hilbert_symbol(y.a, y.b, v))
      return false;
  return true;
}

std::optional<std::pair<Rat, Rat>> norm_eq_search(const Rat& n, long d,
                                                  long bound) {
  if (n == 0) throw input_error("norm equation right side must be nonzero");
  if (d < 1) throw input_error("norm form needs d >= 1");
  if (bound < 1) throw input_error("search bound must be >= 1");
  if (sgn(n) < 0) return std::nullopt;
  for (long s = 1; s <= bound; ++s) {
    Rat target = n * Rat(s) * Rat(s);
    if (target.get_den() != 1) continue;
    Int t = target.get_num();
    for (long q = 0; q <= bound; ++q) {
      Int rem = t - Int(d) * q * q;
      if (rem < 0) break;
      if (!is_perfect_square(rem)) continue;
      Int x = sqrt(rem);
      if (x > bound) continue;
      Rat xr(x), yr(q);
      return std::make_pair(Rat(xr / s), Rat(yr / s));
    }
  }
  return std::nullopt;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's variant; n odd composite.
  Int x = 2, y = 2, c = 1, g = 1;
  for (;;) {
    x = 2;
    y = 2;
    g = 1;
    Int d_acc = 1;
    int steps = 0;
    while (g == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d_acc = (d_acc * diff) % n;
      if (++steps % 64 == 0) {
        mpz_gcd(g.get_mpz_t(), d_acc.get_mpz_t(), n.get_mpz_t());
        if (g != 1) break;
      }
    }
    if (g == 1) {
      mpz_gcd(g.get_mpz_t(), d_acc.get_mpz_t(), n.get_mpz_t());
    }
    if (g != 1 && g != n) return g;
    c += 1;
  }
}

void factor_into(Int n, std::set<Int>& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out.insert(n);
    return;
  }
  Int g = pollard_rho(n);
  factor_into(g, out);
  factor_into(n / g, out);
}

}  // namespace

std::vector<Int> prime_factors(Int n) {
  if (n == 0) throw input_error("cannot factor zero");
  if (n < 0) n = -n;
  std::set<Int> found;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    if (split_valuation(n, Int(p)) > 0) found.insert(Int(p));
  }
  for (long p = 17; p <= 1000000 && n > 1; p += 2) {
    if (Int(p) * p > n) break;
    if (n % p == 0) {
      found.insert(Int(p));
      split_valuation(n, Int(p));
    }
  }
  factor_into(n, found);
  return {found.begin(), found.end()};
}

}  // namespace halftwist
