#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halftwist/rational.hpp"

namespace halftwist {

// The quaternion algebra (a, b) over Q: i^2 = a, j^2 = b, ij = -ji.
struct QuatAlg {
  Rat a;
  Rat b;
  QuatAlg(Rat a_val, Rat b_val);  // throws input_error when either is zero
};

struct Place {
  bool infinite = false;
  Int p = 0;  // 2 or an odd prime when finite

  static Place infinity() { return {true, 0}; }
  static Place prime(Int prime);  // validates primality

  bool operator==(const Place&) const = default;
  std::string str() const;
};

// The local Hilbert symbol (a, b)_v in {+1, -1}.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Infinity, 2, and the odd primes dividing a or b (as square classes).
// Symbols at every other place are +1.
std::vector<Place> relevant_places(const Rat& a, const Rat& b);

// Product of the symbols over the relevant places; +1 by reciprocity.
int symbol_product(const Rat& a, const Rat& b);

// Split iff the symbol is +1 at every place.
bool is_split(const QuatAlg& alg);

// Same symbol at every place in the union of both relevant sets, i.e. the
// two algebras are isomorphic.
bool same_symbol_vector(const QuatAlg& x, const QuatAlg& y);

// Bounded search for x^2 + d y^2 = n over x = p/s, y = q/s with
// |p|, |q|, s <= bound.  A witness certifies that (-d, n) splits; absence
// of one is inconclusive.
std::optional<std::pair<Rat, Rat>> norm_eq_search(const Rat& n, long d,
                                                  long bound);

// Distinct prime factors of |n|, ascending.  n must be nonzero.
std::vector<Int> prime_factors(Int n);

}  // namespace halftwist
