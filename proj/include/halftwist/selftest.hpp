#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "halftwist/clifford.hpp"
#include "halftwist/hodge.hpp"

namespace halftwist {

// Uniform small rational, nonzero when requested.
Rat random_rational(std::mt19937_64& rng, long max_num = 20, long max_den = 8,
                    bool nonzero = false);

// A random table satisfying every structural invariant: r <= max_r,
// weight <= max_k, per-embedding dimension <= max_m.  Entries are mirrored
// across conjugation, so the table always validates; a slice of the tables
// is non-effective when allowed.
HodgeTable random_table(std::mt19937_64& rng, int max_r = 3, int max_k = 4,
                        long max_m = 6, bool allow_non_effective = true);

// A random weight-2 shaped form: d squarefree from a small list, d_1 < 0,
// d_2..d_m > 0.
QuadFormDiag random_form(std::mt19937_64& rng, int m);

struct SelfTestResult {
  int checks = 0;
  int failures = 0;
  std::string log;
};

// Seeded randomized property suite over the field, hodge, clifford and
// quat modules.  Prints per-group lines into the log.
SelfTestResult run_selftest(std::uint64_t seed);

}  // namespace halftwist
