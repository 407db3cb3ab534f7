#pragma once

#include <stdexcept>
#include <string>

namespace halftwist {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: unreadable file, malformed rational, invalid table or form.
struct input_error : error {
  using error::error;
};

// Mixing elements of Q(sqrt(-d)) and Q(sqrt(-d')) with d != d'.
struct field_mismatch_error : error {
  using error::error;
};

// Positive half twist requested while the CM-type side still carries a (0,k)
// eigenspace.  Carries the first offending embedding index.
struct admissibility_error : error {
  int embedding;
  admissibility_error(const std::string& msg, int emb)
      : error(msg), embedding(emb) {}
};

// An identity the construction guarantees failed to hold.  Indicates an
// arithmetic bug, never bad input.
struct consistency_error : error {
  using error::error;
};

// Degenerate form where a signature was required.  Carries the radical
// dimension found during diagonalization.
struct singular_error : error {
  int radical_dim;
  singular_error(const std::string& msg, int rad)
      : error(msg), radical_dim(rad) {}
};

}  // namespace halftwist
