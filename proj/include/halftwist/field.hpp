#pragma once

#include <vector>

#include "halftwist/rational.hpp"

namespace halftwist {

// A CM-field of degree 2r, seen only through its embedding combinatorics.
// Embeddings are indexed 1..2r with complex conjugation pairing j <-> j+r.
// No numerical embedding values are ever materialized.
struct CMFieldDescriptor {
  int half_degree = 1;  // r

  int degree() const { return 2 * half_degree; }
  int conj(int j) const;  // involution on 1..2r without fixed points
  bool valid() const { return half_degree >= 1; }
  bool operator==(const CMFieldDescriptor&) const = default;
};

// One embedding chosen from each conjugate pair.
class CMType {
 public:
  // `chosen` lists r indices, exactly one of {i, i+r} for each i.
  CMType(CMFieldDescriptor field, std::vector<int> chosen);

  // The type {1, ..., r}.
  static CMType standard(CMFieldDescriptor field);

  const CMFieldDescriptor& field() const { return field_; }
  // Chosen representatives ordered by pair index; entry i-1 is i or i+r.
  const std::vector<int>& chosen() const { return chosen_; }
  bool contains(int embedding) const;
  CMType complement() const;

  bool operator==(const CMType&) const = default;

 private:
  CMFieldDescriptor field_;
  std::vector<int> chosen_;
};

// An element a + b*sqrt(-d) of the imaginary quadratic field Q(sqrt(-d)).
// d is a positive squarefree tag; elements of different fields do not mix.
class QuadElem {
 public:
  QuadElem() : a_(0), b_(0), d_(1) {}
  QuadElem(Rat a, Rat b, long d);
  static QuadElem from_rational(const Rat& a, long d) {
    return QuadElem(a, 0, d);
  }
  static QuadElem sqrt_minus_d(long d) { return QuadElem(0, 1, d); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QuadElem conj() const { return QuadElem(a_, -b_, d_); }
  Rat norm() const { return a_ * a_ + d_ * b_ * b_; }
  QuadElem inverse() const;  // throws input_error on zero

  QuadElem operator-() const { return QuadElem(-a_, -b_, d_); }
  QuadElem& operator+=(const QuadElem& y);
  QuadElem& operator-=(const QuadElem& y);
  QuadElem& operator*=(const QuadElem& y);
  QuadElem& operator*=(const Rat& c);

  bool operator==(const QuadElem&) const = default;

 private:
  void check_same_field(const QuadElem& y) const;

  Rat a_, b_;
  long d_;
};

QuadElem operator+(QuadElem x, const QuadElem& y);
QuadElem operator-(QuadElem x, const QuadElem& y);
QuadElem quad_mul(QuadElem x, const QuadElem& y);
QuadElem operator*(QuadElem x, const QuadElem& y);
QuadElem operator*(QuadElem x, const Rat& c);
QuadElem operator*(const Rat& c, QuadElem x);

std::string quad_str(const QuadElem& x);

}  // namespace halftwist
