#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "halftwist/field.hpp"

namespace halftwist {

// The diagonal quadratic form psi(x,x) = sum_i d_i x_i^2 + d sum_i d_i
// x_{m+i}^2 on 2m generators e_1..e_{2m}.
struct QuadFormDiag {
  long d = 1;
  std::vector<Rat> diag;  // d_1..d_m, all nonzero

  QuadFormDiag(long d_tag, std::vector<Rat> diag_entries);

  int m() const { return static_cast<int>(diag.size()); }
  int gen_count() const { return 2 * m(); }
  Rat gen_square(int g) const;  // e_g^2, generators numbered 1..2m
  Rat diag_product() const;     // prod d_i
  bool weight2_shape() const;    // d_1 < 0 and d_2..d_m > 0

  bool operator==(const QuadFormDiag&) const = default;
};

// Basis blade as a bitmask over the 2m generators; bit g-1 set iff e_g is a
// factor.  The empty mask is the scalar blade.
using Blade = std::uint32_t;

enum class CoeffRing { rational, quadratic };

// Sparse Clifford algebra element: canonical ascending-index blades mapped
// to coefficients in Q or Q(sqrt(-d)).  No zero coefficients are stored.
class CliffordElem {
 public:
  CliffordElem(QuadFormDiag form, CoeffRing ring)
      : form_(std::move(form)), ring_(ring) {}

  static CliffordElem scalar(const QuadFormDiag& form, const QuadElem& c);
  static CliffordElem scalar(const QuadFormDiag& form, const Rat& c);
  static CliffordElem blade_elem(const QuadFormDiag& form, Blade b,
                                 const QuadElem& c);
  static CliffordElem blade_elem(const QuadFormDiag& form, Blade b,
                                 const Rat& c);
  static CliffordElem generator(const QuadFormDiag& form, int g);

  const QuadFormDiag& form() const { return form_; }
  CoeffRing ring() const { return ring_; }
  const std::map<Blade, QuadElem>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  QuadElem coeff(Blade b) const;
  // True iff every coefficient is rational (regardless of the ring tag).
  bool rational_coeffs() const;

  void add_term(Blade b, const QuadElem& c);

  // Equality is form plus terms; the ring tag is bookkeeping.
  bool operator==(const CliffordElem& y) const {
    return form_ == y.form_ && terms_ == y.terms_;
  }

 private:
  QuadFormDiag form_;
  CoeffRing ring_;
  std::map<Blade, QuadElem> terms_;
};

CliffordElem operator+(const CliffordElem& x, const CliffordElem& y);
CliffordElem operator-(const CliffordElem& x, const CliffordElem& y);
CliffordElem operator-(const CliffordElem& x);
CliffordElem operator*(const CliffordElem& x, const Rat& c);
CliffordElem operator*(const Rat& c, const CliffordElem& x);
CliffordElem operator*(const QuadElem& c, const CliffordElem& x);

// Associative product with e_i e_j = -e_j e_i (i != j) and e_g^2 = psi(e_g).
CliffordElem clifford_mul(const CliffordElem& x, const CliffordElem& y);
inline CliffordElem operator*(const CliffordElem& x, const CliffordElem& y) {
  return clifford_mul(x, y);
}

// Applies Q(sqrt(-d)) conjugation to every coefficient.
CliffordElem conj_coeffs(const CliffordElem& x);

struct CenterInfo {
  CliffordElem z;       // e_1 e_2 ... e_{2m}
  Rat z_squared;        // verified equal to (-1)^m d^m prod d_i^2
  bool split;           // z^2 a nonzero square: center of C+ is Q x Q
};

// The non-scalar center generator of the even part, with its square
// computed by blade multiplication and checked against the closed form.
CenterInfo center_element(const QuadFormDiag& form);

std::string clifford_str(const CliffordElem& x);

}  // namespace halftwist
