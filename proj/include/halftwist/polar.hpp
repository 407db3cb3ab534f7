#pragma once

#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "halftwist/clifford.hpp"
#include "halftwist/linalg.hpp"

namespace halftwist {

// Weight-2 polarized setup over Q(sqrt(-d)): the Gram matrix of psi on a
// rational basis in which the K-action is the standard matrix J with
// J e_i = e_{m+i}, J e_{m+i} = -d e_i.  Construction enforces symmetry and
// the compatibility tJ G = -G J.
class PolarizedSetup {
 public:
  PolarizedSetup(long d, MatrixQ gram);

  // Gram = diag(d_1..d_m, d d_1..d d_m).
  static PolarizedSetup diagonal(const QuadFormDiag& form);

  // Congruence transport by the K-linear map P = [[A, -dB], [B, A]]; P must
  // be invertible.  J is unchanged since P commutes with it.
  PolarizedSetup transported(const MatrixQ& a, const MatrixQ& b) const;

  long d() const { return d_; }
  int m() const { return m_; }
  const MatrixQ& gram() const { return gram_; }
  MatrixQ phi() const;  // J

 private:
  long d_;
  int m_;
  MatrixQ gram_;
};

// H(v, w) = psi(v, w) + phi^{-1} psi(v, phi w) on the K-basis e_1..e_m.
// Hermitian by construction; verified.
MatrixK hermitian_form(const PolarizedSetup& s);

// Signature of H; (m-1, 1) for every weight-2 shaped form.
std::pair<int, int> signature_H(const PolarizedSetup& s);

// Matrix G J of the pairing Psi'(v, w) = psi(v, phi w); exactly
// skew-symmetric and K-compatible (verified).
MatrixQ twisted_polarization(const PolarizedSetup& s);

using Cplx = std::complex<double>;

struct PeriodVector {
  std::vector<Cplx> v;
};

// e_1 + (i/sqrt(d)) e_{m+1}: an isotropic phi-eigen line with
// psi(v, conj v) = 2 d_1 < 0 for the diagonal setup.
PeriodVector explicit_period(const PolarizedSetup& s);

// Moves the period by exp(t X) for a random X in u(H)(R) of the diagonal
// setup; the eigen/isotropy preconditions are preserved.
PeriodVector transport_period(const PolarizedSetup& s, const PeriodVector& v,
                              std::mt19937_64& rng);

struct PositivityResult {
  bool pass = false;
  double min_eigenvalue_weight2 = 0;   // of Psi(., h(i) .)
  double min_eigenvalue_halftwist = 0; // of Psi'(., h'(i) .)
  double max_residual = 0;             // symmetry and equivariance residuals
};

// Builds h(i) from the Hodge decomposition the period defines, checks that
// Psi(., h(i) .) and the half-twisted pairing Psi'(., h'(i) .) are
// symmetric positive definite, and spot-checks unit-circle equivariance.
// Throws input_error when the period violates its preconditions by more
// than tol.
PositivityResult positivity_oracle(const PolarizedSetup& s,
                                   const PeriodVector& period,
                                   double tol = 1e-9);

}  // namespace halftwist
