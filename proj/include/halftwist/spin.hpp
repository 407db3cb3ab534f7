#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halftwist/clifford.hpp"
#include "halftwist/linalg.hpp"

namespace halftwist {

// The hyperbolic K-basis f_1..f_{2m} built from the orthogonal e-basis:
//   f_i     = (1/(2 d d_i)) (sqrt(-d) e_i + e_{m+i}),
//   f_{m+i} = (1/2)        (-sqrt(-d) e_i + e_{m+i}),
// plus the top products f = f_{m+1}...f_{2m} and fbar = conj(f), and the
// scalar delta = (-1)^{m(m-1)/2} d^m prod d_i.  Every defining relation is
// re-verified by blade arithmetic at construction time.
struct FBasis {
  QuadFormDiag form;
  std::vector<CliffordElem> f;    // f[j-1] = f_j for 1 <= j <= 2m
  CliffordElem f_top;             // f
  CliffordElem f_top_conj;        // fbar
  CliffordElem plus;              // f + fbar, rational coefficients
  CliffordElem minus_root;        // sqrt(-d)(f - fbar), rational coefficients
  Rat delta;

  static FBasis build(const QuadFormDiag& form);
};

// Coordinates of a rational-coefficient element over the blade basis.
SparseVec clifford_to_vec(const CliffordElem& x);
CliffordElem clifford_from_vec(const QuadFormDiag& form, const SparseVec& v);

// S = C(V)(f+fbar) + C(V) sqrt(-d)(f-fbar), as a subspace of the rational
// blade space of dimension 2^{2m}.
SubspaceQ build_S(const FBasis& fb);

struct EndoOperators {
  MatrixQ alpha;  // right multiplication by f + fbar on S
  MatrixQ beta;   // right multiplication by sqrt(-d)(f - fbar) on S
  Rat alpha_sq;   // delta
  Rat beta_sq;    // d * delta
};

// Operator matrices in the row basis of S.  Verifies alpha^2 = delta Id,
// beta^2 = d delta Id and alpha beta = -beta alpha.
EndoOperators endo_operators(const FBasis& fb, const SubspaceQ& S);

// S_i = span over Q of { wf + conj(wf), sqrt(-d)(wf - conj(wf)) } with w
// running over the degree-i products of f_1..f_m.  Every generator is
// checked to lie in S.  dim S_i = 2 C(m, i).
std::vector<SubspaceQ> build_parts(const FBasis& fb, const SubspaceQ& S);

MatrixQ gram_matrix(const QuadFormDiag& form);
// J with J e_i = e_{m+i} and J e_{m+i} = -d e_i; J^2 = -d Id.
MatrixQ phi_matrix(const QuadFormDiag& form);

// Matrix of v -> xi v - v xi on V = span{e_1..e_{2m}}; xi must act within
// degree one.
MatrixQ adjoint_action_matrix(const CliffordElem& xi);

// A Q-basis of u(H) realized inside the even Clifford algebra: the span of
// the bivectors e_i e_j cut down by the exact condition that the adjoint
// action commute with phi.  Returns m^2 elements.
std::vector<CliffordElem> uH_generators(const QuadFormDiag& form);

struct PartClassification {
  int index = 0;              // i
  int dim = 0;                // dim S_i
  bool middle = false;        // 2i == m
  int commutant_dim = 0;      // 2 expected off the middle, 4 on it
  // commutant_dim == 2: minimal polynomial x^2 - c1 x - c0 of a non-scalar
  // commutant element.
  Rat minpoly_c1, minpoly_c0;
  bool commutant_is_field = false;
  bool field_is_K = false;
  // commutant_dim == 4: whether {Id, alpha, beta, alpha beta} restricted to
  // the part spans the commutant, and the Hilbert classification.
  bool quaternion_matches = false;
  bool split = false;
  std::optional<int> idempotent_image_dim;  // found in the split middle case
};

struct InvarianceFailure {
  int generator = 0;  // index into gens
  int part = 0;       // i
  std::string detail;
};

struct InvarianceReport {
  bool invariant = true;
  std::vector<InvarianceFailure> failures;
  std::vector<PartClassification> parts;
};

// Checks that every generator maps every part into itself, then computes
// the commutant of the action on each part and classifies it.
InvarianceReport check_invariance(const std::vector<CliffordElem>& gens,
                                  const FBasis& fb,
                                  const std::vector<SubspaceQ>& parts,
                                  long idempotent_bound = 128);

}  // namespace halftwist
