#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "halftwist/field.hpp"
#include "halftwist/rational.hpp"

namespace halftwist {

// Sparse rational vector: (index, coefficient) pairs, ascending indices,
// no stored zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

std::optional<Rat> sparse_at(const SparseVec& v, int index);
// v -= c*w, keeping the representation canonical.
void sparse_submul(SparseVec& v, const Rat& c, const SparseVec& w);
SparseVec sparse_from_dense(const std::vector<Rat>& v);

// Exact Q-subspace of Q^N held as a reduced echelon row basis.  Rows are
// scaled to leading coefficient 1 and kept back-reduced, so the basis is
// canonical for the subspace.
class SubspaceQ {
 public:
  explicit SubspaceQ(int ambient) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }

  bool insert(SparseVec v);  // true iff the rank grew
  SparseVec reduce(SparseVec v) const;
  bool member(const SparseVec& v) const;
  // Coefficients of v over rows(), or nullopt if v lies outside the span.
  std::optional<std::vector<Rat>> coordinates(const SparseVec& v) const;

 private:
  void check_dim(const SparseVec& v) const;

  int ambient_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;
};

// dim(sum of the given subspaces), by stacking all bases.
int sum_rank(const std::vector<const SubspaceQ*>& parts);
// dim(a ∩ b) = dim a + dim b - dim(a+b).
int intersection_dim(const SubspaceQ& a, const SubspaceQ& b);

class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static MatrixQ identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  MatrixQ transpose() const;
  bool operator==(const MatrixQ&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

MatrixQ operator+(const MatrixQ& x, const MatrixQ& y);
MatrixQ operator-(const MatrixQ& x, const MatrixQ& y);
MatrixQ operator*(const MatrixQ& x, const MatrixQ& y);
MatrixQ operator*(const Rat& c, const MatrixQ& x);
bool is_zero(const MatrixQ& x);

// Reduced row echelon form and rank, exact.
std::pair<MatrixQ, int> rref(MatrixQ m);
int rank(const MatrixQ& m);
// Basis of the right kernel {x : m x = 0}, as dense vectors.
std::vector<std::vector<Rat>> kernel_basis(const MatrixQ& m);

class MatrixK {
 public:
  MatrixK() = default;
  MatrixK(int rows, int cols, long d)
      : rows_(rows), cols_(cols), d_(d), a_(rows * cols, QuadElem(0, 0, d)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long d() const { return d_; }
  QuadElem& at(int i, int j) { return a_[i * cols_ + j]; }
  const QuadElem& at(int i, int j) const { return a_[i * cols_ + j]; }

  bool operator==(const MatrixK&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  long d_ = 1;
  std::vector<QuadElem> a_;
};

MatrixK operator*(const MatrixK& x, const MatrixK& y);
MatrixK conj_transpose(const MatrixK& m);
bool is_hermitian(const MatrixK& m);

struct HermitianDiagonal {
  int pos = 0, neg = 0, radical = 0;
};

// Congruence-diagonalizes a hermitian matrix over Q(sqrt(-d)) and counts
// the signs of the (rational) diagonal.  Throws input_error on a
// non-hermitian or non-square input.
HermitianDiagonal hermitian_inertia(MatrixK h);

// (pos, neg); throws singular_error when the form is degenerate.
std::pair<int, int> signature_hermitian(const MatrixK& h);

}  // namespace halftwist
