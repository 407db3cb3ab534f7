#include "halftwist/linalg.hpp"

#include <algorithm>

#include "halftwist/errors.hpp"

namespace halftwist {

std::optional<Rat> sparse_at(const SparseVec& v, int index) {
  auto it = std::lower_bound(
      v.begin(), v.end(), index,
      [](const std::pair<int, Rat>& e, int idx) { return e.first < idx; });
  if (it == v.end() || it->first != index) return std::nullopt;
  return it->second;
}

void sparse_submul(SparseVec& v, const Rat& c, const SparseVec& w) {
  if (c == 0 || w.empty()) return;
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(std::move(v[i++]));
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -c * w[j].second);
      ++j;
    } else {
      Rat val = v[i].second - c * w[j].second;
      if (val != 0) out.emplace_back(v[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

SparseVec sparse_from_dense(const std::vector<Rat>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

void SubspaceQ::check_dim(const SparseVec& v) const {
  if (!v.empty() && (v.front().first < 0 || v.back().first >= ambient_))
    throw input_error("vector index out of ambient range");
}

SparseVec SubspaceQ::reduce(SparseVec v) const {
  check_dim(v);
  // Rows are echelon with ascending pivots and entries only at or after the
  // pivot, so one forward pass suffices.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (auto c = sparse_at(v, pivots_[r])) sparse_submul(v, *c, rows_[r]);
  }
  return v;
}

bool SubspaceQ::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rat lead = v.front().second;
  if (lead != 1)
    for (auto& [idx, c] : v) c /= lead;
  int pivot = v.front().first;
  for (auto& row : rows_) {
    if (auto c = sparse_at(row, pivot)) sparse_submul(row, *c, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool SubspaceQ::member(const SparseVec& v) const { return reduce(v).empty(); }

std::optional<std::vector<Rat>> SubspaceQ::coordinates(
    const SparseVec& v) const {
  check_dim(v);
  std::vector<Rat> coords(rows_.size(), Rat(0));
  SparseVec rest = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (auto c = sparse_at(rest, pivots_[r])) {
      coords[r] = *c;
      sparse_submul(rest, *c, rows_[r]);
    }
  }
  if (!rest.empty()) return std::nullopt;
  return coords;
}

int sum_rank(const std::vector<const SubspaceQ*>& parts) {
  if (parts.empty()) return 0;
  SubspaceQ acc(parts.front()->ambient());
  for (const SubspaceQ* p : parts)
    for (const SparseVec& row : p->rows()) acc.insert(row);
  return acc.rank();
}

int intersection_dim(const SubspaceQ& a, const SubspaceQ& b) {
  return a.rank() + b.rank() - sum_rank({&a, &b});
}

MatrixQ MatrixQ::identity(int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

static void check_same_shape(const MatrixQ& x, const MatrixQ& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw input_error("matrix shape mismatch");
}

MatrixQ operator+(const MatrixQ& x, const MatrixQ& y) {
  check_same_shape(x, y);
  MatrixQ out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) + y.at(i, j);
  return out;
}

MatrixQ operator-(const MatrixQ& x, const MatrixQ& y) {
  check_same_shape(x, y);
  MatrixQ out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) - y.at(i, j);
  return out;
}

MatrixQ operator*(const MatrixQ& x, const MatrixQ& y) {
  if (x.cols() != y.rows()) throw input_error("matrix shape mismatch");
  MatrixQ out(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const Rat& c = x.at(i, k);
      if (c == 0) continue;
      for (int j = 0; j < y.cols(); ++j) out.at(i, j) += c * y.at(k, j);
    }
  return out;
}

MatrixQ operator*(const Rat& c, const MatrixQ& x) {
  MatrixQ out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out.at(i, j) = c * x.at(i, j);
  return out;
}

bool is_zero(const MatrixQ& x) {
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (x.at(i, j) != 0) return false;
  return true;
}

std::pair<MatrixQ, int> rref(MatrixQ m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return {std::move(m), r};
}

int rank(const MatrixQ& m) { return rref(m).second; }

std::vector<std::vector<Rat>> kernel_basis(const MatrixQ& m) {
  auto [r, rk] = rref(m);
  int n = m.cols();
  std::vector<int> pivot_col(rk);
  std::vector<bool> is_pivot(n, false);
  for (int i = 0, c = 0; i < rk; ++i) {
    while (c < n && r.at(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(n, Rat(0));
    x[f] = 1;
    for (int i = 0; i < rk; ++i) x[pivot_col[i]] = -r.at(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

MatrixK operator*(const MatrixK& x, const MatrixK& y) {
  if (x.cols() != y.rows() || x.d() != y.d())
    throw input_error("matrix shape or field mismatch");
  MatrixK out(x.rows(), y.cols(), x.d());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const QuadElem& c = x.at(i, k);
      if (c.is_zero()) continue;
      for (int j = 0; j < y.cols(); ++j) out.at(i, j) += c * y.at(k, j);
    }
  return out;
}

MatrixK conj_transpose(const MatrixK& m) {
  MatrixK t(m.cols(), m.rows(), m.d());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j).conj();
  return t;
}

bool is_hermitian(const MatrixK& m) {
  return m.rows() == m.cols() && conj_transpose(m) == m;
}

namespace {

// Basis change v_k <- v_k + lambda * v_i on a hermitian Gram matrix:
// row k += conj(lambda) * row i, then column k += lambda * column i.
void herm_add(MatrixK& h, int k, int i, const QuadElem& lambda) {
  int n = h.rows();
  QuadElem lbar = lambda.conj();
  for (int j = 0; j < n; ++j) h.at(k, j) += lbar * h.at(i, j);
  for (int j = 0; j < n; ++j) h.at(j, k) += lambda * h.at(j, i);
}

void herm_swap(MatrixK& h, int k, int i) {
  int n = h.rows();
  for (int j = 0; j < n; ++j) std::swap(h.at(k, j), h.at(i, j));
  for (int j = 0; j < n; ++j) std::swap(h.at(j, k), h.at(j, i));
}

}  // namespace

HermitianDiagonal hermitian_inertia(MatrixK h) {
  if (!is_hermitian(h))
    throw input_error("hermitian_inertia requires a hermitian matrix");
  int n = h.rows();
  HermitianDiagonal out;
  for (int k = 0; k < n; ++k) {
    if (h.at(k, k).is_zero()) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i)
        if (!h.at(i, i).is_zero()) {
          swap_with = i;
          break;
        }
      if (swap_with >= 0) {
        herm_swap(h, k, swap_with);
      } else {
        // All remaining diagonal entries vanish; complete a square from an
        // off-diagonal entry if one exists.
        int off = -1;
        for (int i = k + 1; i < n; ++i)
          if (!h.at(k, i).is_zero()) {
            off = i;
            break;
          }
        if (off < 0) {
          ++out.radical;
          continue;
        }
        herm_add(h, k, off, h.at(k, off).conj());
      }
    }
    if (!h.at(k, k).is_rational())
      throw consistency_error("hermitian diagonal entry not rational");
    Rat pivot = h.at(k, k).a();
    Rat pivot_inv = 1 / pivot;
    for (int i = 0; i < n; ++i) {
      if (i == k || h.at(i, k).is_zero()) continue;
      // lambda = -conj(H[i][k]) / H[k][k] zeroes H(v_i + lambda v_k, v_k).
      QuadElem lambda = -(h.at(i, k).conj()) * pivot_inv;
      herm_add(h, i, k, lambda);
    }
    if (sgn(pivot) > 0)
      ++out.pos;
    else
      ++out.neg;
  }
  return out;
}

std::pair<int, int> signature_hermitian(const MatrixK& h) {
  HermitianDiagonal d = hermitian_inertia(h);
  if (d.radical > 0)
    throw singular_error("degenerate hermitian form, radical dimension " +
                             std::to_string(d.radical),
                         d.radical);
  return {d.pos, d.neg};
}

}  // namespace halftwist
