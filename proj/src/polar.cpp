#include "halftwist/polar.hpp"

#include <algorithm>
#include <cmath>

#include "halftwist/errors.hpp"
#include "halftwist/spin.hpp"

namespace halftwist {

PolarizedSetup::PolarizedSetup(long d, MatrixQ gram) : d_(d), gram_(std::move(gram)) {
  if (!is_squarefree(d_))
    throw input_error("field tag d must be a positive squarefree integer");
  if (gram_.rows() != gram_.cols() || gram_.rows() % 2 != 0 || gram_.rows() == 0)
    throw input_error("Gram matrix must be 2m x 2m");
  m_ = gram_.rows() / 2;
  if (!(gram_.transpose() == gram_)) throw input_error("Gram matrix not symmetric");
  MatrixQ j = phi();
  if (!is_zero(j.transpose() * gram_ + gram_ * j))
    throw input_error("Gram matrix not K-compatible: tJ G != -G J");
}

PolarizedSetup PolarizedSetup::diagonal(const QuadFormDiag& form) {
  return PolarizedSetup(form.d, gram_matrix(form));
}

PolarizedSetup PolarizedSetup::transported(const MatrixQ& a, const MatrixQ& b) const {
  if (a.rows() != m_ || a.cols() != m_ || b.rows() != m_ || b.cols() != m_)
    throw input_error("transport blocks must be m x m");
  MatrixQ p(2 * m_, 2 * m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      p.at(i, j) = a.at(i, j);
      p.at(i, m_ + j) = -Rat(d_) * b.at(i, j);
      p.at(m_ + i, j) = b.at(i, j);
      p.at(m_ + i, m_ + j) = a.at(i, j);
    }
  if (rank(p) != 2 * m_) throw input_error("transport matrix is singular");
  return PolarizedSetup(d_, p.transpose() * gram_ * p);
}

MatrixQ PolarizedSetup::phi() const {
  MatrixQ j(2 * m_, 2 * m_);
  for (int i = 0; i < m_; ++i) {
    j.at(m_ + i, i) = 1;
    j.at(i, m_ + i) = -Rat(d_);
  }
  return j;
}

MatrixK hermitian_form(const PolarizedSetup& s) {
  int m = s.m();
  MatrixQ gj = s.gram() * s.phi();
  MatrixK h(m, m, s.d());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      h.at(i, j) = QuadElem(s.gram().at(i, j), -gj.at(i, j) / s.d(), s.d());
  if (!is_hermitian(h))
    throw consistency_error("H is not hermitian; setup invariants violated");
  return h;
}

std::pair<int, int> signature_H(const PolarizedSetup& s) {
  return signature_hermitian(hermitian_form(s));
}

MatrixQ twisted_polarization(const PolarizedSetup& s) {
  MatrixQ gj = s.gram() * s.phi();
  if (!(gj.transpose() == Rat(-1) * gj))
    throw consistency_error("twisted pairing is not alternating");
  // Psi'(phi v, w) = -Psi'(v, phi w), i.e. tJ (GJ) = -(GJ) J.
  if (!is_zero(s.phi().transpose() * gj + gj * s.phi()))
    throw consistency_error("twisted pairing is not K-compatible");
  return gj;
}

namespace {

using CVec = std::vector<Cplx>;
using DMat = std::vector<double>;  // row-major n x n

DMat to_double(const MatrixQ& m) {
  DMat out(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out[i * m.cols() + j] = m.at(i, j).get_d();
  return out;
}

CVec mat_vec(const DMat& m, const CVec& v) {
  int n = static_cast<int>(v.size());
  CVec out(n, Cplx(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i * n + j] * v[j];
  return out;
}

Cplx bilinear(const DMat& g, const CVec& x, const CVec& y) {
  int n = static_cast<int>(x.size());
  Cplx acc(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc += x[i] * g[i * n + j] * y[j];
  return acc;
}

CVec conj_vec(const CVec& v) {
  CVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::conj(v[i]);
  return out;
}

double inf_norm(const DMat& m) {
  double s = 0;
  for (double x : m) s = std::max(s, std::abs(x));
  return s;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(DMat a, int n) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p * n + q]));
    if (off < 1e-15 * (1 + inf_norm(a))) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (std::abs(apq) < 1e-18) continue;
        double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
  return eig;
}

struct OracleFrame {
  int n;
  DMat g, j, gj;
  CVec v, vbar;
  Cplx psi_v_vbar;
};

// Complex matrix of h(z) = z^2 P_{2,0} + zbar^2 P_{0,2} + |z|^2 P_{1,1}.
std::vector<CVec> h_of_z(const OracleFrame& f, Cplx z) {
  Cplx z2 = z * z;
  Cplx zb2 = std::conj(z) * std::conj(z);
  Cplx zz = z * std::conj(z);
  std::vector<CVec> cols(f.n, CVec(f.n, Cplx(0)));
  for (int k = 0; k < f.n; ++k) {
    CVec ek(f.n, Cplx(0));
    ek[k] = 1;
    Cplx c20 = bilinear(f.g, ek, f.vbar) / f.psi_v_vbar;
    Cplx c02 = bilinear(f.g, ek, f.v) / std::conj(f.psi_v_vbar);
    for (int i = 0; i < f.n; ++i) {
      Cplx p20 = c20 * f.v[i];
      Cplx p02 = c02 * f.vbar[i];
      Cplx p11 = (i == k ? Cplx(1) : Cplx(0)) - p20 - p02;
      cols[k][i] = z2 * p20 + zb2 * p02 + zz * p11;
    }
  }
  return cols;
}

// Real part of a column-major complex matrix; tracks the imaginary residue.
DMat realize(const std::vector<CVec>& cols, double scale, double& residual) {
  int n = static_cast<int>(cols.size());
  DMat out(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(cols[k][i].imag()) / scale);
      out[i * n + k] = cols[k][i].real();
    }
  return out;
}

DMat mat_mul(const DMat& x, const DMat& y, int n) {
  DMat out(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double c = x[i * n + k];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j) out[i * n + j] += c * y[k * n + j];
    }
  return out;
}

}  // namespace

PeriodVector explicit_period(const PolarizedSetup& s) {
  int n = 2 * s.m();
  PeriodVector p;
  p.v.assign(n, Cplx(0));
  p.v[0] = 1;
  p.v[s.m()] = Cplx(0, 1.0 / std::sqrt(static_cast<double>(s.d())));
  return p;
}

PeriodVector transport_period(const PolarizedSetup& s, const PeriodVector& v,
                              std::mt19937_64& rng) {
  int m = s.m();
  int n = 2 * m;
  if (static_cast<int>(v.v.size()) != n)
    throw input_error("period has the wrong dimension");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && s.gram().at(i, j) != 0)
        throw input_error("transport_period needs the diagonal setup");
  std::uniform_real_distribution<double> coin(-1.0, 1.0);

  // u(H)(R) for the diagonal Gram: X = [[D^-1 S, -d D^-1 T], [D^-1 T, D^-1 S]]
  // with S skew and T symmetric.
  std::vector<double> dinv(m);
  for (int i = 0; i < m; ++i) dinv[i] = 1.0 / s.gram().at(i, i).get_d();
  DMat x(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double sij = (i == j) ? 0.0 : coin(rng);
      double tij = coin(rng);
      if (i > j) continue;  // fill symmetric pairs together
      double s_ij = sij, s_ji = -sij;
      double t_ij = tij, t_ji = tij;
      x[i * n + j] = dinv[i] * s_ij;
      x[j * n + i] = dinv[j] * s_ji;
      x[i * n + (m + j)] = -static_cast<double>(s.d()) * dinv[i] * t_ij;
      x[j * n + (m + i)] = -static_cast<double>(s.d()) * dinv[j] * t_ji;
      x[(m + i) * n + j] = dinv[i] * t_ij;
      x[(m + j) * n + i] = dinv[j] * t_ji;
      x[(m + i) * n + (m + j)] = dinv[i] * s_ij;
      x[(m + j) * n + (m + i)] = dinv[j] * s_ji;
    }

  double norm = 0;
  for (double e : x) norm += e * e;
  norm = std::sqrt(norm);
  double t = norm > 0 ? 0.7 / norm : 0.0;

  PeriodVector out;
  out.v = v.v;
  CVec term = v.v;
  for (int k = 1; k < 48; ++k) {
    term = mat_vec(x, term);
    for (auto& c : term) c *= t / k;
    for (int i = 0; i < n; ++i) out.v[i] += term[i];
  }
  return out;
}

PositivityResult positivity_oracle(const PolarizedSetup& s,
                                   const PeriodVector& period, double tol) {
  const int n = 2 * s.m();
  if (static_cast<int>(period.v.size()) != n)
    throw input_error("invalid period: wrong dimension");

  OracleFrame f;
  f.n = n;
  f.g = to_double(s.gram());
  f.j = to_double(s.phi());
  f.gj = mat_mul(f.g, f.j, n);
  f.v = period.v;
  f.vbar = conj_vec(f.v);

  double vnorm = 0;
  for (const Cplx& c : f.v) vnorm = std::max(vnorm, std::abs(c));
  if (vnorm < tol) throw input_error("invalid period: zero vector");
  double gscale = 1 + inf_norm(f.g);
  double scale = gscale * vnorm * vnorm;

  // Preconditions: psi-isotropy, phi-eigenline, psi(v, vbar) < 0.
  Cplx psi_vv = bilinear(f.g, f.v, f.v);
  if (std::abs(psi_vv) > tol * scale)
    throw input_error("invalid period: psi(v, v) != 0");
  CVec jv = mat_vec(f.j, f.v);
  double root_d = std::sqrt(static_cast<double>(s.d()));
  double res_plus = 0, res_minus = 0;
  for (int i = 0; i < n; ++i) {
    res_plus = std::max(res_plus, std::abs(jv[i] - Cplx(0, root_d) * f.v[i]));
    res_minus = std::max(res_minus, std::abs(jv[i] + Cplx(0, root_d) * f.v[i]));
  }
  if (std::min(res_plus, res_minus) > tol * (1 + root_d) * vnorm)
    throw input_error("invalid period: not a phi-eigenvector");
  f.psi_v_vbar = bilinear(f.g, f.v, f.vbar);
  if (!(f.psi_v_vbar.real() < -tol * scale) ||
      std::abs(f.psi_v_vbar.imag()) > tol * scale)
    throw input_error("invalid period: psi(v, conj v) must be negative");

  PositivityResult result;
  double residual = 0;

  // h(i) and the weight-2 positivity of Psi(., h(i) .).
  DMat h_i = realize(h_of_z(f, Cplx(0, 1)), 1.0, residual);
  DMat b = mat_mul(f.g, h_i, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      residual = std::max(residual,
                          std::abs(b[i * n + j] - b[j * n + i]) / gscale);
  std::vector<double> eig = jacobi_eigenvalues(b, n);
  result.min_eigenvalue_weight2 =
      *std::min_element(eig.begin(), eig.end()) / gscale;

  // h'(i) = g(i)^{-1} h(i) with g(i) = J / sqrt(d); then Psi'(., h'(i) .).
  DMat g_inv(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g_inv[i * n + j] = -f.j[i * n + j] / root_d;
  DMat h_half = mat_mul(g_inv, h_i, n);
  DMat b2 = mat_mul(f.gj, h_half, n);
  double gjscale = 1 + inf_norm(f.gj);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      residual = std::max(residual,
                          std::abs(b2[i * n + j] - b2[j * n + i]) / gjscale);
  std::vector<double> eig2 = jacobi_eigenvalues(b2, n);
  result.min_eigenvalue_halftwist =
      *std::min_element(eig2.begin(), eig2.end()) / gjscale;

  // Unit-circle equivariance at a few sample points: h(z) scales Psi by
  // |z|^4 = 1 and h'(z) scales Psi' by |z|^2 = 1.
  for (double theta : {0.9, 2.3, 4.1}) {
    Cplx z(std::cos(theta), std::sin(theta));
    DMat hz = realize(h_of_z(f, z), 1.0, residual);
    DMat gz(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gz[i * n + j] = z.real() * (i == j ? 1.0 : 0.0) +
                        z.imag() * f.j[i * n + j] / root_d;
    // g(z)^{-1} = g(conj z) on the unit circle.
    DMat gz_inv(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gz_inv[i * n + j] = z.real() * (i == j ? 1.0 : 0.0) -
                            z.imag() * f.j[i * n + j] / root_d;
    DMat hz_half = mat_mul(gz_inv, hz, n);

    DMat hzT(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) hzT[i * n + j] = hz[j * n + i];
    DMat lhs = mat_mul(hzT, mat_mul(f.g, hz, n), n);
    for (int i = 0; i < n * n; ++i)
      residual = std::max(residual, std::abs(lhs[i] - f.g[i]) / gscale);

    DMat hz_halfT(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) hz_halfT[i * n + j] = hz_half[j * n + i];
    DMat lhs2 = mat_mul(hz_halfT, mat_mul(f.gj, hz_half, n), n);
    for (int i = 0; i < n * n; ++i)
      residual = std::max(residual, std::abs(lhs2[i] - f.gj[i]) / gjscale);
  }

  result.max_residual = residual;
  result.pass = residual <= tol && result.min_eigenvalue_weight2 > tol &&
                result.min_eigenvalue_halftwist > tol;
  return result;
}

}  // namespace halftwist
