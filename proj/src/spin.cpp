#include "halftwist/spin.hpp"

#include <bit>

#include "halftwist/errors.hpp"
#include "halftwist/quat.hpp"

namespace halftwist {

namespace {

void require_zero(const CliffordElem& x, const char* what) {
  if (!x.is_zero())
    throw consistency_error(std::string("f-basis relation failed: ") + what);
}

}  // namespace

FBasis FBasis::build(const QuadFormDiag& form) {
  const int m = form.m();
  const long d = form.d;
  QuadElem root = QuadElem::sqrt_minus_d(d);
  CliffordElem one = CliffordElem::scalar(form, Rat(1));

  std::vector<CliffordElem> f;
  f.reserve(2 * m);
  for (int i = 1; i <= m; ++i) {
    CliffordElem ei = CliffordElem::generator(form, i);
    CliffordElem emi = CliffordElem::generator(form, m + i);
    Rat c = 1 / (2 * Rat(d) * form.diag[i - 1]);
    f.push_back(c * (root * ei + emi));
  }
  for (int i = 1; i <= m; ++i) {
    CliffordElem ei = CliffordElem::generator(form, i);
    CliffordElem emi = CliffordElem::generator(form, m + i);
    f.push_back(ratio(1, 2) * ((-root) * ei + emi));
  }

  CliffordElem f_top = one;
  for (int j = m + 1; j <= 2 * m; ++j) f_top = f_top * f[j - 1];
  CliffordElem f_top_conj = conj_coeffs(f_top);

  Rat delta = rat_pow(Rat(d), m) * form.diag_product();
  if (((static_cast<long>(m) * (m - 1)) / 2) % 2 == 1) delta = -delta;

  FBasis fb{form,
            std::move(f),
            f_top,
            f_top_conj,
            f_top + f_top_conj,
            root * (f_top - f_top_conj),
            delta};

  for (int j = 1; j <= 2 * m; ++j)
    require_zero(fb.f[j - 1] * fb.f[j - 1], "f_j^2 = 0");
  for (int j = 1; j <= 2 * m; ++j) {
    for (int k = j + 1; k <= 2 * m; ++k) {
      CliffordElem anti = fb.f[j - 1] * fb.f[k - 1] + fb.f[k - 1] * fb.f[j - 1];
      if (k - j == m)
        require_zero(anti - one, "f_i f_{m+i} + f_{m+i} f_i = 1");
      else
        require_zero(anti, "f_j f_k = -f_k f_j");
    }
  }

  for (int i = 1; i <= m; ++i) {
    Rat dd = Rat(d) * fb.form.diag[i - 1];
    require_zero(conj_coeffs(fb.f[i - 1]) - (1 / dd) * fb.f[m + i - 1],
                 "conj(f_i) = f_{m+i}/(d d_i)");
    require_zero(conj_coeffs(fb.f[m + i - 1]) - dd * fb.f[i - 1],
                 "conj(f_{m+i}) = d d_i f_i");
  }

  CliffordElem low = one;
  for (int j = 1; j <= m; ++j) low = low * fb.f[j - 1];
  require_zero(fb.f_top_conj - (rat_pow(Rat(d), m) * form.diag_product()) * low,
               "fbar = d^m prod(d_i) f_1...f_m");

  require_zero(fb.f_top * fb.f_top_conj * fb.f_top - fb.delta * fb.f_top,
               "f fbar f = delta f");
  require_zero(
      fb.f_top_conj * fb.f_top * fb.f_top_conj - fb.delta * fb.f_top_conj,
      "fbar f fbar = delta fbar");

  if (!fb.plus.rational_coeffs() || !fb.minus_root.rational_coeffs())
    throw consistency_error("f + fbar and sqrt(-d)(f - fbar) must be rational");

  return fb;
}

SparseVec clifford_to_vec(const CliffordElem& x) {
  SparseVec v;
  v.reserve(x.terms().size());
  for (const auto& [b, c] : x.terms()) {
    if (!c.is_rational())
      throw consistency_error("expected rational coefficients");
    v.emplace_back(static_cast<int>(b), c.a());
  }
  return v;
}

CliffordElem clifford_from_vec(const QuadFormDiag& form, const SparseVec& v) {
  CliffordElem out(form, CoeffRing::rational);
  for (const auto& [b, c] : v)
    out.add_term(static_cast<Blade>(b), QuadElem::from_rational(c, form.d));
  return out;
}

SubspaceQ build_S(const FBasis& fb) {
  // The span of { b (f+fbar), b sqrt(-d)(f-fbar) } over all blades b is the
  // left ideal generated by the two seeds, so close the span under left
  // multiplication by the generators instead of walking all 2^{2m} blades.
  const int n_blades = 1 << fb.form.gen_count();
  SubspaceQ s(n_blades);
  std::vector<CliffordElem> queue;
  for (const CliffordElem* seed : {&fb.plus, &fb.minus_root})
    if (s.insert(clifford_to_vec(*seed))) queue.push_back(*seed);
  while (!queue.empty()) {
    CliffordElem x = std::move(queue.back());
    queue.pop_back();
    for (int g = 1; g <= fb.form.gen_count(); ++g) {
      CliffordElem image = CliffordElem::generator(fb.form, g) * x;
      if (s.insert(clifford_to_vec(image))) queue.push_back(std::move(image));
    }
  }
  return s;
}

namespace {

// Matrix of x -> x * w on the subspace, columns in the row basis.
MatrixQ right_mul_matrix(const CliffordElem& w, const QuadFormDiag& form,
                         const SubspaceQ& space) {
  const int n = space.rank();
  MatrixQ mat(n, n);
  for (int j = 0; j < n; ++j) {
    CliffordElem img = clifford_from_vec(form, space.rows()[j]) * w;
    auto coords = space.coordinates(clifford_to_vec(img));
    if (!coords)
      throw consistency_error(
          "right multiplication does not preserve the subspace");
    for (int i = 0; i < n; ++i) mat.at(i, j) = (*coords)[i];
  }
  return mat;
}

}  // namespace

EndoOperators endo_operators(const FBasis& fb, const SubspaceQ& S) {
  EndoOperators ops{right_mul_matrix(fb.plus, fb.form, S),
                    right_mul_matrix(fb.minus_root, fb.form, S), fb.delta,
                    Rat(fb.form.d) * fb.delta};
  const int n = S.rank();
  MatrixQ id = MatrixQ::identity(n);
  if (!(ops.alpha * ops.alpha == ops.alpha_sq * id))
    throw consistency_error("alpha^2 != delta Id");
  if (!(ops.beta * ops.beta == ops.beta_sq * id))
    throw consistency_error("beta^2 != d delta Id");
  if (!is_zero(ops.alpha * ops.beta + ops.beta * ops.alpha))
    throw consistency_error("alpha beta != -beta alpha");
  return ops;
}

std::vector<SubspaceQ> build_parts(const FBasis& fb, const SubspaceQ& S) {
  const int m = fb.form.m();
  const int n_blades = 1 << fb.form.gen_count();
  QuadElem root = QuadElem::sqrt_minus_d(fb.form.d);

  std::vector<SubspaceQ> parts;
  parts.reserve(m + 1);
  for (int i = 0; i <= m; ++i) parts.emplace_back(n_blades);

  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int deg = std::popcount(mask);
    CliffordElem w = CliffordElem::scalar(fb.form, Rat(1));
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) w = w * fb.f[j];
    CliffordElem wf = w * fb.f_top;
    CliffordElem wf_conj = conj_coeffs(wf);
    for (const CliffordElem& gen : {wf + wf_conj, root * (wf - wf_conj)}) {
      SparseVec v = clifford_to_vec(gen);
      if (!S.member(v))
        throw consistency_error("part generator does not lie in S");
      parts[deg].insert(std::move(v));
    }
  }
  return parts;
}

MatrixQ gram_matrix(const QuadFormDiag& form) {
  int n = form.gen_count();
  MatrixQ g(n, n);
  for (int i = 1; i <= n; ++i) g.at(i - 1, i - 1) = form.gen_square(i);
  return g;
}

MatrixQ phi_matrix(const QuadFormDiag& form) {
  int m = form.m();
  MatrixQ j(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    j.at(m + i, i) = 1;
    j.at(i, m + i) = -Rat(form.d);
  }
  return j;
}

MatrixQ adjoint_action_matrix(const CliffordElem& xi) {
  const QuadFormDiag& form = xi.form();
  int n = form.gen_count();
  MatrixQ mat(n, n);
  for (int k = 1; k <= n; ++k) {
    CliffordElem ek = CliffordElem::generator(form, k);
    CliffordElem img = xi * ek - ek * xi;
    for (const auto& [b, c] : img.terms()) {
      if (std::popcount(b) != 1)
        throw consistency_error("adjoint action leaves degree one");
      if (!c.is_rational())
        throw consistency_error("adjoint action must stay rational");
      mat.at(std::countr_zero(b), k - 1) = c.a();
    }
  }
  return mat;
}

std::vector<CliffordElem> uH_generators(const QuadFormDiag& form) {
  const int n = form.gen_count();
  const int m = form.m();

  std::vector<Blade> bivectors;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      bivectors.push_back((Blade(1) << i) | (Blade(1) << j));

  MatrixQ j_mat = phi_matrix(form);
  std::vector<MatrixQ> commutators;
  commutators.reserve(bivectors.size());
  for (Blade b : bivectors) {
    MatrixQ ad =
        adjoint_action_matrix(CliffordElem::blade_elem(form, b, Rat(1)));
    commutators.push_back(ad * j_mat - j_mat * ad);
  }

  MatrixQ constraints(n * n, static_cast<int>(bivectors.size()));
  for (std::size_t col = 0; col < bivectors.size(); ++col)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        constraints.at(i * n + k, static_cast<int>(col)) =
            commutators[col].at(i, k);

  std::vector<std::vector<Rat>> kern = kernel_basis(constraints);
  if (static_cast<int>(kern.size()) != m * m)
    throw consistency_error("u(H) basis has unexpected dimension " +
                            std::to_string(kern.size()));

  std::vector<CliffordElem> gens;
  gens.reserve(kern.size());
  for (const auto& coeffs : kern) {
    CliffordElem xi(form, CoeffRing::rational);
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      if (coeffs[c] != 0)
        xi.add_term(bivectors[c], QuadElem::from_rational(coeffs[c], form.d));
    gens.push_back(std::move(xi));
  }
  return gens;
}

namespace {

std::vector<Rat> vectorize(const MatrixQ& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

MatrixQ matrix_from_flat(const std::vector<Rat>& v, int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
  return m;
}

// Basis of {X : X M_k = M_k X for every k}.  The first generator cuts the
// full matrix space down; each further generator only constrains the small
// leftover parameter space.
std::vector<MatrixQ> commutant_basis(const std::vector<MatrixQ>& reps, int n) {
  std::vector<MatrixQ> basis;
  if (reps.empty()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        MatrixQ e(n, n);
        e.at(i, j) = 1;
        basis.push_back(std::move(e));
      }
    return basis;
  }

  {
    const MatrixQ& rep = reps.front();
    MatrixQ sylvester(n * n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int row = i * n + j;
        // (X rep - rep X)_{ij} = sum_l X_{il} rep_{lj} - rep_{il} X_{lj}
        for (int l = 0; l < n; ++l) {
          sylvester.at(row, i * n + l) += rep.at(l, j);
          sylvester.at(row, l * n + j) -= rep.at(i, l);
        }
      }
    for (const auto& flat : kernel_basis(sylvester))
      basis.push_back(matrix_from_flat(flat, n));
  }

  for (std::size_t g = 1; g < reps.size() && !basis.empty(); ++g) {
    const MatrixQ& rep = reps[g];
    MatrixQ constraints(n * n, static_cast<int>(basis.size()));
    for (std::size_t col = 0; col < basis.size(); ++col) {
      MatrixQ comm = basis[col] * rep - rep * basis[col];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          constraints.at(i * n + j, static_cast<int>(col)) = comm.at(i, j);
    }
    std::vector<MatrixQ> refined;
    for (const auto& combo : kernel_basis(constraints)) {
      MatrixQ x(n, n);
      for (std::size_t col = 0; col < basis.size(); ++col) {
        if (combo[col] == 0) continue;
        x = x + combo[col] * basis[col];
      }
      refined.push_back(std::move(x));
    }
    basis = std::move(refined);
  }
  return basis;
}

// X^2 = c1 X + c0 Id; exists whenever span{Id, X} is closed under products.
std::pair<Rat, Rat> minpoly_quadratic(const MatrixQ& x) {
  int n = x.rows();
  MatrixQ x2 = x * x;
  MatrixQ sys(n * n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int r = i * n + j;
      sys.at(r, 0) = x.at(i, j);
      sys.at(r, 1) = (i == j) ? Rat(1) : Rat(0);
      sys.at(r, 2) = -x2.at(i, j);
    }
  for (const auto& k : kernel_basis(sys)) {
    if (k[2] != 0) return {k[0] / k[2], k[1] / k[2]};
  }
  throw consistency_error(
      "commutant element has no quadratic minimal polynomial");
}

}  // namespace

InvarianceReport check_invariance(const std::vector<CliffordElem>& gens,
                                  const FBasis& fb,
                                  const std::vector<SubspaceQ>& parts,
                                  long idempotent_bound) {
  InvarianceReport report;
  const QuadFormDiag& form = fb.form;
  const int m = form.m();

  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    const SubspaceQ& part = parts[i];
    const int n = part.rank();
    std::vector<MatrixQ> reps;
    bool part_invariant = true;

    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      MatrixQ rep(n, n);
      bool ok = true;
      for (int col = 0; col < n && ok; ++col) {
        CliffordElem img = gens[g] * clifford_from_vec(form, part.rows()[col]);
        auto coords = part.coordinates(clifford_to_vec(img));
        if (!coords) {
          report.invariant = false;
          part_invariant = false;
          report.failures.push_back(
              {g, i,
               "image of basis vector " + std::to_string(col) +
                   " leaves the part; witness " + clifford_str(img)});
          ok = false;
          break;
        }
        for (int r = 0; r < n; ++r) rep.at(r, col) = (*coords)[r];
      }
      if (ok) reps.push_back(std::move(rep));
    }

    PartClassification cls;
    cls.index = i;
    cls.dim = n;
    cls.middle = (2 * i == m);
    if (!part_invariant) {
      report.parts.push_back(cls);
      continue;
    }

    std::vector<MatrixQ> comm = commutant_basis(reps, n);
    cls.commutant_dim = static_cast<int>(comm.size());
    MatrixQ id = MatrixQ::identity(n);

    if (cls.commutant_dim == 2) {
      // Classify the quadratic algebra generated by a non-scalar element.
      for (const MatrixQ& x : comm) {
        if (is_zero(x - x.at(0, 0) * id)) continue;
        auto [c1, c0] = minpoly_quadratic(x);
        cls.minpoly_c1 = c1;
        cls.minpoly_c0 = c0;
        Rat disc = c1 * c1 + 4 * c0;
        cls.commutant_is_field = !is_square(disc);
        cls.field_is_K = is_square(Rat(-form.d) * disc);
        break;
      }
    } else if (cls.commutant_dim == 4 && cls.middle) {
      MatrixQ alpha = right_mul_matrix(fb.plus, form, part);
      MatrixQ beta = right_mul_matrix(fb.minus_root, form, part);
      MatrixQ ab = alpha * beta;
      // The right multiplications restricted to the middle part realize the
      // quaternion pair (delta, d delta) inside the commutant.
      SubspaceQ span(n * n);
      span.insert(sparse_from_dense(vectorize(id)));
      span.insert(sparse_from_dense(vectorize(alpha)));
      span.insert(sparse_from_dense(vectorize(beta)));
      span.insert(sparse_from_dense(vectorize(ab)));
      bool contains_comm = true;
      for (const MatrixQ& x : comm)
        if (!span.member(sparse_from_dense(vectorize(x))))
          contains_comm = false;
      cls.quaternion_matches = (span.rank() == 4) && contains_comm;

      Rat delta = fb.delta;
      Rat d_delta = Rat(form.d) * delta;
      cls.split = is_split(QuatAlg(delta, d_delta));
      if (cls.split) {
        // u = (x alpha + y beta + z alpha beta)/w with u^2 = 1 gives the
        // nontrivial idempotent (Id + u)/2.
        Rat neg_dd2 = -(d_delta * delta);  // (alpha beta)^2 scalar
        bool found = false;
        for (long x = 0; x <= idempotent_bound && !found; ++x)
          for (long y = 0; y <= idempotent_bound && !found; ++y)
            for (long z = 0; z <= idempotent_bound && !found; ++z) {
              if (x == 0 && y == 0 && z == 0) continue;
              Rat w2 = delta * x * x + d_delta * y * y + neg_dd2 * z * z;
              if (sgn(w2) <= 0 || !is_square(w2)) continue;
              Rat w(sqrt(w2.get_num()), sqrt(w2.get_den()));
              MatrixQ u = (Rat(x) / w) * alpha + (Rat(y) / w) * beta +
                          (Rat(z) / w) * ab;
              MatrixQ e = ratio(1, 2) * (id + u);
              if (!(e * e == e))
                throw consistency_error("idempotent candidate fails e^2 = e");
              cls.idempotent_image_dim = rank(e);
              found = true;
            }
      }
    }

    report.parts.push_back(cls);
  }
  return report;
}

}  // namespace halftwist
