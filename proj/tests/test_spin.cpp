#include <doctest.h>

#include <random>

#include "halftwist/errors.hpp"
#include "halftwist/selftest.hpp"
#include "halftwist/spin.hpp"

using namespace halftwist;

namespace {

QuadFormDiag split_m2() { return QuadFormDiag(1, {ratio(-1), ratio(1)}); }

}  // namespace

TEST_CASE("f-basis relations for the smallest form") {
  QuadFormDiag form(3, {ratio(-1)});
  FBasis fb = FBasis::build(form);  // every relation re-verified inside
  CliffordElem one = CliffordElem::scalar(form, Rat(1));
  CHECK(fb.f[0] * fb.f[1] + fb.f[1] * fb.f[0] == one);
  CHECK((fb.f[0] * fb.f[0]).is_zero());
  CHECK(fb.delta == -3);  // (-1)^0 * 3^1 * (-1)
}

TEST_CASE("f-basis across a small grid") {
  for (long d : {1L, 2L, 3L, 7L}) {
    for (int m : {1, 2, 3}) {
      std::vector<Rat> diag{ratio(-2)};
      for (int i = 1; i < m; ++i) diag.push_back(ratio(2 * i + 1, 2));
      QuadFormDiag form(d, diag);
      FBasis fb = FBasis::build(form);
      for (int j = 0; j < 2 * m; ++j) CHECK((fb.f[j] * fb.f[j]).is_zero());
      CHECK(fb.f_top * fb.f_top_conj * fb.f_top == fb.delta * fb.f_top);
    }
  }
}

TEST_CASE("delta for the split instance") {
  FBasis fb = FBasis::build(split_m2());
  CHECK(fb.delta == 1);
  CHECK(fb.f_top * fb.f_top_conj * fb.f_top == fb.f_top);
}

TEST_CASE("spin subspace dimensions") {
  FBasis fb2 = FBasis::build(split_m2());
  SubspaceQ s2 = build_S(fb2);
  CHECK(s2.rank() == 8);

  QuadFormDiag form3(3, {ratio(-1), ratio(1), ratio(2)});
  FBasis fb3 = FBasis::build(form3);
  SubspaceQ s3 = build_S(fb3);
  CHECK(s3.rank() == 16);

  CHECK(s2.member(clifford_to_vec(fb2.plus)));
  CHECK(s2.member(clifford_to_vec(fb2.minus_root)));
}

TEST_CASE("endomorphism operators") {
  FBasis fb = FBasis::build(split_m2());
  SubspaceQ s = build_S(fb);
  EndoOperators ops = endo_operators(fb, s);
  MatrixQ id = MatrixQ::identity(s.rank());
  CHECK(ops.alpha * ops.alpha == id);  // delta = 1 here
  CHECK(is_zero(ops.alpha * ops.beta + ops.beta * ops.alpha));
  MatrixQ ab = ops.alpha * ops.beta;
  CHECK(ab * ab == (-Rat(fb.form.d) * fb.delta * fb.delta) * id);

  QuadFormDiag other(3, {ratio(-1, 2), ratio(5)});
  FBasis fb2 = FBasis::build(other);
  SubspaceQ s2 = build_S(fb2);
  EndoOperators ops2 = endo_operators(fb2, s2);
  CHECK(ops2.alpha * ops2.alpha == fb2.delta * MatrixQ::identity(s2.rank()));
  CHECK(ops2.beta * ops2.beta ==
        Rat(3) * fb2.delta * MatrixQ::identity(s2.rank()));
}

TEST_CASE("graded parts: dimensions, direct sum, containment") {
  FBasis fb = FBasis::build(split_m2());
  SubspaceQ s = build_S(fb);
  std::vector<SubspaceQ> parts = build_parts(fb, s);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].rank() == 2);
  CHECK(parts[1].rank() == 4);
  CHECK(parts[2].rank() == 2);
  CHECK(parts[0].member(clifford_to_vec(fb.plus)));

  std::vector<const SubspaceQ*> ptrs{&parts[0], &parts[1], &parts[2]};
  CHECK(sum_rank(ptrs) == s.rank());
  CHECK(intersection_dim(parts[0], parts[1]) == 0);
  CHECK(intersection_dim(parts[1], parts[2]) == 0);

  QuadFormDiag form4(2, {ratio(-1), ratio(1), ratio(3), ratio(1, 2)});
  FBasis fb4 = FBasis::build(form4);
  SubspaceQ s4 = build_S(fb4);
  std::vector<SubspaceQ> parts4 = build_parts(fb4, s4);
  std::vector<int> dims;
  for (const auto& p : parts4) dims.push_back(p.rank());
  CHECK(dims == std::vector<int>{2, 8, 12, 8, 2});
}

TEST_CASE("alpha maps S_i into S_i + S_{m-i}") {
  QuadFormDiag form(3, {ratio(-1), ratio(2), ratio(1)});
  FBasis fb = FBasis::build(form);
  SubspaceQ s = build_S(fb);
  std::vector<SubspaceQ> parts = build_parts(fb, s);
  int m = form.m();
  for (int i = 0; i <= m; ++i) {
    SubspaceQ target(s.ambient());
    for (const SparseVec& row : parts[i].rows()) target.insert(row);
    for (const SparseVec& row : parts[m - i].rows()) target.insert(row);
    for (const SparseVec& row : parts[i].rows()) {
      CliffordElem x = clifford_from_vec(form, row);
      CHECK(target.member(clifford_to_vec(x * fb.plus)));
      CHECK(target.member(clifford_to_vec(x * fb.minus_root)));
    }
  }
}

TEST_CASE("u(H) generators: count and psi-skewness") {
  for (int m : {1, 2, 3}) {
    std::vector<Rat> diag{ratio(-1)};
    for (int i = 1; i < m; ++i) diag.push_back(ratio(i + 1));
    QuadFormDiag form(3, diag);
    std::vector<CliffordElem> gens = uH_generators(form);
    CHECK(static_cast<int>(gens.size()) == m * m);
    MatrixQ g = gram_matrix(form);
    MatrixQ j = phi_matrix(form);
    for (const CliffordElem& xi : gens) {
      MatrixQ ad = adjoint_action_matrix(xi);
      CHECK(is_zero(ad.transpose() * g + g * ad));  // so(psi)
      CHECK(ad * j == j * ad);                      // commutes with phi
    }
  }
}

TEST_CASE("m = 1: the single u(H) direction is e1 e2") {
  QuadFormDiag form(5, {ratio(-3)});
  std::vector<CliffordElem> gens = uH_generators(form);
  REQUIRE(gens.size() == 1);
  REQUIRE(gens[0].terms().size() == 1);
  CHECK(gens[0].terms().begin()->first == 0b11);
}

TEST_CASE("invariance and commutants for m = 2 and m = 3") {
  {
    FBasis fb = FBasis::build(split_m2());
    SubspaceQ s = build_S(fb);
    std::vector<SubspaceQ> parts = build_parts(fb, s);
    std::vector<CliffordElem> gens = uH_generators(fb.form);
    InvarianceReport report = check_invariance(gens, fb, parts);
    CHECK(report.invariant);
    REQUIRE(report.parts.size() == 3);
    CHECK(report.parts[0].commutant_dim == 2);
    CHECK(report.parts[1].commutant_dim == 4);
    CHECK(report.parts[2].commutant_dim == 2);
    CHECK(report.parts[0].commutant_is_field);
    CHECK(report.parts[0].field_is_K);
    CHECK(report.parts[2].field_is_K);
    CHECK(report.parts[1].middle);
    CHECK(report.parts[1].quaternion_matches);
    CHECK(report.parts[1].split);  // delta = 1, so (1, 1) splits
    REQUIRE(report.parts[1].idempotent_image_dim.has_value());
    CHECK(*report.parts[1].idempotent_image_dim == 2);  // C(2, 1)
  }
  {
    QuadFormDiag form(2, {ratio(-2), ratio(3), ratio(1)});
    FBasis fb = FBasis::build(form);
    SubspaceQ s = build_S(fb);
    std::vector<SubspaceQ> parts = build_parts(fb, s);
    std::vector<CliffordElem> gens = uH_generators(form);
    InvarianceReport report = check_invariance(gens, fb, parts);
    CHECK(report.invariant);
    REQUIRE(report.parts.size() == 4);
    for (const PartClassification& cls : report.parts) {
      CHECK(cls.commutant_dim == 2);  // 2i != m for every i when m = 3
      CHECK(cls.commutant_is_field);
      CHECK(cls.field_is_K);
    }
  }
}

TEST_CASE("non-split middle commutant stays quaternionic") {
  // m = 2, d = 3, diag (-1, 2): delta = 18, d delta = 54, square class
  // (2, 6), which ramifies at 2, so (delta, d delta) is a division algebra.
  QuadFormDiag form(3, {ratio(-1), ratio(2)});
  FBasis fb = FBasis::build(form);
  SubspaceQ s = build_S(fb);
  std::vector<SubspaceQ> parts = build_parts(fb, s);
  std::vector<CliffordElem> gens = uH_generators(form);
  InvarianceReport report = check_invariance(gens, fb, parts);
  CHECK(report.invariant);
  CHECK(report.parts[1].commutant_dim == 4);
  CHECK(report.parts[1].quaternion_matches);
  CHECK(!report.parts[1].split);
  CHECK(!report.parts[1].idempotent_image_dim.has_value());
}

TEST_CASE("closure construction of S matches the all-blades span") {
  std::mt19937_64 rng(8);
  for (int m : {1, 2, 3}) {
    QuadFormDiag form = random_form(rng, m);
    FBasis fb = FBasis::build(form);
    SubspaceQ fast = build_S(fb);
    SubspaceQ brute(1 << form.gen_count());
    for (Blade b = 0; b < (Blade(1) << form.gen_count()); ++b) {
      CliffordElem blade = CliffordElem::blade_elem(form, b, Rat(1));
      brute.insert(clifford_to_vec(blade * fb.plus));
      brute.insert(clifford_to_vec(blade * fb.minus_root));
    }
    CHECK(fast.rank() == brute.rank());
    // The reduced echelon basis is canonical, so the rows must agree.
    CHECK(fast.rows() == brute.rows());
  }
}

TEST_CASE("vector round trip for rational elements") {
  std::mt19937_64 rng(6);
  QuadFormDiag form = random_form(rng, 3);
  std::uniform_int_distribution<Blade> blade(0,
                                             (Blade(1) << form.gen_count()) - 1);
  for (int trial = 0; trial < 30; ++trial) {
    CliffordElem x(form, CoeffRing::rational);
    for (int t = 0; t < 4; ++t)
      x.add_term(blade(rng),
                 QuadElem::from_rational(random_rational(rng), form.d));
    CHECK(clifford_from_vec(form, clifford_to_vec(x)) == x);
  }
}
