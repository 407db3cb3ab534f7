#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "halftwist/clifford.hpp"
#include "halftwist/errors.hpp"
#include "halftwist/selftest.hpp"

using namespace halftwist;

namespace {

CliffordElem e(const QuadFormDiag& form, int g) {
  return CliffordElem::generator(form, g);
}

}  // namespace

TEST_CASE("generator squares and anticommutation") {
  QuadFormDiag form(3, {ratio(-2), ratio(5, 3)});
  CHECK(e(form, 1) * e(form, 1) ==
        CliffordElem::scalar(form, ratio(-2)));
  CHECK(e(form, 3) * e(form, 3) ==
        CliffordElem::scalar(form, Rat(3) * ratio(-2)));  // d * d_1
  CHECK((e(form, 1) * e(form, 2) + e(form, 2) * e(form, 1)).is_zero());
  CHECK((e(form, 1) * e(form, 4) + e(form, 4) * e(form, 1)).is_zero());

  CliffordElem e12 = e(form, 1) * e(form, 2);
  CHECK(e12 * e12 == CliffordElem::scalar(form, -(ratio(-2) * ratio(5, 3))));
}

TEST_CASE("products of distinct generators are single blades") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 1 + static_cast<int>(rng() % 5);
    QuadFormDiag form = random_form(rng, m);
    int n = form.gen_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    int k = 1 + static_cast<int>(rng() % n);
    CliffordElem prod = CliffordElem::scalar(form, Rat(1));
    Blade expected = 0;
    for (int i = 0; i < k; ++i) {
      prod = prod * e(form, order[i]);
      expected |= Blade(1) << (order[i] - 1);
    }
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms().begin()->first == expected);
    Rat coeff = prod.terms().begin()->second.a();
    CHECK((coeff == 1 || coeff == -1));
  }
}

TEST_CASE("associativity on random sparse elements") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 1 + static_cast<int>(rng() % 4);
    QuadFormDiag form = random_form(rng, m);
    std::uniform_int_distribution<Blade> blade(
        0, (Blade(1) << form.gen_count()) - 1);
    auto rand_elem = [&]() {
      CliffordElem x(form, CoeffRing::quadratic);
      for (int t = 0; t < 3; ++t)
        x.add_term(blade(rng), QuadElem(random_rational(rng),
                                        random_rational(rng), form.d));
      return x;
    };
    CliffordElem x = rand_elem(), y = rand_elem(), z = rand_elem();
    CHECK((x * y) * z == x * (y * z));
    CHECK(conj_coeffs(x * y) == conj_coeffs(x) * conj_coeffs(y));
    CHECK(conj_coeffs(conj_coeffs(x)) == x);
  }
}

TEST_CASE("coefficient conjugation fixes rational elements") {
  QuadFormDiag form(5, {ratio(-1), ratio(2)});
  CliffordElem root_e1 =
      QuadElem::sqrt_minus_d(5) * CliffordElem::generator(form, 1);
  CHECK(conj_coeffs(root_e1) == -root_e1);

  CliffordElem rational = CliffordElem::blade_elem(form, 0b0110, ratio(7, 2));
  CHECK(conj_coeffs(rational) == rational);
}

TEST_CASE("center element: pinned examples") {
  QuadFormDiag small(3, {ratio(-1)});
  CenterInfo c1 = center_element(small);
  CHECK(c1.z_squared == -3);
  CHECK(!c1.split);  // Q(z) is the imaginary quadratic field itself

  QuadFormDiag split_form(1, {ratio(-1), ratio(1)});
  CenterInfo c2 = center_element(split_form);
  CHECK(c2.z_squared == 1);
  CHECK(c2.split);
}

TEST_CASE("center element closed form on random forms") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + static_cast<int>(rng() % 5);
    QuadFormDiag form = random_form(rng, m);
    CenterInfo c = center_element(form);  // throws if z^2 mismatches
    Rat expected = rat_pow(Rat(form.d), m) * form.diag_product() *
                   form.diag_product();
    if (m % 2 == 1) expected = -expected;
    CHECK(c.z_squared == expected);
    // Parity: z picks up (-1)^{2m-1} = -1 against every generator.
    for (int g = 1; g <= form.gen_count(); ++g) {
      CliffordElem eg = CliffordElem::generator(form, g);
      CHECK((c.z * eg + eg * c.z).is_zero());
    }
    // And commutes with even-degree blades.
    std::uniform_int_distribution<Blade> blade(
        0, (Blade(1) << form.gen_count()) - 1);
    for (int t = 0; t < 5; ++t) {
      Blade b = blade(rng);
      if (std::popcount(b) % 2 != 0) continue;
      CliffordElem even = CliffordElem::blade_elem(form, b, Rat(1));
      CHECK((c.z * even - even * c.z).is_zero());
    }
  }
}

TEST_CASE("form validation") {
  CHECK_THROWS_AS(QuadFormDiag(4, {ratio(-1)}), input_error);
  CHECK_THROWS_AS(QuadFormDiag(3, {}), input_error);
  CHECK_THROWS_AS(QuadFormDiag(3, {ratio(0)}), input_error);
  CHECK(QuadFormDiag(3, {ratio(-1), ratio(2)}).weight2_shape());
  CHECK(!QuadFormDiag(3, {ratio(1), ratio(2)}).weight2_shape());
  CHECK(!QuadFormDiag(3, {ratio(-1), ratio(-2)}).weight2_shape());
}

TEST_CASE("elements over different forms do not mix") {
  QuadFormDiag f1(3, {ratio(-1)});
  QuadFormDiag f2(3, {ratio(-2)});
  CHECK_THROWS_AS(e(f1, 1) * e(f2, 1), input_error);
}
