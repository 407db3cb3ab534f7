#include <doctest.h>

#include "halftwist/errors.hpp"
#include "halftwist/ks.hpp"

using namespace halftwist;

namespace {

QuadFormDiag weight2_form(long d, int m) {
  std::vector<Rat> diag{ratio(-1)};
  for (int i = 1; i < m; ++i) diag.push_back(ratio(1));
  return QuadFormDiag(d, diag);
}

}  // namespace

TEST_CASE("first summand is the half twist of V") {
  for (long m : {2L, 5L, 10L}) {
    HodgeTable v = HodgeTable::weight2_generic(m);
    CHECK(summand_table(v, 1) == half_twist(v, 1));
  }
}

TEST_CASE("summand eigenspace dimensions match the binomials") {
  for (long m : {1L, 2L, 3L, 7L, 10L, 16L}) {
    HodgeTable v = HodgeTable::weight2_generic(m);
    long total = 0;
    for (long i = 0; i <= m; ++i) {
      HodgeTable s = summand_table(v, i);
      CHECK(s.weight() == 1);
      CHECK(s.dim_at(1, 1, 0) == binomial_long(m - 1, i - 1));
      CHECK(s.dim_at(1, 0, 1) == binomial_long(m - 1, i));
      CHECK(s.dim_Q() == 2 * binomial_long(m, i));
      CHECK(validate(s).passed());
      total += s.dim_Q();
      // S_i and S_{m-i} agree in total dimension.
      CHECK(s.dim_Q() == summand_table(v, m - i).dim_Q());
    }
    CHECK(total == (2L << m));  // 2^{m+1}
  }
}

TEST_CASE("m = 10 instance: the 9-ball family") {
  HodgeTable v = HodgeTable::weight2_generic(10);
  CHECK(v.dim_Q() == 20);
  CHECK(v.dim_at(1, 2, 0) == 1);                       // h^{2,0} = 1
  CHECK(v.dim_at(1, 1, 1) + v.dim_at(2, 1, 1) == 18);  // h^{1,1} = 18

  HodgeTable s1 = summand_table(v, 1);
  CHECK(s1.dim_Q() == 20);
  CHECK(s1.dim_at(1, 1, 0) == 1);
  CHECK(s1.dim_at(1, 0, 1) == 9);

  KSReport report = full_report(weight2_form(3, 10), v, ReportLevel::fast);
  CHECK(report.ball_dim == 9);
  std::vector<long> dims;
  for (const auto& s : report.summands) dims.push_back(s.dim);
  CHECK(dims == std::vector<long>{2, 20, 90, 240, 420, 504, 420, 240, 90, 20,
                                  2});
  CHECK(report.summands[1].hodge_sigma == 1);
  CHECK(report.summands[1].hodge_sigma_bar == 9);
  CHECK(report.multiplicity.has_value());
  CHECK(*report.multiplicity == 256);  // 2^{m-2}
  CHECK(report.cplus_dim == Int(1) << 19);
}

TEST_CASE("zeroth summand carries the weight-1 structure on K") {
  HodgeTable v = HodgeTable::weight2_generic(4);
  HodgeTable s0 = summand_table(v, 0);
  CHECK(s0.dim_Q() == 2);
  CHECK(s0.dim_at(1, 0, 1) == 1);
  CHECK(s0.dim_at(2, 1, 0) == 1);
}

TEST_CASE("V is recovered inside S0 tensor S1") {
  for (long m : {1L, 2L, 4L, 9L}) {
    HodgeTable v = HodgeTable::weight2_generic(m);
    CHECK(check_S0_tensor_S1(v));
  }

  CMType sigma = CMType::standard({1});
  HodgeTable corrupted(sigma, 2, {{1, 2, 0, 1}, {2, 0, 2, 2}});
  CHECK_THROWS_AS(check_S0_tensor_S1(corrupted), input_error);
}

TEST_CASE("inputs with the (2,0) line on the wrong side are rejected") {
  CMType sigma = CMType::standard({1});
  HodgeTable wrong_side(sigma, 2,
                        {{2, 2, 0, 1}, {1, 0, 2, 1}, {1, 1, 1, 1},
                         {2, 1, 1, 1}});
  try {
    summand_table(wrong_side, 1);
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("complement") != std::string::npos);
  }
}

TEST_CASE("exact report for the split m = 2 instance") {
  HodgeTable v = HodgeTable::weight2_generic(2);
  KSReport report =
      full_report(weight2_form(1, 2), v, ReportLevel::exact);
  CHECK(report.delta == 1);
  CHECK(report.z_squared == 1);
  CHECK(report.center_split);
  CHECK(report.split);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->first * report.witness->first +
            report.witness->second * report.witness->second ==
        1);
  std::vector<long> dims;
  for (const auto& s : report.summands) dims.push_back(s.dim);
  CHECK(dims == std::vector<long>{2, 4, 2});
  for (const ExactCheck& check : report.exact_checks) CHECK(check.ok);
  CHECK(!report.exact_checks.empty());
}

TEST_CASE("exact report for m = 3 finds K everywhere") {
  HodgeTable v = HodgeTable::weight2_generic(3);
  KSReport report = full_report(weight2_form(2, 3), v, ReportLevel::exact);
  for (const auto& s : report.summands) CHECK(s.endo == "K");
  for (const ExactCheck& check : report.exact_checks) CHECK(check.ok);
}

TEST_CASE("report input validation") {
  HodgeTable v = HodgeTable::weight2_generic(3);
  CHECK_THROWS_AS(full_report(weight2_form(3, 4), v, ReportLevel::fast),
                  input_error);
  QuadFormDiag wrong_shape(3, {ratio(1), ratio(1), ratio(1)});
  CHECK_THROWS_AS(full_report(wrong_shape, v, ReportLevel::fast), input_error);
  // Exact level respects the size cap.
  HodgeTable v6 = HodgeTable::weight2_generic(6);
  CHECK_THROWS_AS(full_report(weight2_form(3, 6), v6, ReportLevel::exact),
                  input_error);
  CHECK_NOTHROW(full_report(weight2_form(3, 6), v6, ReportLevel::fast));
}

TEST_CASE("m = 1 report flags the multiplicity accounting") {
  HodgeTable v = HodgeTable::weight2_generic(1);
  KSReport report = full_report(weight2_form(7, 1), v, ReportLevel::fast);
  CHECK(report.m_is_one);
  CHECK(!report.multiplicity.has_value());
  std::vector<long> dims;
  for (const auto& s : report.summands) dims.push_back(s.dim);
  CHECK(dims == std::vector<long>{2, 2});
}

TEST_CASE("machine report renders with exact strings") {
  HodgeTable v = HodgeTable::weight2_generic(2);
  KSReport report = full_report(weight2_form(1, 2), v, ReportLevel::fast);
  std::string json = render_machine_json(report);
  CHECK(json.find("\"delta\": \"1\"") != std::string::npos);
  CHECK(json.find("\"ball_dim\": \"1\"") != std::string::npos);
  CHECK(json.find("\"split\": true") != std::string::npos);
  std::string text = render_text(report);
  CHECK(text.find("S_1") != std::string::npos);
}
