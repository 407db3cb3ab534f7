#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halftwist/clifford.hpp"
#include "halftwist/hodge.hpp"

namespace halftwist {

enum class ReportLevel { fast, exact };

struct SummandReport {
  int index = 0;            // i
  long dim = 0;             // 2 C(m, i)
  long hodge_sigma = 0;     // dim of the (1,0) eigenspace on the type side
  long hodge_sigma_bar = 0; // dim of the (1,0) eigenspace on the other side
  std::string endo;         // "K" off the middle, the quaternion pair on it
};

struct ExactCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct KSReport {
  long d = 0;
  int m = 0;
  long dim_v = 0;  // 2m
  Rat delta;
  Rat z_squared;
  bool center_split = false;  // z^2 a square: center of C+ is Q x Q
  int m_mod_4 = 0;
  int d_mod_4 = 0;
  bool split = false;  // Hilbert verdict on (delta, d delta)
  // Set when m = 2 (mod 4), where (delta, d delta) and (-d, -prod d_i) are
  // the same algebra: equality of their local symbol vectors.
  std::optional<bool> split_matches_norm_form;
  std::optional<std::pair<Rat, Rat>> witness;  // x^2 + d y^2 = -prod d_i
  std::vector<std::pair<std::string, int>> symbols;  // place -> symbol
  std::vector<SummandReport> summands;
  Int cplus_dim;                    // 2^{2m-1}
  std::optional<Int> multiplicity;  // 2^{m-2} when m >= 2
  bool m_is_one = false;            // multiplicity accounting out of range
  int ball_dim = 0;                 // m - 1
  ReportLevel level = ReportLevel::fast;
  std::vector<ExactCheck> exact_checks;
};

// The weight-1 table of the i-th spin summand, computed as the half twist
// of the (i-1)-fold Tate twist of the i-th K-exterior power of V.  V must
// be a weight-2 imaginary quadratic table whose single (2,0) line sits on
// the CM-type side.  0 <= i <= m.
HodgeTable summand_table(const HodgeTable& v, long i);

// Table-level check that V embeds in S0 (x) S1: undoing the half twist of
// the first summand recovers V exactly, along both available routes.
bool check_S0_tensor_S1(const HodgeTable& v);

// Assembles the spin decomposition report.  Level fast derives everything
// from closed forms and the exact table pipeline; level exact additionally
// builds the spin subspaces (m <= exact_cap) and the u(H) invariance data
// (m <= uh_cap) and cross-checks every number.  A mismatch between closed
// forms and computed data throws consistency_error.
KSReport full_report(const QuadFormDiag& form, const HodgeTable& v,
                     ReportLevel level, long witness_bound = 200,
                     int exact_cap = 5, int uh_cap = 4);

std::string render_text(const KSReport& report);
std::string render_machine_json(const KSReport& report);

}  // namespace halftwist
