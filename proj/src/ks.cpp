#include "halftwist/ks.hpp"

#include <json.hpp>
#include <sstream>

#include "halftwist/errors.hpp"
#include "halftwist/quat.hpp"
#include "halftwist/spin.hpp"

namespace halftwist {

namespace {

// V must be weight 2 over an imaginary quadratic field with its single
// (2,0) line on the CM-type side; returns (sigma, m).
std::pair<int, long> check_weight2_shape(const HodgeTable& v) {
  require_valid(v);
  if (v.field().half_degree != 1)
    throw input_error("spin decomposition needs an imaginary quadratic field");
  if (v.weight() != 2) throw input_error("table must have weight 2");
  long m = v.dim_K();
  if (m < 1) throw input_error("table must be nonzero");
  int sigma = v.cm_type().chosen()[0];
  int sigma_bar = v.field().conj(sigma);
  if (!v.effective())
    throw input_error("weight-2 spin input must be effective");
  if (v.dim_at(sigma, 2, 0) != 1) {
    if (v.dim_at(sigma_bar, 2, 0) == 1)
      throw input_error(
          "the (2,0) line sits on the conjugate side; swap the CM-type to "
          "its complement");
    throw input_error("table must have a single (2,0) line on the type side");
  }
  return {sigma, m};
}

}  // namespace

HodgeTable summand_table(const HodgeTable& v, long i) {
  auto [sigma, m] = check_weight2_shape(v);
  (void)sigma;
  if (i < 0 || i > m)
    throw input_error("summand index must lie between 0 and m");
  HodgeTable ext = ext_power_K(v, i);
  HodgeTable twisted = tate_twist(ext, static_cast<int>(i) - 1);
  return half_twist(twisted, +1);
}

bool check_S0_tensor_S1(const HodgeTable& v) {
  HodgeTable s1 = summand_table(v, 1);
  bool direct = half_twist(s1, -1) == v;
  bool via_tensor = tensor_K_halfmodule(s1).diag == v;
  return direct && via_tensor;
}

namespace {

void run_check(KSReport& report, const std::string& name, bool ok,
               const std::string& detail) {
  report.exact_checks.push_back({name, ok, detail});
  if (!ok)
    throw consistency_error("report discrepancy in " + name +
                            (detail.empty() ? "" : ": " + detail));
}

std::string endo_label(const Rat& delta, const Rat& d_delta, bool split) {
  std::string s = "(" + rational_str(delta) + ", " + rational_str(d_delta) +
                  ")";
  return s + (split ? " split" : " division");
}

}  // namespace

KSReport full_report(const QuadFormDiag& form, const HodgeTable& v,
                     ReportLevel level, long witness_bound, int exact_cap,
                     int uh_cap) {
  auto [sigma, m_dim] = check_weight2_shape(v);
  const int m = form.m();
  if (m_dim != m)
    throw input_error("form and table disagree on m = dim_K V");
  if (!form.weight2_shape())
    throw input_error("form must have d_1 < 0 and d_2..d_m > 0");

  KSReport report;
  report.level = level;
  report.d = form.d;
  report.m = m;
  report.dim_v = 2 * m;
  report.m_mod_4 = m % 4;
  report.d_mod_4 = static_cast<int>(form.d % 4);
  report.ball_dim = m - 1;
  report.m_is_one = (m == 1);

  report.delta = rat_pow(Rat(form.d), m) * form.diag_product();
  if (((static_cast<long>(m) * (m - 1)) / 2) % 2 == 1)
    report.delta = -report.delta;
  Rat d_delta = Rat(form.d) * report.delta;

  CenterInfo center = center_element(form);
  report.z_squared = center.z_squared;
  report.center_split = center.split;

  QuatAlg d_alg(report.delta, d_delta);
  report.split = is_split(d_alg);
  for (const Place& place : relevant_places(d_alg.a, d_alg.b))
    report.symbols.emplace_back(place.str(),
                                hilbert_symbol(d_alg.a, d_alg.b, place));
  // The identification with (-d, n), n = -prod d_i, holds for m = 2 (4);
  // there the norm equation witnesses the split case.
  if (m % 4 == 2) {
    Rat n_const = -form.diag_product();
    report.split_matches_norm_form =
        same_symbol_vector(d_alg, QuatAlg(Rat(-form.d), n_const));
    if (!*report.split_matches_norm_form)
      throw consistency_error(
          "(delta, d delta) and (-d, -prod d_i) have different local symbols");
    if (report.split)
      report.witness = norm_eq_search(n_const, form.d, witness_bound);
  }

  // Summands: closed forms cross-checked against the twist pipeline.
  Int dim_s_total = 0;
  for (long i = 0; i <= m; ++i) {
    SummandReport s;
    s.index = static_cast<int>(i);
    s.dim = 2 * binomial_long(m, i);
    s.hodge_sigma = binomial_long(m - 1, i - 1);
    s.hodge_sigma_bar = binomial_long(m - 1, i);
    s.endo = (2 * i == m) ? endo_label(report.delta, d_delta, report.split)
                          : "K";
    dim_s_total += Int(s.dim);

    HodgeTable table = summand_table(v, i);
    if (table.weight() != 1)
      throw consistency_error("summand table has the wrong weight");
    int sigma_bar = v.field().conj(sigma);
    bool dims_ok = table.dim_at(sigma, 1, 0) == s.hodge_sigma &&
                   table.dim_at(sigma, 0, 1) == s.hodge_sigma_bar &&
                   table.dim_at(sigma_bar, 0, 1) == s.hodge_sigma &&
                   table.dim_at(sigma_bar, 1, 0) == s.hodge_sigma_bar &&
                   table.dim_Q() == s.dim;
    if (!dims_ok)
      throw consistency_error("summand table dims disagree with closed form "
                              "at i = " + std::to_string(i));
    report.summands.push_back(std::move(s));
  }
  if (dim_s_total != Int(1) << (m + 1))
    throw consistency_error("summand dimensions do not add up to 2^{m+1}");

  if (!check_S0_tensor_S1(v))
    throw consistency_error("recovering V inside S0 (x) S1 failed");

  report.cplus_dim = Int(1) << (2 * m - 1);
  if (m >= 2) {
    report.multiplicity = Int(1) << (m - 2);
    if (*report.multiplicity * dim_s_total != report.cplus_dim)
      throw consistency_error("C+(V) dimension accounting failed");
  }

  if (level == ReportLevel::exact) {
    if (m > exact_cap)
      throw input_error(
          "exact level supports m <= " + std::to_string(exact_cap) +
          "; rerun with a larger cap if you accept the runtime");

    FBasis fb = FBasis::build(form);
    run_check(report, "f-basis relations", true, "verified by construction");
    run_check(report, "delta closed form", fb.delta == report.delta,
              rational_str(fb.delta));

    SubspaceQ s = build_S(fb);
    run_check(report, "dim S = 2^{m+1}", s.rank() == (1 << (m + 1)),
              "computed " + std::to_string(s.rank()));

    EndoOperators ops = endo_operators(fb, s);
    run_check(report, "alpha^2 = delta, beta^2 = d delta, anticommute", true,
              rational_str(ops.alpha_sq) + ", " + rational_str(ops.beta_sq));

    std::vector<SubspaceQ> parts = build_parts(fb, s);
    bool dims_match = true;
    std::string dims;
    for (int i = 0; i <= m; ++i) {
      if (parts[i].rank() != report.summands[i].dim) dims_match = false;
      dims += (i ? "," : "") + std::to_string(parts[i].rank());
    }
    run_check(report, "dim S_i = 2 C(m,i)", dims_match, dims);

    std::vector<const SubspaceQ*> part_ptrs;
    for (const SubspaceQ& p : parts) part_ptrs.push_back(&p);
    run_check(report, "S = direct sum of the S_i",
              sum_rank(part_ptrs) == s.rank(), "");

    if (m <= uh_cap) {
      std::vector<CliffordElem> gens = uH_generators(form);
      run_check(report, "dim u(H) = m^2",
                static_cast<int>(gens.size()) == m * m,
                std::to_string(gens.size()));
      InvarianceReport inv = check_invariance(gens, fb, parts);
      run_check(report, "u(H) preserves every S_i", inv.invariant, "");
      bool commutants_ok = true;
      std::string comm_dims;
      for (const PartClassification& cls : inv.parts) {
        int expected = cls.middle ? 4 : 2;
        if (cls.commutant_dim != expected) commutants_ok = false;
        if (!cls.middle && !(cls.commutant_is_field && cls.field_is_K))
          commutants_ok = false;
        if (cls.middle && !cls.quaternion_matches) commutants_ok = false;
        if (cls.middle && report.split &&
            cls.idempotent_image_dim != binomial_long(m, m / 2))
          commutants_ok = false;
        comm_dims += (cls.index ? "," : "") + std::to_string(cls.commutant_dim);
      }
      run_check(report, "commutants: K off the middle, (delta, d delta) on it",
                commutants_ok, comm_dims);
    }
  }

  return report;
}

std::string render_text(const KSReport& report) {
  std::ostringstream os;
  os << "spin decomposition over Q(sqrt(-" << report.d << ")), m = "
     << report.m << ", dim V = " << report.dim_v << "\n";
  os << "  delta = " << rational_str(report.delta)
     << ", z^2 = " << rational_str(report.z_squared) << ", center "
     << (report.center_split ? "Q x Q" : "Q(z), a field") << "\n";
  os << "  m mod 4 = " << report.m_mod_4 << ", d mod 4 = " << report.d_mod_4
     << "\n";
  os << "  (delta, d delta): " << (report.split ? "split" : "division")
     << "; symbols";
  for (const auto& [place, symbol] : report.symbols)
    os << " " << place << ":" << (symbol > 0 ? "+1" : "-1");
  os << "\n";
  if (report.witness)
    os << "  norm witness: x = " << rational_str(report.witness->first)
       << ", y = " << rational_str(report.witness->second) << "\n";
  os << "  summands:\n";
  for (const SummandReport& s : report.summands)
    os << "    S_" << s.index << ": dim " << s.dim << ", (1,0) eigenspace dims ("
       << s.hodge_sigma << ", " << s.hodge_sigma_bar << "), End = " << s.endo
       << "\n";
  if (report.multiplicity)
    os << "  C+(V) = S^" << report.multiplicity->get_str() << ", dim C+(V) = "
       << report.cplus_dim.get_str() << "\n";
  else
    os << "  m = 1: multiplicity accounting does not apply; dim C+(V) = "
       << report.cplus_dim.get_str() << "\n";
  os << "  moduli ball dimension: " << report.ball_dim << "\n";
  if (!report.exact_checks.empty()) {
    os << "  exact checks:\n";
    for (const ExactCheck& c : report.exact_checks)
      os << "    " << (c.ok ? "ok  " : "FAIL") << " " << c.name
         << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
  }
  return os.str();
}

std::string render_machine_json(const KSReport& report) {
  nlohmann::json j;
  j["d"] = std::to_string(report.d);
  j["m"] = std::to_string(report.m);
  j["dim_v"] = std::to_string(report.dim_v);
  j["delta"] = rational_str(report.delta);
  j["z_squared"] = rational_str(report.z_squared);
  j["center"] = report.center_split ? "QxQ" : "field";
  j["m_mod_4"] = std::to_string(report.m_mod_4);
  j["d_mod_4"] = std::to_string(report.d_mod_4);
  j["split"] = report.split;
  if (report.split_matches_norm_form)
    j["split_matches_norm_form"] = *report.split_matches_norm_form;
  if (report.witness) {
    j["witness"] = {rational_str(report.witness->first),
                    rational_str(report.witness->second)};
  }
  nlohmann::json symbols = nlohmann::json::object();
  for (const auto& [place, symbol] : report.symbols)
    symbols[place] = std::to_string(symbol);
  j["symbols"] = symbols;
  nlohmann::json summands = nlohmann::json::array();
  for (const SummandReport& s : report.summands) {
    summands.push_back({{"i", std::to_string(s.index)},
                        {"dim", std::to_string(s.dim)},
                        {"h10_sigma", std::to_string(s.hodge_sigma)},
                        {"h10_sigma_bar", std::to_string(s.hodge_sigma_bar)},
                        {"endo", s.endo}});
  }
  j["summands"] = summands;
  j["cplus_dim"] = report.cplus_dim.get_str();
  if (report.multiplicity) j["multiplicity"] = report.multiplicity->get_str();
  j["ball_dim"] = std::to_string(report.ball_dim);
  j["level"] = report.level == ReportLevel::exact ? "exact" : "fast";
  if (!report.exact_checks.empty()) {
    nlohmann::json checks = nlohmann::json::array();
    for (const ExactCheck& c : report.exact_checks)
      checks.push_back(
          {{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["exact_checks"] = checks;
  }
  return j.dump(2) + "\n";
}

}  // namespace halftwist
