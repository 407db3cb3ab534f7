#include "halftwist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

#include "halftwist/errors.hpp"
#include "halftwist/io.hpp"
#include "halftwist/ks.hpp"
#include "halftwist/quat.hpp"
#include "halftwist/selftest.hpp"

namespace halftwist {

namespace {

constexpr std::uint64_t kDefaultSeed = 287350;

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Exact half twists of CM Hodge structures and the spin decomposition "
      "of weight-2 Kuga-Satake varieties",
      "halftwist"};
  app.require_subcommand(1);

  std::string table_path, form_path, out_path;
  long twist_n = 0, tate_n = 0;
  long ext_i = 0;
  long bound = 50;
  int exact_cap = 5;
  std::string level = "fast";
  std::string a_str, b_str;
  std::uint64_t seed = kDefaultSeed;

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "Check the invariants of a table file");
  cmd_validate->add_option("table", table_path)->required();

  CLI::App* cmd_twist =
      app.add_subcommand("twist", "Apply the half twist V_{n/2}");
  cmd_twist->add_option("table", table_path)->required();
  cmd_twist->add_option("n", twist_n)->required();
  cmd_twist->add_option("--out", out_path, "write the result here");

  CLI::App* cmd_tate = app.add_subcommand("tate", "Apply the Tate twist V(n)");
  cmd_tate->add_option("table", table_path)->required();
  cmd_tate->add_option("n", tate_n)->required();
  cmd_tate->add_option("--out", out_path);

  CLI::App* cmd_ext =
      app.add_subcommand("ext", "i-th exterior power over the CM field");
  cmd_ext->add_option("table", table_path)->required();
  cmd_ext->add_option("i", ext_i)->required()->check(CLI::NonNegativeNumber);
  cmd_ext->add_option("--out", out_path);

  CLI::App* cmd_tensor = app.add_subcommand(
      "tensor-k", "Eigen-submodules of the tensor with the weight-1 CM "
                  "structure on K");
  cmd_tensor->add_option("table", table_path)->required();
  cmd_tensor->add_option("--out", out_path);

  CLI::App* cmd_ks = app.add_subcommand(
      "ks", "Spin decomposition report for a weight-2 table and its form");
  cmd_ks->add_option("form", form_path)->required();
  cmd_ks->add_option("table", table_path)->required();
  cmd_ks->add_option("--level", level)
      ->check(CLI::IsMember({"fast", "exact"}));
  cmd_ks->add_option("--bound", bound, "norm-equation search bound")
      ->check(CLI::PositiveNumber);
  cmd_ks->add_option("--exact-cap", exact_cap,
                     "largest m the exact level will attempt");
  cmd_ks->add_option("--out", out_path, "write the machine report here");

  CLI::App* cmd_quat = app.add_subcommand(
      "quat", "Classify the quaternion algebra (a, b) over Q");
  cmd_quat->add_option("a", a_str)->required();
  cmd_quat->add_option("b", b_str)->required();
  cmd_quat->add_option("--bound", bound)->check(CLI::PositiveNumber);

  CLI::App* cmd_selftest =
      app.add_subcommand("selftest", "Seeded randomized property suite");
  cmd_selftest->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_validate->parsed()) {
      HodgeTable t = table_from_text(read_file(table_path));
      ValidationReport report = validate(t);
      out << report.str();
      return report.passed() ? 0 : 1;
    }

    if (cmd_twist->parsed()) {
      HodgeTable t = table_from_text(read_file(table_path));
      emit(table_to_text(half_twist(t, static_cast<int>(twist_n))), out_path,
           out);
      return 0;
    }

    if (cmd_tate->parsed()) {
      HodgeTable t = table_from_text(read_file(table_path));
      emit(table_to_text(tate_twist(t, static_cast<int>(tate_n))), out_path,
           out);
      return 0;
    }

    if (cmd_ext->parsed()) {
      HodgeTable t = table_from_text(read_file(table_path));
      emit(table_to_text(ext_power_K(t, ext_i)), out_path, out);
      return 0;
    }

    if (cmd_tensor->parsed()) {
      HodgeTable t = table_from_text(read_file(table_path));
      TensorHalfParts parts = tensor_K_halfmodule(t);
      nlohmann::json both;
      both["diag"] = nlohmann::json::parse(table_to_text(parts.diag));
      both["conj"] = nlohmann::json::parse(table_to_text(parts.conj));
      emit(both.dump(2) + "\n", out_path, out);
      return 0;
    }

    if (cmd_ks->parsed()) {
      QuadFormDiag form = form_from_text(read_file(form_path));
      HodgeTable t = table_from_text(read_file(table_path));
      ReportLevel lvl =
          level == "exact" ? ReportLevel::exact : ReportLevel::fast;
      KSReport report = full_report(form, t, lvl, bound, exact_cap);
      out << render_text(report);
      if (!out_path.empty()) write_file(out_path, render_machine_json(report));
      return 0;
    }

    if (cmd_quat->parsed()) {
      QuatAlg alg(parse_rational(a_str), parse_rational(b_str));
      out << "(" << rational_str(alg.a) << ", " << rational_str(alg.b)
          << ") over Q\n";
      for (const Place& v : relevant_places(alg.a, alg.b))
        out << "  symbol at " << v.str() << ": "
            << (hilbert_symbol(alg.a, alg.b, v) > 0 ? "+1" : "-1") << "\n";
      bool split = is_split(alg);
      out << "  " << (split ? "split" : "non-split (division algebra)")
          << "\n";
      Rat neg_a = -alg.a;
      if (sgn(neg_a) > 0 && neg_a.get_den() == 1 &&
          neg_a.get_num().fits_slong_p() &&
          is_squarefree(neg_a.get_num().get_si())) {
        long d = neg_a.get_num().get_si();
        if (auto witness = norm_eq_search(alg.b, d, bound)) {
          out << "  witness: " << rational_str(witness->first) << "^2 + " << d
              << " * " << rational_str(witness->second)
              << "^2 = " << rational_str(alg.b) << "\n";
        } else {
          out << "  no norm witness with height <= " << bound
              << (split ? " (search bound too small)" : " (consistent)")
              << "\n";
        }
      }
      return 0;
    }

    if (cmd_selftest->parsed()) {
      SelfTestResult result = run_selftest(seed);
      out << result.log;
      return result.failures == 0 ? 0 : 1;
    }
  } catch (const admissibility_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const field_mismatch_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no command dispatched\n";
  return 2;
}

}  // namespace halftwist
