#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "halftwist/cli.hpp"
#include "halftwist/errors.hpp"
#include "halftwist/io.hpp"
#include "halftwist/ks.hpp"

using namespace halftwist;

namespace {

struct TempDir {
  std::filesystem::path dir;
  TempDir() {
    dir = std::filesystem::temp_directory_path() /
          ("halftwist-test-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter()++));
    std::filesystem::create_directories(dir);
  }
  ~TempDir() { std::filesystem::remove_all(dir); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name, const std::string& content) {
    std::string path = (dir / name).string();
    write_file(path, content);
    return path;
  }
  std::string path(const std::string& name) { return (dir / name).string(); }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string k_table_text() {
  return table_to_text(HodgeTable::trivial(CMType::standard({1})));
}

std::string weight2_text(long m) {
  return table_to_text(HodgeTable::weight2_generic(m));
}

std::string form_text(long d, int m) {
  std::vector<Rat> diag{ratio(-1)};
  for (int i = 1; i < m; ++i) diag.push_back(ratio(1));
  return form_to_text(QuadFormDiag(d, diag));
}

}  // namespace

TEST_CASE("validate: pass, fail, parse error") {
  TempDir tmp;
  std::string good = tmp.file("good.json", weight2_text(3));
  CliRun ok = run({"validate", good});
  CHECK(ok.code == 0);

  std::string broken = tmp.file("broken.json", R"({
  "half_degree": 1,
  "cm_type": [1],
  "weight": 2,
  "entries": [
    {"embedding": 1, "p": 2, "q": 0, "dim": 1},
    {"embedding": 2, "p": 0, "q": 2, "dim": 2}
  ]
})");
  CliRun bad = run({"validate", broken});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("conjugation-symmetry") != std::string::npos);

  std::string garbage = tmp.file("garbage.json", "this is not json\n");
  CHECK(run({"validate", garbage}).code == 2);
  CHECK(run({"validate", tmp.path("missing.json")}).code == 2);
}

TEST_CASE("twist writes the canonical half twist table") {
  TempDir tmp;
  std::string k_path = tmp.file("k.json", k_table_text());
  std::string out_path = tmp.path("half.json");
  CliRun r = run({"twist", k_path, "-1", "--out", out_path});
  REQUIRE(r.code == 0);
  HodgeTable half = table_from_text(read_file(out_path));
  CHECK(half.weight() == 1);
  CHECK(half.dim_at(1, 1, 0) == 1);
  CHECK(half.dim_at(2, 0, 1) == 1);
}

TEST_CASE("twist on an inadmissible table names the embedding") {
  TempDir tmp;
  std::string path = tmp.file("bad.json", R"({
  "half_degree": 1,
  "cm_type": [1],
  "weight": 2,
  "entries": [
    {"embedding": 1, "p": 0, "q": 2, "dim": 1},
    {"embedding": 2, "p": 2, "q": 0, "dim": 1}
  ]
})");
  CliRun r = run({"twist", path, "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("embedding 1") != std::string::npos);
}

TEST_CASE("round trips are byte stable on canonical files") {
  TempDir tmp;
  std::string canonical = weight2_text(4);
  std::string path = tmp.file("v.json", canonical);
  CHECK(table_to_text(table_from_text(read_file(path))) == canonical);

  // tate with n = 0 reproduces the file byte for byte.
  std::string out_path = tmp.path("same.json");
  CliRun r = run({"tate", path, "0", "--out", out_path});
  REQUIRE(r.code == 0);
  CHECK(read_file(out_path) == canonical);
}

TEST_CASE("ext and tensor-k emit parseable output") {
  TempDir tmp;
  std::string path = tmp.file("v.json", weight2_text(3));
  CliRun e = run({"ext", path, "2"});
  REQUIRE(e.code == 0);
  HodgeTable ext = table_from_text(e.out);
  CHECK(ext.weight() == 4);
  CHECK(ext.embedding_total(1) == 3);

  CliRun t = run({"tensor-k", path});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("\"diag\"") != std::string::npos);
  CHECK(t.out.find("\"conj\"") != std::string::npos);
}

TEST_CASE("ks command: fast report, exact report, input mismatch") {
  TempDir tmp;
  std::string form2 = tmp.file("form2.json", form_text(1, 2));
  std::string table2 = tmp.file("v2.json", weight2_text(2));
  std::string machine = tmp.path("report.json");

  CliRun fast = run({"ks", form2, table2, "--out", machine});
  REQUIRE(fast.code == 0);
  CHECK(fast.out.find("ball dimension: 1") != std::string::npos);
  CHECK(read_file(machine).find("\"split\": true") != std::string::npos);

  CliRun exact = run({"ks", form2, table2, "--level", "exact"});
  REQUIRE(exact.code == 0);
  CHECK(exact.out.find("exact checks") != std::string::npos);

  std::string form3 = tmp.file("form3.json", form_text(1, 3));
  CHECK(run({"ks", form3, table2}).code == 2);
}

TEST_CASE("quat command output") {
  CliRun nonsplit = run({"quat", "-3", "2"});
  REQUIRE(nonsplit.code == 0);
  CHECK(nonsplit.out.find("non-split") != std::string::npos);
  CHECK(nonsplit.out.find("symbol at 2: -1") != std::string::npos);
  CHECK(nonsplit.out.find("symbol at 3: -1") != std::string::npos);

  CliRun split = run({"quat", "-1", "2"});
  REQUIRE(split.code == 0);
  CHECK(split.out.find("split") != std::string::npos);
  CHECK(split.out.find("witness") != std::string::npos);

  CHECK(run({"quat", "0", "2"}).code == 2);
  CHECK(run({"quat", "1/2x", "2"}).code == 2);
}

TEST_CASE("unknown command and missing arguments are input errors") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"twist"}).code == 2);
}

TEST_CASE("table parser rejects unknown or malformed fields") {
  CHECK_THROWS_AS(table_from_text(R"({"half_degree": 1})"), input_error);
  CHECK_THROWS_AS(
      table_from_text(
          R"({"half_degree": 1, "cm_type": [1], "weight": 0, "entries": [], "extra": 1})"),
      input_error);
  CHECK_THROWS_AS(
      table_from_text(
          R"({"half_degree": 1, "cm_type": [1], "weight": 0.5, "entries": []})"),
      input_error);
  CHECK_THROWS_AS(form_from_text(R"({"d": 3, "diag": [1]})"), input_error);
  CHECK_NOTHROW(form_from_text(R"({"d": 3, "diag": ["1"]})"));
}
