#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "massey/cli.hpp"
#include "massey/constructions.hpp"
#include "massey/corpus.hpp"
#include "massey/json_io.hpp"

using namespace massey;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("massey_test_" + name);
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("table JSON round trip") {
  auto base = build("iwasawa_truncated");
  auto t = std::dynamic_pointer_cast<const TableAlgebra>(base);
  REQUIRE(t);
  auto j = table_to_json(*t);
  CHECK(j["format"] == "massey-table");
  auto back = table_from_json(Json::parse(j.dump()));
  CHECK(table_to_json(*back) == j);
  for (int k = 0; k <= 2; ++k) CHECK(cohomology_dimension(*back, k) == cohomology_dimension(*t, k));

  auto dual = poincare_dualize(truncate(extend_scalars(build("heisenberg_squared"), Field::adjoin_sqrt(2)), 3).algebra, 5);
  auto jd = table_to_json(*dual.algebra);
  CHECK(jd["field"]["adjoin_sqrt"] == "2");
  CHECK(table_to_json(*table_from_json(jd)) == jd);
}

TEST_CASE("malformed table JSON") {
  auto j = table_to_json(*std::dynamic_pointer_cast<const TableAlgebra>(build("iwasawa_truncated")));
  auto bad = j;
  bad["format"] = "other";
  CHECK_THROWS_AS(table_from_json(bad), std::invalid_argument);
  bad = j;
  bad["products"][0]["i"] = 999;
  CHECK_THROWS_AS(table_from_json(bad), std::invalid_argument);
  bad = j;
  bad.erase("degrees");
  CHECK_THROWS_AS(table_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(table_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("cli cohomology") {
  auto r = cli({"cohomology", "iwasawa_real", "--degree", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("dimension: 4") != std::string::npos);
  auto j = Json::parse(cli({"cohomology", "iwasawa_real", "--degree", "2", "--json"}).out);
  CHECK(j["dimension"] == 8);
  CHECK(j["classes"].size() == 8);
  auto e = Json::parse(cli({"cohomology", "quadruple", "--degree", "8", "--adjoin-sqrt", "-1", "--json"}).out);
  CHECK(e["dimension"] == 4);
  CHECK(e["field"] == "Q(sqrt(-1))");
}

TEST_CASE("cli massey verdicts") {
  auto j = Json::parse(cli({"massey", "iwasawa_complex", "--classes", "[phi1],[phi1],[phi2]", "--json"}).out);
  CHECK(j["well_defined"] == true);
  CHECK(j["trivial"] == "no");
  CHECK(j["witness"].is_null());
  CHECK_FALSE(j["obstruction"].is_null());

  auto q = Json::parse(cli({"massey", "quadruple", "--classes", "[x],[y],[y],[x]", "--json"}).out);
  CHECK(q["trivial"] == "no");
  CHECK(q["obstruction"]["status"] == "no_solution");

  auto qi = Json::parse(cli({"massey", "quadruple", "--classes", "[x],[y],[y],[x]", "--adjoin-sqrt", "-1", "--json"}).out);
  CHECK(qi["trivial"] == "yes");
  CHECK(qi["witness"]["parameters"]["a1_2_v1"] == "s");

  auto text = cli({"massey", "quadruple", "--classes", "[x],[y],[y],[x]"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("no root") != std::string::npos);
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"massey", "iwasawa_real", "--classes", "[eta5],[eta1],[eta1]"}).code == kExitUsage);
  CHECK(cli({"massey", "iwasawa_real", "--classes", "[0],[eta1],[eta1]"}).code == kExitUsage);
  CHECK(cli({"massey", "iwasawa_real", "--classes", "[eta1],[eta1]"}).code == kExitUsage);
  CHECK(cli({"massey", "iwasawa_real", "--classes", "[eta1],[eta1],[zeta]"}).code == kExitUsage);
  CHECK(cli({"massey", "quadruple@4", "--classes", "[x],[y],[y]"}).code == kExitUsage);
  CHECK(cli({"cohomology", "iwasawa_real", "--degree", "1", "--adjoin-sqrt", "9"}).code == kExitUsage);
  CHECK(cli({"cohomology", "iwasawa_complex", "--degree", "1", "--adjoin-sqrt", "2"}).code == kExitUsage);
  CHECK(cli({"cohomology", "/nonexistent/file", "--degree", "1"}).code == kExitUsage);
  CHECK(cli({"corpus", "show", "nope"}).code == kExitUsage);
  CHECK(cli({"dualize", "quadruple", "-o", "-"}).code == kExitUsage);

  auto bad = temp_path("bad.cdga");
  write(bad, "[generators]\nw: 7\nx: 2\n[differential]\nd w = x\n");
  auto r = cli({"check", bad.string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find(bad.string() + ":5:") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("cli writes algebras") {
  auto t = temp_path("trunc.json");
  REQUIRE(cli({"truncate", "iwasawa_real", "3", "-o", t.string()}).code == kExitOk);
  auto j = Json::parse(std::ifstream(t));
  CHECK(j["format"] == "massey-table");
  CHECK(cli({"check", t.string()}).code == kExitOk);
  auto c = Json::parse(cli({"cohomology", t.string(), "--degree", "1", "--json"}).out);
  CHECK(c["dimension"] == 4);

  auto d = temp_path("dual.json");
  REQUIRE(cli({"dualize", t.string(), "-o", d.string()}).code == kExitOk);
  auto dj = Json::parse(cli({"check", d.string(), "--json"}).out);
  CHECK(dj["ok"] == true);
  CHECK(dj["top_degree"] == 5);

  auto e = temp_path("ext.cdga");
  REQUIRE(cli({"extend", "heisenberg_squared", "--adjoin-sqrt", "-1", "-o", e.string()}).code == kExitOk);
  auto m = Json::parse(cli({"massey", e.string(), "--classes", "[x1],[x1],[x2]", "--json"}).out);
  CHECK(m["field"] == "Q(sqrt(-1))");
  CHECK(m["trivial"] == "no");

  auto s = cli({"extend", "iwasawa_truncated", "--adjoin-sqrt", "2", "-o", "-"});
  CHECK(s.code == kExitOk);
  CHECK(Json::parse(s.out)["field"]["adjoin_sqrt"] == "2");
  for (const auto& p : {t, d, e}) std::filesystem::remove(p);
}

TEST_CASE("cli corpus") {
  auto r = cli({"corpus", "list"});
  CHECK(r.code == kExitOk);
  for (const auto& e : corpus_entries()) CHECK(r.out.find(e.id) != std::string::npos);
  auto s = cli({"corpus", "show", "quadruple@-1"});
  CHECK(s.out == corpus_document("quadruple@-1"));
  CHECK(cli({"corpus", "show", "iwasawa_truncated"}).code == kExitUsage);
}
