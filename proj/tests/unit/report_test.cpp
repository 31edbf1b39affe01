#include <doctest.h>

#include <fstream>

#include "wordform/report/commands.hpp"
#include "wordform/word/construct.hpp"

using namespace wordform;

namespace {

std::string data(const std::string& name) { return std::string(WORDFORM_DATA_DIR) + "/groups/" + name; }

RunConfig config(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

}  // namespace

TEST_CASE("reports are deterministic and carry the schema version") {
  auto c = config("construct");
  c.n = 2;
  c.k = 4;
  c.d = 2;
  const auto a = render_json(run(c));
  const auto b = render_json(run(c));
  CHECK(a == b);
  const auto j = Json::parse(a);
  CHECK(j["schema_version"] == report_schema_version);
  CHECK(j["ok"] == true);
  CHECK(a.find("timings") == std::string::npos);
  c.timings = true;
  CHECK(render_json(run(c)).find("timings") != std::string::npos);
}

TEST_CASE("verify and stabilizer commands") {
  auto c = config("verify");
  c.group_file = data("s3.grp");
  c.k = 3;
  c.d = 1;
  const auto r = run(c);
  CHECK(r.ok);
  auto s = config("stabilizer");
  s.group_file = data("s3.grp");
  s.k = 2;
  s.action = "left-right";
  CHECK(run(s).ok);
}

TEST_CASE("group parameters command") {
  auto c = config("group-params");
  c.group_file = data("gl32.grp");
  const auto j = run(c).body;
  CHECK(j.dump().find("168") != std::string::npos);
}

TEST_CASE("grid: default rows pass, empty grid is empty, a corrupted row fails") {
  auto c = config("grid");
  c.format = "tsv";
  const auto r = run(c);
  CHECK(r.ok);
  std::size_t lines = 0;
  for (char ch : r.table) lines += ch == '\n';
  CHECK(lines == 1 + 2 * 3 * 2);
  c.n_values.clear();
  const auto e = run(c);
  CHECK(e.ok);
  CHECK(e.table.find('\n') == e.table.size() - 1);
  auto bad = config("grid");
  bad.corrupt_row = 3;
  const auto f = run(bad);
  CHECK_FALSE(f.ok);
  std::size_t failing = 0;
  for (const auto& row : f.body["rows"]) failing += row["pass"] == false;
  CHECK(failing == 1);
}

TEST_CASE("malformed input raises parse errors") {
  const std::string path = "malformed_group.grp";
  {
    std::ofstream out(path);
    out << "degree: 3\n(1 2 4)\n";
  }
  auto c = config("group-params");
  c.group_file = path;
  CHECK_THROWS_AS(run(c), ParseError);
  auto missing = config("group-params");
  missing.group_file = "no/such/file.grp";
  CHECK_THROWS(run(missing));
  auto unknown = config("frobnicate");
  CHECK_THROWS(run(unknown));
}

TEST_CASE("fp commands") {
  auto c = config("fp-sweep");
  c.lemma = "intersection";
  c.p = 2;
  c.k = 3;
  c.exhaustive = true;
  CHECK(run(c).ok);
  c.lemma = "dim-bound";
  c.q = 4;
  c.k = 2;
  CHECK(run(c).ok);
}
