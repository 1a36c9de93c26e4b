#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "quandle/cli.hpp"
#include "quandle/report.hpp"

using namespace quandle;

namespace {

struct Run {
  int code;
  Json json;
  std::string text;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  const int code = run_cli(args, out);
  const std::string text = out.str();
  return {code, Json::parse(text, nullptr, false), text};
}

}  // namespace

TEST_CASE("report layout") {
  Report r;
  r.command = "h2";
  r.context = Json{{"n", 9}, {"t", 4}};
  r.result = to_json(AbelianInvariants{6, {3, 3, 3}});
  CHECK(r.dump() ==
        R"({"command":"h2","context":{"n":9,"t":4},"result":{"rank":6,"torsion":[3,3,3]},"status":"ok"})");
  r.fail("NotAUnit", "t = 2 is not a unit modulo 4");
  CHECK(r.to_json()["error"]["kind"] == "NotAUnit");
  CHECK(r.to_json()["status"] == "error");
  CHECK(to_json(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(to_json(Integer(-7)) == -7);
}

TEST_CASE("h2 command") {
  const Run r = run({"h2", "--n", "9", "--t", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.json["result"] == Json::parse(R"({"rank":6,"torsion":[3,3,3]})"));
  CHECK(r.json["context"]["method"] == "formula");
  for (const char* method : {"eisermann", "chain"}) {
    const Run m = run({"h2", "--n", "9", "--t", "4", "--method", method});
    CHECK(m.json["result"] == r.json["result"]);
  }
  // output round-trips byte for byte
  CHECK(Json::parse(r.text).dump() + "\n" == r.text);
}

TEST_CASE("exit codes") {
  const Run unit = run({"h2", "--n", "4", "--t", "2"});
  CHECK(unit.code == kExitDomain);
  CHECK(unit.json["error"]["kind"] == "NotAUnit");
  const Run missing = run({"h2", "--n", "4"});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.json["error"]["kind"] == "ParseError");
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"h2", "--n", "4", "--t", "3", "--method", "magic"}).code == kExitUsage);
  const Run word = run({"normal-form", "--n", "4", "--t", "3", "--word", "e1^0"});
  CHECK(word.code == kExitUsage);
  const Run color = run({"normal-form", "--n", "4", "--t", "3", "--word", "e7"});
  CHECK(color.code == kExitDomain);
  CHECK(color.json["error"]["kind"] == "ColorOutOfRange");
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("normal-form command") {
  const Run r = run({"normal-form", "--n", "4", "--t", "3", "--word", "e2 e3", "--trace"});
  CHECK(r.code == kExitOk);
  CHECK(r.json["result"]["canonical"] == "e1 e2");
  CHECK(r.json["result"]["packed"] == Json::parse(R"({"v":[1,1],"a":1})"));
  CHECK(r.json["result"]["trace"].size() > 0);
  CHECK(r.json["result"]["trace"].back()["word"] == "e1 e2");
}

TEST_CASE("orbits and phi-table commands") {
  const Run o = run({"orbits", "--n", "9", "--t", "4"});
  CHECK(o.json["result"] == Json::parse(R"({"m":3,"connected":false,"orbits":[[0,3,6],[1,4,7],[2,5,8]]})"));
  const Run p = run({"phi-table", "--n", "4", "--t", "3"});
  CHECK(p.json["result"]["m"] == 2);
  CHECK(p.json["result"]["phi0"][3][3] == Json::parse("[-2,2]"));
  CHECK(p.json["result"]["phi0"].size() == 4);
}

TEST_CASE("axioms command") {
  const std::string good = "quandle_test_good.txt", bad = "quandle_test_bad.txt";
  std::ofstream(good) << "3\n0 2 1\n2 1 0\n1 0 2\n";
  std::ofstream(bad) << "2\n1 0\n1 0\n";
  const Run ok = run({"axioms", "--table", good});
  CHECK(ok.code == kExitOk);
  CHECK(ok.json["result"]["valid"] == true);
  CHECK(ok.json["result"]["orbits"] == Json::parse("[[0,1,2]]"));
  const Run fail = run({"axioms", "--table", bad});
  CHECK(fail.code == kExitDomain);
  CHECK(fail.json["result"]["violation"]["axiom"] == "idempotence");
  CHECK(fail.json["error"]["kind"] == "InvalidQuandle");
  CHECK(run({"axioms", "--table", "does-not-exist.txt"}).code == kExitUsage);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("verify command") {
  const Run r = run({"verify", "--n-max", "5", "--words", "20"});
  CHECK(r.code == kExitOk);
  CHECK(r.json["result"]["summary"]["failures"] == 0);
  CHECK(r.json["result"]["summary"]["cases"] == 9);
  const Run again = run({"verify", "--n-max", "5", "--words", "20"});
  CHECK(again.text == r.text);
}
