#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "formk1/cli.hpp"
#include "formk1/serialize.hpp"
#include "formk1/verify.hpp"

using nlohmann::json;
using formk1::cli::kExitBadInput;
using formk1::cli::kExitCheckFailed;
using formk1::cli::kExitOk;

namespace {

struct Run {
  int code;
  std::string text;
  json body() const { return json::parse(text); }
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "formk1");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  int code = formk1::cli::run(static_cast<int>(argv.size()), argv.data(), out);
  return {code, out.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("gq member with a descriptor and a matrix file") {
  auto file = temp_file("formk1_cli_m.json", R"({"n":1,"entries":[["1","1"],["0","1"]]})");
  auto r = cli({"gq", "member", "--ring", R"({"kind":"ModularInt","m":4,"involution":"trivial","lambda":"3"})",
                "--matrix", file});
  CHECK(r.code == kExitOk);
  CHECK(r.body() == json{{"member", true}});

  // [[1,1],[0,1]] over Z with lambda = 1: sigma* psi sigma has 2 off the diagonal.
  auto f = cli({"gq", "member", "--ring", "Z", "--lambda", "1", "--matrix", R"([["1","1"],["0","1"]])"});
  CHECK(f.code == kExitCheckFailed);
  CHECK(f.body() == json{{"member", false}});
}

TEST_CASE("trunc commands") {
  auto d = cli({"trunc", "decomp", "--ring", "Z", "--t", "3", "--p", "1+X+X^2"});
  CHECK(d.code == kExitOk);
  CHECK(d.body() == json{{"a", {"1", "1", "0"}}});

  auto s = cli({"trunc", "split", "--ring", "Z", "--t", "3", "--p", "1+X", "--r", "1"});
  CHECK(s.body() == json{{"constant", "1"}, {"Q", "1-X"}});

  auto k = cli({"trunc", "descent", "--ring", "Z/4", "--t", "2", "--u", "1+2X", "--k", "2"});
  CHECK(k.code == kExitCheckFailed);
  CHECK(k.body()["error"]["kind"] == "KNotInvertible");

  auto h = cli({"trunc", "descent", "--ring", "Z/4", "--t", "2", "--u", "1+2X", "--k", "3"});
  CHECK(h.body()["error"]["kind"] == "HypothesisFailed");

  auto one = cli({"trunc", "descent", "--ring", "Z/9", "--t", "2", "--u", "1"});
  CHECK(one.code == kExitOk);
  CHECK(one.body() == json{{"Q", "0"}});
}

TEST_CASE("form, ring and generator commands") {
  auto v = cli({"form", "validate", "--ring", "Z/4", "--form", "min"});
  CHECK(v.code == kExitOk);
  CHECK(v.body()["valid"] == true);

  auto bad = cli({"form", "validate", "--ring", "Z/4", "--form", R"({"mode":"explicit","elements":["1"]})"});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(bad.body()["valid"] == false);

  CHECK(cli({"ring", "check", "--ring", "(Z/5)[i]"}).code == kExitOk);

  auto g = cli({"gq", "gen", "--ring", "Z/4", "--family", "QE", "--n", "2", "--i", "1", "--j", "2", "--a", "1"});
  CHECK(g.code == kExitOk);
  json entries{{"1", "1", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "3", "1"}};
  CHECK(g.body()["matrix"]["entries"] == entries);
  CHECK(g.body()["member"] == true);

  auto c = cli({"gq", "conditions", "--ring", "Z/4", "--form", "max", "--matrix", g.body()["matrix"].dump()});
  CHECK(c.code == kExitOk);
  CHECK(c.body()["quadratic"] == true);
}

TEST_CASE("word, excision and reduction commands") {
  std::string word = R"({"n":2,"factors":[{"family":"QE","i":1,"j":2,"a":"2"}]})";
  auto e = cli({"word", "eval", "--ring", "Z/4", "--word", word});
  CHECK(e.code == kExitOk);
  CHECK(e.body()["matrix"]["entries"][0][1] == "2");

  std::string rel =
      R"({"n":2,"factors":[{"conjugator":{"n":2,"factors":[{"family":"QR","i":1,"j":2,"a":"1"}]},)"
      R"("core":{"family":"QE","i":1,"j":2,"a":"2"}}]})";
  auto l = cli({"word", "lift", "--ring", "Z/4", "--ideal", "2", "--word", rel});
  CHECK(l.code == kExitOk);
  CHECK(l.body()["foldAgrees"] == true);

  auto x = cli({"excision", "roundtrip", "--ring", "Z/4", "--ideal", "2"});
  CHECK(x.code == kExitOk);
  CHECK(x.body()["exhaustive"] == true);
  CHECK(x.body()["roundtrip"] == true);

  auto u = cli({"reduce", "upper", "--ring", "Z", "--matrix", R"([["1","1"],["0","1"]])"});
  CHECK(u.code == kExitOk);
  CHECK(u.body()["alpha"] == json{{"1"}});
  CHECK(u.body()["verified"] == true);

  auto ni = cli({"reduce", "corner", "--ring", "Z", "--matrix", R"([["2","1"],["1","0"]])"});
  CHECK(ni.code == kExitCheckFailed);
  CHECK(ni.body().contains("error"));
}

TEST_CASE("kopeiko commands") {
  std::string data = R"({"n":1,"a":[["2"]],"b":[["2"]],"c":[["2"]]})";
  auto v = cli({"kopeiko", "validate", "--ring", "Z/4", "--lambda", "3", "--data", data});
  CHECK(v.code == kExitOk);
  CHECK(v.body() == json{{"valid", true}});

  auto bad = cli({"kopeiko", "validate", "--ring", "Z/4", "--lambda", "3", "--data",
                  R"({"n":1,"a":[["2"]],"b":[["2"]],"c":[["1"]]})"});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(bad.body()["failingCondition"] == 3);

  auto b = cli({"kopeiko", "build", "--ring", "Z/4", "--lambda", "3", "--data", data});
  CHECK(b.code == kExitOk);
  CHECK(b.body()["matrix"]["entries"] == json::array({json::array({"1+2X", "2X"}), json::array({"2X", "1+2X"})}));

  auto r = cli({"kopeiko", "reduce", "--ring", "Z/4", "--lambda", "3", "--data", data});
  CHECK(r.code == kExitOk);
  CHECK(r.body()["reduction"]["alpha"] == json{{"1+2X"}});
  CHECK(r.body()["verified"] == true);
}

TEST_CASE("graded commands") {
  auto e = cli({"graded", "eval", "--ring", "Z", "--b", "2+3Y", "--a", "5"});
  CHECK(e.code == kExitOk);
  CHECK(e.body()["value"] == json{{"components", {{"0", "2"}, {"1", "15"}}}});

  auto j = cli({"graded", "eval", "--ring", "Z", "--b", R"({"components":{"0":"2","1":"3"}})", "--a", "0"});
  CHECK(j.body()["text"] == "2");

  auto d = cli({"graded", "dilate", "--ring", "Z", "--a", "2", "--matrix", R"([["1","Y"],["0","1"]])"});
  CHECK(d.code == kExitOk);
  CHECK(d.body()["matrix"]["entries"][0][1] == "2Y");

  auto deg = cli({"graded", "eval", "--ring", "Z", "--b", "2+3Y", "--a", "Y"});
  CHECK(deg.code == kExitCheckFailed);
  CHECK(deg.body()["error"]["kind"] == "DegreeError");
}

TEST_CASE("malformed input exits 2 with a JSON error") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"nosuch"},
           {"gq"},
           {"gq", "member", "--ring", "Z"},
           {"gq", "member", "--ring", "Q", "--matrix", "[[\"1\"]]"},
           {"gq", "member", "--ring", "Z", "--matrix", "[[1,2"},
           {"gq", "member", "--ring", "Z", "--matrix", R"({"n":2,"entries":[["1","0"],["0","1"]]})"},
           {"gq", "gen", "--ring", "Z", "--family", "QX", "--a", "1"},
           {"trunc", "decomp", "--ring", "Z", "--t", "x", "--p", "1"},
           {"verify", "--suite", "99"},
       }) {
    auto r = cli(args);
    INFO(r.text);
    CHECK(r.code == kExitBadInput);
    CHECK(r.body().contains("error"));
  }
}

TEST_CASE("help, --out and --pretty") {
  auto h = cli({"--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.text.find("verify") != std::string::npos);

  auto path = (std::filesystem::temp_directory_path() / "formk1_cli_out.json").string();
  auto r = cli({"trunc", "decomp", "--ring", "Z", "--t", "3", "--p", "1+X+X^2", "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(r.text.empty());
  std::ifstream in(path);
  json written;
  in >> written;
  CHECK(written == json{{"a", {"1", "1", "0"}}});

  auto p = cli({"gq", "gen", "--ring", "Z", "--family", "QE", "--n", "2", "--a", "3", "--pretty"});
  CHECK(p.code == kExitOk);
  CHECK(p.text.find("member: true") != std::string::npos);
  CHECK(p.text.find("1  3   0  0") != std::string::npos);
}

TEST_CASE("verify is deterministic for a fixed seed") {
  auto a = cli({"verify", "--seed", "42"});
  auto b = cli({"verify", "--seed", "42", "--sequential"});
  CHECK(a.code == kExitOk);
  CHECK(a.text == b.text);
  json report = a.body();
  CHECK(report["seed"] == 42);
  CHECK(report["suites"].size() == static_cast<std::size_t>(formk1::kSuiteCount));
  for (const auto& s : report["suites"]) CHECK(s["status"] == "pass");

  auto one = cli({"verify", "--suite", "9", "--seed", "7"});
  CHECK(one.body()["suites"].size() == 1);
  CHECK(one.body()["suites"][0]["name"] == "torsion_descent");
}

TEST_CASE("FORMK1_SEED sets the default seed") {
  setenv("FORMK1_SEED", "1234", 1);
  auto env = cli({"verify", "--suite", "1"});
  auto flag = cli({"verify", "--suite", "1", "--seed", "99"});
  setenv("FORMK1_SEED", "zzz", 1);
  auto bad = cli({"verify", "--suite", "1"});
  unsetenv("FORMK1_SEED");
  CHECK(env.body()["seed"] == 1234);
  CHECK(flag.body()["seed"] == 99);
  CHECK(bad.code == kExitBadInput);
}
