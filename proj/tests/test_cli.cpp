#include <doctest.h>

#include <sstream>

#include "altcf/cli.hpp"

using namespace altcf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("digits") {
  auto r = call({"digits", "cahen(1,1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.643410546288338\n");
  CHECK(call({"digits", "fermat", "--digits", "7"}).out == "0.7294270\n");
  auto j = call({"digits", "golden", "--digits", "10", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"digits\":\"0.6180339887\"") != std::string::npos);
}

TEST_CASE("continued fractions") {
  CHECK(call({"cf", "davison_shallit", "--terms", "11"}).out == "[0,1,1,1,2,3,8,27,224,6075,1361024]\n");
  CHECK(call({"cf", "cahen(2,1)", "--terms", "6"}).out == "[0,2,1,4,9,196]\n");
  CHECK(call({"cf", "rat=7/10"}).out == "[0,1,2,3]\n");
  CHECK(call({"cf", "kellogg_curtiss"}).code == 2);
}

TEST_CASE("series, pierce, construct, decompose, bfile") {
  auto s = call({"series", "typeII:A=2,3,4,5", "--depth", "3"});
  CHECK(s.code == 0);
  CHECK(s.out.find("3 11/30") != std::string::npos);
  CHECK(call({"pierce", "7/10"}).out == "[1,3,10] terminating\n");
  auto c = call({"construct", "M=1...", "--depth", "8"});
  CHECK(c.code == 0);
  CHECK(c.out.find("A   [1,2,3,4,9,28,225,6076,1361025]") != std::string::npos);
  auto d = call({"decompose", "inv_e"});
  CHECK(d.code == 0);
  CHECK(d.out.find("fails at index 3") != std::string::npos);
  CHECK(call({"decompose", "davison_shallit", "--depth", "4"}).out.find("M [1,1,1,1,1]") != std::string::npos);
  CHECK(call({"bfile", "cahen", "--stream", "s", "--count", "4"}).out == "0 1\n1 2\n2 3\n3 7\n");
}

TEST_CASE("measure") {
  auto m = call({"measure", "liouville_alt", "--schedule", "2", "--depth", "3"});
  CHECK(m.code == 0);
  CHECK(m.out.find("largest certified exponent: 5") != std::string::npos);
  CHECK(call({"measure", "primorial", "--depth", "3"}).out.find("exploratory") != std::string::npos);
  CHECK(call({"measure", "cahen", "--mu", "2", "--schedule", "1"}).code == 2);
}

TEST_CASE("verify exit status") {
  auto v = call({"verify", "identities", "--depth", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(call({"verify", "bogus"}).code == 2);
}

TEST_CASE("usage errors exit 2 with a message") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  auto r = call({"digits", "nosuchconstant"});
  CHECK(r.code == 2);
  CHECK(r.err.find("cahen") != std::string::npos);
  auto bad = call({"series", "typeI:B=3,2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("index 1") != std::string::npos);
}

TEST_CASE("inline spec errors carry position and index") {
  try {
    parse_inline_spec("typeII:A=2,3,1");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    REQUIRE(e.index());
    CHECK(*e.index() == 2);
    CHECK(e.position() == 13);
  }
  try {
    parse_inline_spec("typeI:B=1,x");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK_FALSE(e.index());
    CHECK(e.position() == 10);
  }
  CHECK_THROWS_AS(parse_inline_spec("M=1,0,2"), SpecError);
  CHECK_THROWS_AS(parse_inline_spec("quux=1"), SpecError);
  auto t = parse_inline_spec("M=2,1...");
  CHECK(t.construction->M(50) == 1);
}

TEST_CASE("output is deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{{"verify", "all", "--depth", "6", "--format", "json"},
                                                         {"cf", "cahen(1,2)", "--terms", "7"},
                                                         {"series", "fermat", "--format", "json"}}) {
    auto a = call(args);
    auto b = call(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}
