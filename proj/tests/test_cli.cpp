#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "bausteine/cli.hpp"

using namespace bausteine;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "", std::optional<std::string> env = std::nullopt) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err, env);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("reduce") {
  auto r = run({"reduce", "S K K x"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "x\n");
  r = run({"reduce", "--trace", "S K K x"});
  CHECK(r.out == "1 S / K x (K x)\n2 K / x\nOUTCOME NormalForm\nx\n");
  r = run({"--trace", "reduce", "S K K x"});
  CHECK(r.out == "1 S / K x (K x)\n2 K / x\nOUTCOME NormalForm\nx\n");
}

TEST_CASE("reduce: errors and resource bounds") {
  auto r = run({"reduce", "S (K"});
  CHECK(r.code == cli::kExitInputError);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
  r = run({"--max-steps", "3", "reduce", "S S K (S S K) (S S K)"});
  CHECK(r.code == cli::kExitResourceBound);
  CHECK(r.out == "OUTCOME StepLimit\n");
  r = run({"--strategy", "applicative", "--detect-cycles", "reduce", "S I I (S I I)"});
  CHECK(r.code == cli::kExitResourceBound);
  CHECK(r.out == "OUTCOME CycleDetected 5\n");
  r = run({"reduce", "K y (S I I (S I I))"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "y\n");
}

TEST_CASE("reduce: naming profiles") {
  CHECK(run({"--profile", "schoenfinkel", "reduce", "C x y"}).out == "x\n");
  CHECK(run({"reduce", "C f x y"}).out == "f y x\n");
  CHECK(run({"--profile", "schoenfinkel", "reduce", "T f x y"}).out == "f y x\n");
  CHECK(run({"--profile", "nobody", "reduce", "x"}).code == cli::kExitInputError);
}

TEST_CASE("max steps: flag beats the environment") {
  CHECK(run({"reduce", "K (K x y) z"}, "", "1").code == cli::kExitResourceBound);
  CHECK(run({"--max-steps", "5", "reduce", "K (K x y) z"}, "", "1").out == "x\n");
  CHECK(run({"reduce", "x"}, "", "abc").code == cli::kExitInputError);
  CHECK(run({"--max-steps", "0", "reduce", "x"}).code == cli::kExitInputError);
}

TEST_CASE("abstract") {
  CHECK(run({"abstract", "x", "x"}).out == "S K K\n");
  CHECK(run({"abstract", "f", "x", "f x x"}).out == "S S (K (S K K))\n");
  CHECK(run({"abstract", "--alg", "naive", "x", "f x"}).out == "S (K f) (S K K)\n");
  CHECK(run({"abstract", "x", "x", "x"}).code == cli::kExitInputError);
  CHECK(run({"abstract", "X", "x"}).code == cli::kExitInputError);
}

TEST_CASE("church") {
  auto r = run({"church", "add", "2", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(lines(r.out).back() == "decoded 5");
  CHECK(lines(run({"church", "mul", "3", "4"}).out).back() == "decoded 12");
  r = run({"church", "encode", "0"});
  CHECK(r.out == "K (S K K)\ndecoded 0\n");
  CHECK(run({"church", "add", "2"}).code == cli::kExitInputError);
  CHECK(run({"church", "pow", "2", "3"}).code == cli::kExitInputError);
}

TEST_CASE("transforms") {
  auto r = run({"transforms", "2"});
  CHECK(r.out == "3\nk=1 map=11 S S (K (S K K))\nk=2 map=12 S K K\nk=2 map=21 S (S (K S) (S (K K) S)) (K K)\n");
  CHECK(lines(run({"transforms", "4"}).out).front() == "75");
  CHECK(run({"transforms", "7"}).code == cli::kExitInputError);
}

TEST_CASE("verify-identities") {
  auto r = run({"verify-identities"});
  CHECK(r.code == cli::kExitOk);
  CHECK(lines(r.out).back().rfind("SUMMARY passed=", 0) == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("epr") {
  const std::string file =
      "forall x. P(x) & ~P(x)\n"
      "\n"
      "exists x. exists y. forall z. R(x,z) & ~R(y,z)\n"
      "forall y. exists x. R(x,y)\n";
  auto r = run({"epr", "-"}, file);
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "1 UNSAT\n3 SAT\n4 OUTOFCLASS\n");
  r = run({"epr", "-"}, "exists x. P(f(x))\nexists x. P(x)\n");
  CHECK(r.code == cli::kExitInputError);
  CHECK(r.out == "1 ERROR\n2 SAT\n");
  CHECK(run({"epr", "/nonexistent/file"}).code == cli::kExitInputError);
}

TEST_CASE("repl") {
  auto r = run({"repl"}, ":def M = K\nM a b\n:trace on\nK a b\n:def M = S\nQ\nS K K y\n:quit\nx\n");
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "a\n1 K / a\nOUTCOME NormalForm\na\n1 S / K y (K y)\n2 K / y\nOUTCOME NormalForm\ny\n");
  CHECK(r.err.find("redefined M") != std::string::npos);
  CHECK(r.err.find("unknown name 'Q'") != std::string::npos);
  CHECK(run({"repl"}, ":def m = K\n").err.find("error") != std::string::npos);
}

TEST_CASE("json-lines output is one object per line with kind and payload") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--output", "json-lines", "reduce", "--trace", "S K K x"},
           {"--output", "json-lines", "transforms", "3"},
           {"--output", "json-lines", "church", "add", "1", "1"},
           {"--output", "json-lines", "verify-identities"},
       }) {
    const auto r = run(args);
    CHECK(r.code == cli::kExitOk);
    const auto ls = lines(r.out);
    CHECK_FALSE(ls.empty());
    for (const auto& l : ls) {
      CAPTURE(l);
      const auto j = nlohmann::json::parse(l);
      CHECK(j.is_object());
      CHECK(j.contains("kind"));
      CHECK(j.contains("payload"));
    }
  }
  const auto r = run({"--output", "json-lines", "reduce", "S K K x"});
  CHECK(nlohmann::json::parse(r.out)["payload"]["term"] == "x");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitInputError);
  CHECK(run({"frobnicate"}).code == cli::kExitInputError);
  CHECK(run({"--strategy", "sideways", "reduce", "x"}).code == cli::kExitInputError);
}
