#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "hopfrep/cli.hpp"
#include "json.hpp"

using hopfrep::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string data = HOPFREP_DATA_DIR;

}  // namespace

TEST_CASE("axioms") {
  auto r = invoke({"axioms"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.starts_with("PASS"));
    ++count;
  }
  CHECK(count == 10);
  auto j = nlohmann::json::parse(invoke({"--format", "json", "axioms"}).out);
  CHECK(j["all_hold"] == true);
  CHECK(j["axioms"].size() == 10);
}

TEST_CASE("normalize and reduce") {
  CHECK(invoke({"normalize", "--term", "mu . tau"}).out == "[2]->[1]: (x2 x1)\n");
  CHECK(invoke({"normalize", "--term", "mu . (id:1 * S) . delta"}).out == "[1]->[1]: (e)\n");
  CHECK(invoke({"reduce", "--n", "2", "--word", "x2 x1 x2^-1"}).out ==
        "-1*(x1 x2) + 1*(x2 x1)\n");
  CHECK(invoke({"reduce", "--n", "1", "--word", "x1^2", "--polarize", "right"}).out ==
        "2*(x1)\n");
  auto bad = invoke({"normalize", "--term", "mu . bogus"});
  CHECK(bad.code == 2);
  CHECK(bad.err.starts_with("error: parse error at 1:6"));
  CHECK(bad.out.empty());
}

TEST_CASE("rep-ideal") {
  auto r = invoke({"rep-ideal", "--group", data + "/z2.json", "--target", "torus:1", "--groebner"});
  CHECK(r.code == 0);
  CHECK(r.out.find("z1^2 - 1    # relator:0:entry:1,1") != std::string::npos);
  CHECK(r.out.find("t1^2 - 1") != std::string::npos);
  auto j = nlohmann::json::parse(
      invoke({"--format", "json", "rep-ideal", "--group", "free:2", "--target", "sl:2"}).out);
  CHECK(j["variables"].size() == 8);
  CHECK(j["ideal"].size() == 2);
  CHECK(invoke({"rep-ideal", "--group", "free:x", "--target", "sl:2"}).code == 2);
  CHECK(invoke({"rep-ideal", "--group", "free:1", "--target", "so:3"}).code == 2);
  CHECK(invoke({"rep-ideal", "--group", "free:1", "--target", "sl:2", "--order", "deglex"}).code ==
        2);
}

TEST_CASE("lie-rep-ideal, rep-count, cotangent") {
  auto lie = nlohmann::json::parse(invoke({"--format", "json", "lie-rep-ideal", "--source",
                                           "abelian:2", "--target", "sl2"})
                                       .out);
  CHECK(lie["variables"].size() == 6);
  CHECK(lie["ideal"].size() == 3);

  auto count = invoke({"rep-count", "--group", data + "/z2.json", "--finite", "sym:3"});
  CHECK(count.out.starts_with("4\n"));
  auto f2 = nlohmann::json::parse(
      invoke({"--format", "json", "rep-count", "--group", "free:2", "--finite", "sym:3"}).out);
  CHECK(f2["count"] == 36);
  CHECK(f2["points"].size() == 36);

  CHECK(invoke({"cotangent", "--target", "gl:2"}).out.starts_with("4\n"));
  CHECK(invoke({"cotangent", "--target", "torus:1"}).out.starts_with("1\n"));
}

TEST_CASE("invariance exit codes") {
  CHECK(invoke({"invariance", "--word", "x1 x2", "--group", "free:2", "--target", "sl:2"}).code ==
        0);
  auto entry =
      invoke({"invariance", "--observable", "x1_12", "--group", "free:2", "--target", "sl:2"});
  CHECK(entry.code == 1);
  CHECK(entry.out == "x1_12: not invariant\n");
  CHECK(invoke({"invariance", "--group", "free:2", "--target", "sl:2"}).code == 2);
  CHECK(invoke({"invariance", "--word", "x1", "--observable", "x1_11", "--group", "free:2",
                "--target", "sl:2"})
            .code == 2);
}

TEST_CASE("argument errors and help") {
  auto none = invoke({});
  CHECK(none.code == 2);
  CHECK(none.err.starts_with("error: "));
  CHECK(invoke({"axioms", "--nope"}).code == 2);
  CHECK(invoke({"--format", "xml", "axioms"}).code == 2);
  auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("rep-ideal") != std::string::npos);
  auto missing = invoke({"rep-ideal", "--group", "/nonexistent.json", "--target", "sl:2"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find('\n') == missing.err.size() - 1);
}

TEST_CASE("the installed binary reports exit codes") {
  auto status = [](const std::string& args) {
    std::string cmd = std::string(HOPFREP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("axioms") == 0);
  CHECK(status("invariance --observable x1_12 --group free:2 --target sl:2") == 1);
  CHECK(status("normalize --term \"mu .\"") == 2);
}
