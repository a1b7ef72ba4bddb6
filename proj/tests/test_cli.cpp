#include "negn/cli.hpp"

#include "negn/render.hpp"

#include <doctest.h>

#include <sstream>

using namespace negn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dim") {
  auto r = run({"dim", "--lambda", "1", "--tau", "1", "--symbolic"});
  CHECK(r.code == 0);
  CHECK(r.out == "N^2 - 1\n");

  CHECK(run({"dim", "--lambda", "1", "--tau", "1", "--n", "5"}).out == "24\n");
  CHECK(run({"dim", "--lambda", "", "--tau", "", "--symbolic"}).out == "1\n");
  CHECK(run({"dim", "--lambda", "1", "--tau", "1", "--symbolic", "--format",
             "latex"})
            .out == "N^{2}-1\n");

  auto j = Json::parse(run({"dim", "--lambda", "1", "--tau", "1", "--symbolic",
                            "--format", "json"})
                           .out);
  CHECK(j["polynomial"].dump() == R"({"2":"1","0":"-1"})");
  CHECK(j["degree"] == 2);
  CHECK(j["leading_coefficient"] == "1");

  auto jn = Json::parse(
      run({"dim", "--lambda", "4,2,1", "--tau", "3,1", "--n", "7", "--format",
           "json"})
          .out);
  CHECK(jn["n"] == 7);
  CHECK(jn["lambda"].dump() == "[4,2,1]");
}

TEST_CASE("dim usage errors") {
  auto low = run({"dim", "--lambda", "1", "--tau", "1", "--n", "2"});
  CHECK(low.code == kUsage);
  CHECK(low.err.find("n_min = 3") != std::string::npos);

  CHECK(run({"dim", "--lambda", "1", "--symbolic"}).code == kUsage);
  CHECK(run({"dim", "--lambda", "1,2", "--tau", "", "--symbolic"}).code ==
        kUsage);
  CHECK(run({"dim", "--lambda", "1", "--tau", "1"}).code == kUsage);
  CHECK(run({"dim", "--lambda", "1", "--tau", "1", "--n", "4", "--symbolic"})
            .code == kUsage);
  CHECK(run({"dim", "--lambda", "1", "--tau", "1", "--symbolic", "--format",
             "xml"})
            .code == kUsage);
  CHECK(run({}).code == kUsage);
  CHECK(run({"frobnicate"}).code == kUsage);
}

TEST_CASE("casimir") {
  CHECK(run({"casimir", "--lambda", "1", "--tau", "1", "--symbolic"}).out ==
        "2N\n");
  auto r = run({"casimir", "--lambda", "1", "--tau", "", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "24/5 (direct: 24/5, agree)\n");
  CHECK(run({"casimir", "--lambda", "", "--tau", "", "--symbolic"}).out ==
        "0\n");
  CHECK(run({"casimir", "--lambda", "2,1", "--tau", "", "--symbolic",
             "--format", "latex"})
            .out == "3N-\\frac{9}{N}\n");
  auto j = Json::parse(run({"casimir", "--lambda", "1", "--tau", "", "--n",
                            "5", "--format", "json"})
                           .out);
  CHECK(j["value"] == "24/5");
  CHECK(j["direct"] == "24/5");
  CHECK(j["agree"] == true);
}

TEST_CASE("verify") {
  auto p1 = run({"verify", "prop1", "--lambda", "4,2,1", "--tau", "3,1"});
  CHECK(p1.code == 0);
  CHECK(p1.out.find("holds, sign -1") != std::string::npos);
  CHECK(p1.out.find("summary: 1 checks, 1 hold, 0 fail") != std::string::npos);

  auto all = run({"verify", "all", "--random", "--seed", "42", "--max-area",
                  "5", "--count", "50", "--format", "json"});
  CHECK(all.code == 0);
  auto j = Json::parse(all.out);
  CHECK(j["summary"]["total"] == 150);
  CHECK(j["summary"]["holds"] == 150);
  CHECK(j["reports"][0]["identity"] == "prop1");
  CHECK(j["reports"][1]["identity"] == "prop2");
  CHECK(j["reports"][2]["identity"] == "z2");

  auto classic = run({"verify", "classic", "--lambda", "3,3,1"});
  CHECK(classic.code == 0);
  CHECK(classic.out.find("holds, sign -1") != std::string::npos);

  auto ct = run({"verify", "const-term", "--lambda", "2", "--tau", ""});
  CHECK(ct.code == 0);
  CHECK(ct.out.find("not applicable") != std::string::npos);

  auto latex = run({"verify", "z2", "--lambda", "2", "--tau", "1", "--format",
                    "latex"});
  CHECK(latex.code == 0);
  CHECK(latex.out.find("\\begin{tabular}") == 0);

  CHECK(run({"verify", "prop3", "--lambda", "1", "--tau", "1"}).code == kUsage);
  CHECK(run({"verify", "prop1", "--lambda", "1"}).code == kUsage);
  CHECK(run({"verify", "classic", "--lambda", "1", "--tau", "1"}).code ==
        kUsage);
  CHECK(run({"verify", "prop1", "--random", "--lambda", "1"}).code == kUsage);
}

TEST_CASE("verify output is deterministic") {
  std::vector<std::string> args{"verify", "all",  "--random", "--seed", "7",
                                "--max-area", "4", "--count", "20", "--format",
                                "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("table") {
  auto j = Json::parse(run({"table", "--max-area", "1", "--format", "json"}).out);
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][0]["lambda"].dump() == "[]");
  CHECK(j["rows"][0]["tau"].dump() == "[]");
  CHECK(j["rows"][1]["tau"].dump() == "[1]");
  CHECK(j["rows"][2]["lambda"].dump() == "[1]");
  CHECK(j["rows"][3]["dimension"].dump() == R"({"2":"1","0":"-1"})");
  CHECK(j["rows"][3]["casimir"].dump() == R"({"1":"2"})");

  auto text = run({"table", "--max-area", "2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("(1) | (1) | N^2 - 1 | 2N | ok | ok | ok") !=
        std::string::npos);

  auto trivial = run({"table", "--max-area", "0"});
  CHECK(trivial.out ==
        "lambda | tau | dim | casimir | prop1 | prop2 | z2\n"
        "() | () | 1 | 0 | ok | ok | ok\n");

  CHECK(run({"table", "--max-area", "1", "--format", "latex"}).code == 0);
  CHECK(run({"table", "--max-area", "-1"}).code == kUsage);
}
