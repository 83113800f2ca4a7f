#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "cli_paths.hpp"
#include "doctest.h"
#include "json.hpp"
#include "proc.hpp"

namespace {

ProcResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), BARYSTRAT_CLI_PATH);
  return run_process(args);
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("analyze end to end") {
  ProcResult r = cli({"analyze", "--rho-over-4pi", "9/8", "--alpha", "-1/2,-1/2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("maximal strata (sorted): S(0;1,2), S(1;)") != std::string::npos);
  CHECK(r.out.find("contractible: no") != std::string::npos);
  CHECK(r.out.find("S(1;) [user S(1;)]: degree 2, RegularStratum") != std::string::npos);
  CHECK(r.out.find("verdict: SolvableMinMax") != std::string::npos);
}

TEST_CASE("analyze exits 2 on a singular rho") {
  ProcResult r = cli({"analyze", "--rho-over-4pi", "3/2", "--alpha", "-1/2"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("rho is a singular value (Definition 1.1)") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("usage errors name the offending flag and exit 3") {
  ProcResult r = cli({"analyze", "--rho-over-4pi", "pi"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("--rho-over-4pi") != std::string::npos);
  CHECK(r.err.find("4*pi") != std::string::npos);

  r = cli({"analyze"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("--rho-over-4pi") != std::string::npos);

  r = cli({"analyze", "--rho-over-4pi", "1", "--alpha", "-1/2,oops"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("--alpha") != std::string::npos);

  r = cli({"frobnicate"});
  CHECK(r.exit_code == 3);

  r = cli({"analyze", "--rho-over-4pi", "1", "--bogus"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("--bogus") != std::string::npos);

  r = cli({"analyze", "--rho", "4.7"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("4*pi") != std::string::npos);

  r = cli({"threshold", "--rho-over-4pi", "9/8", "--alpha", "-1/2"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("--index") != std::string::npos);
}

TEST_CASE("scan prints the interval table") {
  ProcResult r = cli({"scan", "--rho-max", "2", "--alpha", "-1/2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("(0, 1/2): EmptyCoercive") != std::string::npos);
  CHECK(r.out.find("(1/2, 1): ContractibleInconclusive") != std::string::npos);
  CHECK(r.out.find("(1, 3/2): SolvableMinMax  witnesses: S(1;) deg 2") != std::string::npos);
  CHECK(r.out.find("(3/2, 2): ContractibleInconclusive") != std::string::npos);
}

TEST_CASE("singular lists the values up to the bound") {
  ProcResult r = cli({"singular", "--rho-max", "2", "--alpha", "-1/2,-1/3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1/2, 2/3, 1, 7/6, 3/2, 5/3, 2\n");
}

TEST_CASE("threshold prints the exact value and a labeled approximation") {
  ProcResult r = cli({"threshold", "--rho-over-4pi", "9/8", "--alpha", "-1/2", "--index", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("alpha* = -7/8 (-0.875~)") != std::string::npos);

  r = cli({"threshold", "--rho-over-4pi", "3/2", "--index", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("alpha* = -1/2 (-0.5~)") != std::string::npos);

  r = cli({"threshold", "--rho-over-4pi", "3/2", "--alpha", "-1/2", "--index", "2"});
  CHECK(r.exit_code == 2);  // rho singular for the fixed weights alone
}

TEST_CASE("graph writes DOT to a file or stdout") {
  const std::string path = "/tmp/barystrat_cli_graph_test.dot";
  std::remove(path.c_str());
  ProcResult r =
      cli({"graph", "--rho-over-4pi", "9/8", "--alpha", "-1/2,-1/2", "--dot", path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::string dot = slurp(path);
  CHECK(dot.find("\"S(0;1)\" -> \"S(1;)\";") != std::string::npos);
  std::remove(path.c_str());

  r = cli({"graph", "--rho-over-4pi", "5/2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "digraph sgraph {\n"
        "  \"S(1;)\";\n"
        "  \"S(2;)\";\n"
        "  \"S(1;)\" -> \"S(2;)\";\n"
        "}\n");
}

TEST_CASE("cap violations exit 4") {
  ProcResult r =
      cli({"analyze", "--rho-over-4pi", "9/8", "--alpha", "-1/2,-1/2", "--cap", "2"});
  CHECK(r.exit_code == 4);
}

TEST_CASE("json output parses and matches the text verdict") {
  ProcResult text = cli({"analyze", "--rho-over-4pi", "13/8", "--alpha", "-1/2,-1/4"});
  ProcResult jdoc =
      cli({"analyze", "--rho-over-4pi", "13/8", "--alpha", "-1/2,-1/4", "--format", "json"});
  CHECK(text.exit_code == 0);
  CHECK(jdoc.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(jdoc.out);
  CHECK(text.out.find("verdict: " + doc["verdict"]["kind"].get<std::string>()) !=
        std::string::npos);
  CHECK(doc["stability"]["sorted"] == nlohmann::json({true, false}));
  CHECK(doc["params"]["alpha_user"] == nlohmann::json({"-1/2", "-1/4"}));
}

TEST_CASE("output files and stdout carry identical bytes") {
  const std::string path = "/tmp/barystrat_cli_out_test.json";
  std::remove(path.c_str());
  ProcResult direct =
      cli({"scan", "--rho-max", "2", "--alpha", "-1/2", "--format", "json"});
  ProcResult filed = cli({"scan", "--rho-max", "2", "--alpha", "-1/2", "--format", "json",
                          "--out", path});
  CHECK(direct.exit_code == 0);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::vector<std::string>> commands = {
      {"analyze", "--rho-over-4pi", "9/8", "--alpha", "-1/2,-1/2", "--format", "json"},
      {"scan", "--rho-max", "3", "--alpha", "-2/3,-1/6"},
      {"graph", "--rho-over-4pi", "13/8", "--alpha", "-1/2,-1/4"},
      {"singular", "--rho-max", "3", "--alpha", "-5/6"},
      {"threshold", "--rho-over-4pi", "9/8", "--alpha", "-1/2", "--index", "2"},
  };
  for (const auto& command : commands) {
    ProcResult first = cli(command);
    ProcResult second = cli(command);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}

TEST_CASE("alpha flag accepts the equals form") {
  ProcResult r = cli({"analyze", "--rho-over-4pi=9/8", "--alpha=-1/2,-1/2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: SolvableMinMax") != std::string::npos);
}
