#include "indbbw/problem.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace indbbw::cli;

namespace {

std::string read_problem(const std::string& name) {
  std::ifstream in(std::string(INDBBW_PROBLEMS_DIR) + "/" + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Process {
  int exit_code;
  std::string out;
};

Process invoke(const std::string& args) {
  const std::string command = std::string(INDBBW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  while (const auto n = std::fread(buffer.data(), 1, buffer.size(), pipe))
    out.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("bbw report") {
  const auto r = run("bbw", read_problem("bbw_examples.json"));
  REQUIRE(r.exit_code == 0);
  const auto report = json::parse(r.report);
  const auto& first = report["result"]["outcomes"][0];
  CHECK(first["outcome"]["singular"] == false);
  CHECK(first["outcome"]["degree"] == 1);
  CHECK(first["outcome"]["weight"]["coeffs"] == json::array({0, 0}));
  CHECK(report["result"]["outcomes"][1]["outcome"]["singular"] == true);
  CHECK(report["input"]["weights"][0]["coeffs"] == json::array({0, 2}));
  CHECK(report["input"]["weights"][4]["coeffs"] == json::array({json::array({-5, 2}),
                                                                json::array({1, 2})}));
}

TEST_CASE("decompose report") {
  const auto r = run("decompose", read_problem("decompose_two_step.json"));
  REQUIRE(r.exit_code == 0);
  const auto report = json::parse(r.report);
  const auto& scenarios = report["result"]["scenarios"];
  REQUIRE(scenarios.size() == 2);
  CHECK(scenarios[0]["summands"].empty());
  CHECK(scenarios[1]["summands"].size() == 2);
  CHECK(scenarios[0]["euler_characteristic"] == scenarios[1]["euler_characteristic"]);
}

TEST_CASE("every sample problem runs") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"bbw", "bbw_examples.json"},           {"bbw-limit", "bbw_limit.json"},
      {"branch", "branch_adjoint.json"},      {"branch", "branch_chain.json"},
      {"integrable", "integrable.json"},      {"integrable", "integrable_diagonal.json"},
      {"strong-finite", "strong_finite.json"}, {"decompose", "decompose_two_step.json"}};
  for (const auto& [command, file] : cases) {
    const auto r = run(command, read_problem(file));
    CAPTURE(command);
    CAPTURE(file);
    CAPTURE(r.diagnostic);
    CHECK(r.exit_code == 0);
    CHECK(r.report == run(command, read_problem(file)).report);
  }
}

TEST_CASE("malformed input") {
  const auto rank = run("bbw", read_problem("malformed_rank.json"));
  CHECK(rank.exit_code == 1);
  CHECK(rank.diagnostic.find("/weights/0/rank") != std::string::npos);

  CHECK(run("bbw", std::string("{not json")).exit_code == 1);
  CHECK(run("bbw", std::string(R"({"weights": [{"type": "E", "rank": 6, "coeffs": []}]})"))
            .exit_code == 1);
  CHECK(run("bbw", std::string(R"({"weights": [{"type": "A", "rank": 1, "coeffs": [1, 2], "x": 0}]})"))
            .diagnostic.find("/weights/0/x") != std::string::npos);
  CHECK(run("bbw", std::string(R"({"weights": [{"type": "C", "rank": 1, "coeffs": [[1, 2]]}]})"))
            .exit_code == 1);
  CHECK(run("bbw-limit", std::string(R"({"families": [{"head": [[1, 0]]}]})")).exit_code == 1);
  CHECK(run("bbw-limit", std::string(R"({"tower": {"kind": "GL"}, "families": []})")).exit_code ==
        1);
  CHECK(run("bbw-limit", std::string(R"({"tower": {"kind": "Sp"}, "families": [{"tail": -1}]})"))
            .diagnostic.find("/families/0") != std::string::npos);
  CHECK(run("bbw-limit", read_problem("bbw_limit.json"), {2, std::nullopt, false}).exit_code == 1);
  CHECK(run("launch", std::nullopt).exit_code == 1);
  CHECK(run("bbw", std::nullopt).exit_code == 1);
}

TEST_CASE("capacity limits exit with 1") {
  const auto r = run("branch", std::string(R"({"tower": {"kind": "SL"},
      "families": [{"head": [[9, 0], [5, 0], [2, 0]]}], "params": {"n": 3, "k_max": 5}})"),
                     {std::nullopt, 1000, false});
  CHECK(r.exit_code == 1);
}

TEST_CASE("large ranks skip the exact dimension") {
  json weights = json::array();
  for (const int rank : {128, 600}) {
    json coeffs = json::array();
    for (int i = rank; i > 0; --i)
      coeffs.push_back(i);
    weights.push_back({{"type", "C"}, {"rank", rank}, {"coeffs", coeffs}});
  }
  const json problem = {{"weights", weights}};
  const auto r = run("bbw", problem.dump());
  REQUIRE(r.exit_code == 0);
  const auto outcomes = json::parse(r.report)["result"]["outcomes"];
  CHECK(outcomes[0]["dimension"].get<std::string>().size() > 1000);
  CHECK(outcomes[1]["dimension"] == "skipped: rank above 128");
  CHECK(outcomes[1]["outcome"]["degree"] == 0);
}

TEST_CASE("timing is opt-in") {
  const auto plain = json::parse(run("strong-finite", read_problem("strong_finite.json")).report);
  CHECK_FALSE(plain.contains("timing_ms"));
  const auto timed =
      json::parse(run("strong-finite", read_problem("strong_finite.json"), {{}, {}, true}).report);
  CHECK(timed.contains("timing_ms"));
}

TEST_CASE("command line exit codes") {
  const std::string problems = INDBBW_PROBLEMS_DIR;
  const auto ok = invoke("bbw --input " + problems + "/bbw_examples.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == run("bbw", read_problem("bbw_examples.json")).report);
  CHECK(invoke("bbw --input " + problems + "/malformed_rank.json").exit_code == 1);
  CHECK(invoke("bbw --input /nonexistent.json").exit_code == 1);
  CHECK(invoke("frobnicate").exit_code == 1);
  CHECK(invoke("selfcheck").exit_code == 0);
}

TEST_CASE("internal inconsistencies exit with 2") {
  const auto broken = guarded([]() -> RunResult {
    throw indbbw::InternalInconsistency("routes disagree");
  });
  CHECK(broken.exit_code == 2);
  CHECK(broken.report.empty());
  CHECK(broken.diagnostic.find("routes disagree") != std::string::npos);
  CHECK(guarded([]() -> RunResult { throw indbbw::NonStableLimit("drifts"); }).exit_code == 1);
  CHECK(guarded([]() -> RunResult { throw indbbw::CapacityExceeded("big"); }).exit_code == 1);
  CHECK(guarded([]() -> RunResult { return {0, "{}", ""}; }).exit_code == 0);
}
