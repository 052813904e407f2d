#pragma once

#include "indbbw/decomposer.hpp"
#include "indbbw/errors.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace indbbw::cli {

using nlohmann::json;

/// Malformed problem document. `path` is a JSON pointer into the document.
class ProblemError : public InvalidInput {
public:
  ProblemError(const std::string& path, const std::string& message)
      : InvalidInput((path.empty() ? std::string("/") : path) + ": " + message) {}
};

struct ProblemParams {
  int probe_levels = 4;
  std::optional<int> n;
  std::optional<int> k_max;
  std::optional<int> level;
  std::int64_t dim_cap = kDefaultDimensionCap;
  std::uint64_t seed = 1;
  int samples = 200;
};

struct ProblemSpec {
  std::optional<TowerDescriptor> tower;
  ParabolicDescriptor parabolic;
  std::vector<RankedWeight> weights;
  std::vector<WeightFamily> families;
  ProblemParams params;
};

ProblemSpec parse_problem(const json& doc);
ProblemSpec parse_problem_text(const std::string& text);

json to_json(HalfInt h);
json to_json(const RankedWeight& w);
json to_json(const TowerDescriptor& tower);
json to_json(const ParabolicDescriptor& parabolic);
json to_json(const WeightFamily& f);
json to_json(const BBWOutcome& o);
json to_json(const LimitCohomology& limit);
json to_json(const IntegrabilityVerdict& v);
json to_json(const Scenario& s);
json to_json(const ProblemSpec& spec);

inline const std::vector<std::string> kCommands = {
    "bbw", "bbw-limit", "branch", "integrable", "strong-finite", "decompose", "selfcheck"};

struct CommandOptions {
  std::optional<int> probe_levels;
  std::optional<std::int64_t> dim_cap;
  bool timing = false;
};

struct RunResult {
  int exit_code = 0;       // 0 ok, 1 malformed input, 2 internal inconsistency
  std::string report;      // serialized report (empty on error)
  std::string diagnostic;  // human-readable error message
};

/// Calls `body` and maps escaping exceptions to exit codes: 2 for
/// InternalInconsistency, 1 for anything else.
RunResult guarded(const std::function<RunResult()>& body);

/// Executes one command on a problem document (may be absent for selfcheck).
RunResult run(const std::string& command, const std::optional<std::string>& problem_text,
              const CommandOptions& options = {});

} // namespace indbbw::cli
