// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "indbbw/errors.hpp"
#include "indbbw/problem.hpp"
#include "indbbw/sampling.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace indbbw;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("threw: ") + e.what()};
  }
  if (!outcome.pass)
    ++failures;
  std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": "
            << outcome.detail << std::endl;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string capture(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe)
    return "<popen failed>";
  std::string out;
  std::array<char, 4096> buffer{};
  while (const auto n = std::fread(buffer.data(), 1, buffer.size(), pipe))
    out.append(buffer.data(), n);
  const int status = pclose(pipe);
  return out + "\nstatus=" + std::to_string(status);
}

const std::vector<std::pair<ClassicalType, int>> kOracleGroups = {
    {ClassicalType::A, 1}, {ClassicalType::B, 1}, {ClassicalType::C, 1}, {ClassicalType::D, 2}};

// Criteria 1 and 2 share the random sample.
struct OracleRun {
  int samples = 0;
  int mismatches = 0;
  int regular = 0;
  int dimension_failures = 0;
  double seconds = 0;
};

OracleRun oracle_run() {
  OracleRun run;
  std::mt19937_64 rng(20241);
  const auto start = Clock::now();
  for (const auto& [type, min_rank] : kOracleGroups)
    for (int i = 0; i < 1000; ++i) {
      const int rank = min_rank + i % (5 - min_rank);
      const auto w = random_weight(rng, type, rank, -10, 10);
      const auto fast = bbw_resolve(w);
      ++run.samples;
      if (!(fast == bbw_resolve_oracle(w)))
        ++run.mismatches;
      if (fast.is_regular()) {
        ++run.regular;
        const BigInt sign = fast.degree() % 2 == 0 ? 1 : -1;
        if (signed_weyl_dimension(w) != sign * dim_irrep(fast.weight()))
          ++run.dimension_failures;
      }
    }
  run.seconds = seconds_since(start);
  return run;
}

Outcome branching_conservation() {
  std::mt19937_64 rng(4099);
  const std::vector<TowerDescriptor> towers = {TowerDescriptor::sl(), TowerDescriptor::so(),
                                               TowerDescriptor::sp()};
  const auto start = Clock::now();
  int kept = 0;
  int violations = 0;
  for (int i = 0; kept < 300; ++i) {
    const auto& tower = towers[static_cast<std::size_t>(i) % towers.size()];
    // levels whose rank stays within 5
    const int max_level = tower.kind() == TowerKind::SO ? 9 : 5;
    const int level = 2 + (i / 3) % (max_level - 1);
    const auto w = random_dominant_weight(rng, tower.type_at(level), tower.rank_at(level), 5);
    const BigInt upper = dim_irrep(w);
    if (upper > 100'000)
      continue;
    ++kept;
    BigInt total = 0;
    for (const auto& [lower, mult] : branch_once(w, tower, level))
      total += mult * dim_irrep(lower);
    if (total != upper)
      ++violations;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << kept << " weights, " << violations << " violations, " << elapsed << " s";
  return {violations == 0 && elapsed < 60, detail.str()};
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

Outcome cross_validation() {
  const auto sl = TowerDescriptor::sl();
  const auto natural = cross_validate(WeightFamily::constant({1}), sl, 2, 4);
  WeightFamily sloped;
  sloped.head.push_back({HalfInt(0), 1});
  const auto growing = cross_validate(sloped, sl, 2, 4);
  bool strictly = true;
  for (std::size_t i = 1; i < growing.counts.size(); ++i)
    strictly = strictly && growing.counts[i] > growing.counts[i - 1];
  const bool ok = natural.counts == std::vector<std::int64_t>{2, 2, 2, 2} &&
                  natural.verdict.status == IntegrabilityVerdict::Status::Integrable &&
                  growing.verdict.status == IntegrabilityVerdict::Status::NotIntegrable &&
                  strictly;
  return {ok, "natural " + join(natural.counts) + " " + to_string(natural.verdict.status) +
                  ", slope-1 " + join(growing.counts) + " " + to_string(growing.verdict.status) +
                  ", 0 mismatches"};
}

WeightFamily random_family(std::mt19937_64& rng, const TowerDescriptor& tower) {
  std::uniform_int_distribution<int> length(0, 3), entry(-4, 6), slope(-1, 2), tail(0, 2);
  WeightFamily f;
  const int len = length(rng);
  for (int j = 0; j < len; ++j)
    f.head.push_back({HalfInt(entry(rng)), slope(rng)});
  f.tail = HalfInt(tail(rng));
  while (tower.coords_at(f.n0) < len + 1)
    ++f.n0;
  return f;
}

Outcome sufficiency_implication() {
  std::mt19937_64 rng(777);
  const std::vector<TowerDescriptor> towers = {TowerDescriptor::sl(), TowerDescriptor::so(),
                                               TowerDescriptor::sp()};
  int stable = 0, holds = 0, exceptions = 0;
  for (int i = 0; stable < 100 && i < 100'000; ++i) {
    const auto& tower = towers[static_cast<std::size_t>(i) % towers.size()];
    const auto f = random_family(rng, tower);
    const auto limit = bbw_limit(f, tower, ParabolicDescriptor::borel(), 4);
    if (!limit.is_stable())
      continue;
    ++stable;
    const auto diag = check_dual_integrable_diagonal(limit.weight, tower);
    if (diag.status != IntegrabilityVerdict::Status::ConditionHolds)
      continue;
    ++holds;
    if (check_dual_integrable_finitary(limit.weight, tower).status !=
        IntegrabilityVerdict::Status::Integrable)
      ++exceptions;
  }
  return {stable == 100 && exceptions == 0,
          std::to_string(stable) + " stable families, " + std::to_string(holds) +
              " with the L1 condition, " + std::to_string(exceptions) + " exceptions"};
}

// Dot action of the simple reflection swapping coordinates i and i+1.
void dot_swap(WeightFamily& f, std::size_t i) {
  auto& a = f.head[i];
  auto& b = f.head[i + 1];
  const AffineForm first{b.constant - HalfInt(1), b.slope};
  const AffineForm second{a.constant + HalfInt(1), a.slope};
  a = first;
  b = second;
}

Outcome decomposition_bounds() {
  std::mt19937_64 rng(31337);
  const std::vector<TowerDescriptor> towers = {TowerDescriptor::sl(), TowerDescriptor::so(),
                                               TowerDescriptor::sp(),
                                               TowerDescriptor::diagonal(2, 1, 2)};
  std::uniform_int_distribution<int> length(1, 4), entry(0, 3), word(0, 3), pool(0, 1);
  int modules = 0, branching = 0, violations = 0;
  for (int trial = 0; modules < 150 && trial < 10'000; ++trial) {
    const auto& tower = towers[static_cast<std::size_t>(trial) % towers.size()];
    // two dominant seeds; constituents are dot-action images of them
    std::array<std::vector<std::int64_t>, 2> seeds;
    for (auto& seed : seeds) {
      seed = {entry(rng), entry(rng), entry(rng)};
      std::sort(seed.begin(), seed.end(), std::greater<>{});
    }
    FilteredModule m{tower, ParabolicDescriptor::borel(), {}};
    const int n = length(rng);
    for (int c = 0; c < n; ++c) {
      auto f = WeightFamily::constant(seeds[static_cast<std::size_t>(pool(rng))]);
      while (tower.coords_at(f.n0) < 3)
        ++f.n0;
      const int steps = word(rng);
      for (int s = 0; s < steps; ++s)
        dot_swap(f, static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 1)(rng)));
      m.constituents.push_back(f);
    }
    if (strong_finiteness_check(m, 4).verdict != Verdict::Holds)
      continue;
    ++modules;
    const auto scenarios = decompose_enumerate(m, 4);
    if (scenarios.size() > 1)
      ++branching;
    try {
      verify_theorem_bounds(scenarios, n, tower);
    } catch (const InternalInconsistency&) {
      ++violations;
      continue;
    }
    if (scenarios.size() > (std::size_t{1} << (n - 1)))
      ++violations;
    for (const auto& s : scenarios)
      for (const auto& summand : s.summands) {
        const auto limit = bbw_limit(m.constituents[static_cast<std::size_t>(summand.constituent - 1)],
                                     tower, m.parabolic, 4);
        if (!limit.is_stable() || limit.degree != summand.degree ||
            !same_limit(limit.weight, summand.family, tower))
          ++violations;
      }
  }
  return {modules >= 100 && violations == 0 && branching > 0,
          std::to_string(modules) + " modules (" + std::to_string(branching) +
              " with several scenarios), " + std::to_string(violations) + " violations"};
}

Outcome worked_example() {
  const auto sl = TowerDescriptor::sl();
  const auto mu = WeightFamily::constant({1, 1});
  const FilteredModule m{sl, ParabolicDescriptor::borel(), {mu, WeightFamily::constant({0, 2})}};
  const auto scenarios = decompose_enumerate(m, 4);
  bool ok = scenarios.size() == 2 && scenarios[0].summands.empty() &&
            scenarios[1].summands.size() == 2;
  if (ok) {
    const auto& both = scenarios[1].summands;
    ok = both[0].degree == 0 && both[1].degree == 1 && same_limit(both[0].family, mu, sl) &&
         same_limit(both[1].family, mu, sl);
  }
  return {ok, ok ? "scenarios {(0,mu),(1,mu)} and {} with mu = " + mu.to_string()
                 : std::to_string(scenarios.size()) + " scenarios, unexpected shape"};
}

Outcome determinism() {
  const std::string problems = INDBBW_PROBLEMS_DIR;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"selfcheck", ""},
      {"bbw", "bbw_examples.json"},
      {"bbw-limit", "bbw_limit.json"},
      {"branch", "branch_adjoint.json"},
      {"branch", "branch_chain.json"},
      {"integrable", "integrable.json"},
      {"integrable", "integrable_diagonal.json"},
      {"strong-finite", "strong_finite.json"},
      {"decompose", "decompose_two_step.json"}};
  int differing = 0;
  for (const auto& [command, file] : cases) {
    std::optional<std::string> text;
    std::string args = command;
    if (!file.empty()) {
      text = read_file(problems + "/" + file);
      args += " --input " + problems + "/" + file;
    }
    const auto first = cli::run(command, text);
    const auto second = cli::run(command, text);
    if (first.exit_code != 0 || first.report != second.report)
      ++differing;
    const std::string invocation = std::string(INDBBW_CLI_PATH) + " " + args;
    const auto out1 = capture(invocation);
    const auto out2 = capture(invocation);
    if (out1 != out2 || out1 != first.report + "\nstatus=0")
      ++differing;
  }
  return {differing == 0, std::to_string(cases.size()) + " commands, in-process and via " +
                              "the executable, " + std::to_string(differing) + " differences"};
}

} // namespace

int main() {
  const auto oracle = oracle_run();
  report(1, "BBW oracle equivalence", [&]() -> Outcome {
    std::ostringstream detail;
    detail << oracle.samples << " weights, " << oracle.mismatches << " mismatches, "
           << oracle.seconds << " s";
    return {oracle.mismatches == 0 && oracle.seconds < 30, detail.str()};
  });
  report(2, "signed dimension identity", [&]() -> Outcome {
    return {oracle.dimension_failures == 0,
            std::to_string(oracle.regular) + " regular outcomes, " +
                std::to_string(oracle.dimension_failures) + " failures"};
  });
  report(3, "branching dimension conservation", branching_conservation);
  report(4, "isotypic cross-validation", cross_validation);
  report(5, "L1 condition implies integrability", sufficiency_implication);
  report(6, "decomposition bounds", decomposition_bounds);
  report(7, "two-step worked example", worked_example);
  report(8, "determinism", determinism);
  return failures == 0 ? 0 : 1;
}
