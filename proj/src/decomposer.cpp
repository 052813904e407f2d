#include "indbbw/decomposer.hpp"

#include "indbbw/errors.hpp"

#include <algorithm>
#include <set>

namespace indbbw {

std::string to_string(CaseTag tag) {
  switch (tag) {
  case CaseTag::Case1: return "Case1";
  case CaseTag::Case2: return "Case2";
  case CaseTag::Vanished: return "Vanished";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
  case Verdict::Holds: return "holds";
  case Verdict::Fails: return "fails";
  case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

StrongFinitenessReport strong_finiteness_check(const FilteredModule& m, int probe_levels) {
  if (m.constituents.empty())
    throw InvalidInput("a filtered module needs at least one constituent");
  StrongFinitenessReport report{Verdict::Holds, {}};
  bool failed = false;
  bool inconclusive = false;
  for (std::size_t i = 0; i < m.constituents.size(); ++i) {
    ConstituentCheck check{static_cast<int>(i) + 1,
                           bbw_limit(m.constituents[i], m.tower, m.parabolic, probe_levels),
                           std::nullopt, Verdict::Holds};
    switch (check.limit.kind) {
    case LimitCohomology::Kind::Vanishing: break;
    case LimitCohomology::Kind::NonStable:
      check.verdict = Verdict::Inconclusive;
      inconclusive = true;
      break;
    case LimitCohomology::Kind::Stable:
      check.integrability = m.tower.is_finitary()
                                ? check_dual_integrable_finitary(check.limit.weight, m.tower)
                                : check_dual_integrable_diagonal(check.limit.weight, m.tower);
      if (!check.integrability->positive()) {
        check.verdict = Verdict::Fails;
        failed = true;
      }
      break;
    }
    report.constituents.push_back(std::move(check));
  }
  report.verdict = failed ? Verdict::Fails : inconclusive ? Verdict::Inconclusive : Verdict::Holds;
  return report;
}

std::vector<Scenario> enumerate_scenarios(const std::vector<LimitCohomology>& limits,
                                          const TowerDescriptor& tower) {
  if (limits.empty())
    throw InvalidInput("a filtered module needs at least one constituent");

  // Peel the filtration from the top quotient down: at each step the next
  // deeper constituent is the irreducible submodule E'' of 0 -> E'' -> E -> E' -> 0.
  std::vector<Scenario> scenarios{Scenario{}};
  for (int index = static_cast<int>(limits.size()); index >= 1; --index) {
    const auto& limit = limits[static_cast<std::size_t>(index - 1)];
    if (limit.kind == LimitCohomology::Kind::NonStable)
      throw NonStableLimit("constituent " + std::to_string(index) + ": " + limit.diagnostic);
    if (limit.kind == LimitCohomology::Kind::Vanishing) {
      for (auto& s : scenarios)
        s.provenance.push_back(CaseTag::Vanished);
      continue;
    }

    std::vector<Scenario> next;
    for (const auto& s : scenarios) {
      // Case 1: the connecting map vanishes, H^q(E'') splits off.
      Scenario added = s;
      added.summands.push_back({limit.degree, index, limit.weight});
      std::sort(added.summands.begin(), added.summands.end());
      added.provenance.push_back(CaseTag::Case1);
      next.push_back(std::move(added));

      // Case 2: the connecting map is injective and cancels an isomorphic
      // summand one degree up. Remove the most recently added match.
      auto match = s.summands.end();
      for (auto it = s.summands.begin(); it != s.summands.end(); ++it)
        if (it->degree == limit.degree + 1 && same_limit(it->family, limit.weight, tower) &&
            (match == s.summands.end() || it->constituent < match->constituent))
          match = it;
      if (match != s.summands.end()) {
        Scenario cancelled = s;
        cancelled.summands.erase(cancelled.summands.begin() + (match - s.summands.begin()));
        cancelled.provenance.push_back(CaseTag::Case2);
        next.push_back(std::move(cancelled));
      }
    }
    scenarios = std::move(next);
  }

  std::sort(scenarios.begin(), scenarios.end(), [](const Scenario& a, const Scenario& b) {
    return a.summands != b.summands ? a.summands < b.summands : a.provenance < b.provenance;
  });
  scenarios.erase(std::unique(scenarios.begin(), scenarios.end(),
                              [](const Scenario& a, const Scenario& b) {
                                return a.summands == b.summands;
                              }),
                  scenarios.end());
  return scenarios;
}

std::vector<Scenario> decompose_enumerate(const FilteredModule& m, int probe_levels) {
  const auto report = strong_finiteness_check(m, probe_levels);
  std::vector<LimitCohomology> limits;
  for (const auto& c : report.constituents) {
    if (c.verdict == Verdict::Inconclusive)
      throw NonStableLimit("constituent " + std::to_string(c.index) + ": " + c.limit.diagnostic);
    limits.push_back(c.limit);
  }
  if (report.verdict != Verdict::Holds)
    throw InvalidInput("the module is not strongly finite");
  return enumerate_scenarios(limits, m.tower);
}

EulerCharacteristic euler_characteristic(const Scenario& s, const TowerDescriptor& tower) {
  EulerCharacteristic chi;
  for (const auto& summand : s.summands) {
    auto key = canonicalize(summand.family, tower);
    key.n0 = 1;
    chi[key] += summand.degree % 2 == 0 ? 1 : -1;
  }
  std::erase_if(chi, [](const auto& entry) { return entry.second == 0; });
  return chi;
}

BoundsReport verify_theorem_bounds(const std::vector<Scenario>& scenarios, int length,
                                   const TowerDescriptor& tower) {
  BoundsReport report;
  report.scenarios = scenarios.size();
  std::optional<EulerCharacteristic> reference;
  for (const auto& s : scenarios) {
    std::set<int> degrees;
    for (const auto& summand : s.summands)
      degrees.insert(summand.degree);
    report.max_distinct_degrees = std::max(report.max_distinct_degrees, degrees.size());
    report.max_summands = std::max(report.max_summands, s.summands.size());
    const auto chi = euler_characteristic(s, tower);
    if (!reference)
      reference = chi;
    else if (chi != *reference)
      report.euler_invariant = false;
  }
  const auto n = static_cast<std::size_t>(length);
  if (report.max_distinct_degrees > n || report.max_summands > n || !report.euler_invariant)
    throw InternalInconsistency(
        "decomposition bounds violated: " + std::to_string(report.max_distinct_degrees) +
        " degrees, " + std::to_string(report.max_summands) + " summands for length " +
        std::to_string(length) + (report.euler_invariant ? "" : ", Euler characteristic differs"));
  return report;
}

} // namespace indbbw
