#pragma once

#include "indbbw/integrability.hpp"

#include <map>
#include <vector>

namespace indbbw {

/// A finite-dimensional P-module given by its simple constituents in
/// filtration order: constituents[0] is the deepest submodule, the last
/// entry is the top quotient. Each entry is the highest weight of the
/// constituent; the bundle is induced by its dual.
struct FilteredModule {
  TowerDescriptor tower;
  ParabolicDescriptor parabolic;
  std::vector<WeightFamily> constituents;
};

enum class CaseTag { Case1, Case2, Vanished };

std::string to_string(CaseTag tag);

struct Summand {
  int degree;
  int constituent; // 1-based position in FilteredModule::constituents
  WeightFamily family;

  friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// One decomposition of the limit cohomology consistent with the kernel
/// dichotomy of every connecting homomorphism. Summands are sorted;
/// provenance has one tag per constituent in processing order (top quotient
/// first).
struct Scenario {
  std::vector<Summand> summands;
  std::vector<CaseTag> provenance;
};

enum class Verdict { Holds, Fails, Inconclusive };

std::string to_string(Verdict verdict);

struct ConstituentCheck {
  int index; // 1-based
  LimitCohomology limit;
  std::optional<IntegrabilityVerdict> integrability; // Stable limits only
  Verdict verdict;
};

struct StrongFinitenessReport {
  Verdict verdict;
  std::vector<ConstituentCheck> constituents;
};

/// Vanishing limits pass vacuously, non-stable ones make the check
/// inconclusive, stable limits pass iff the limit weight is Integrable
/// (finitary towers) or satisfies the L1 condition (diagonal towers).
StrongFinitenessReport strong_finiteness_check(const FilteredModule& m, int probe_levels);

/// Enumerates scenarios from already computed limits (constituent order).
/// Throws NonStableLimit if any limit is non-stable.
std::vector<Scenario> enumerate_scenarios(const std::vector<LimitCohomology>& limits,
                                          const TowerDescriptor& tower);

/// Throws InvalidInput unless the module is strongly finite, NonStableLimit
/// when a limit does not stabilize.
std::vector<Scenario> decompose_enumerate(const FilteredModule& m, int probe_levels);

/// Canonical limit family -> signed multiplicity, zero entries dropped.
using EulerCharacteristic = std::map<WeightFamily, std::int64_t>;

EulerCharacteristic euler_characteristic(const Scenario& s, const TowerDescriptor& tower);

struct BoundsReport {
  std::size_t scenarios = 0;
  std::size_t max_distinct_degrees = 0;
  std::size_t max_summands = 0;
  bool euler_invariant = true;
};

/// Every scenario has at most N distinct degrees and at most N summands, and
/// all scenarios share one Euler characteristic. Throws InternalInconsistency
/// on violation.
BoundsReport verify_theorem_bounds(const std::vector<Scenario>& scenarios, int length,
                                   const TowerDescriptor& tower);

} // namespace indbbw
