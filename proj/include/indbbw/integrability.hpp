#pragma once

#include "indbbw/branching.hpp"

#include <optional>

namespace indbbw {

/// Integrable / NotIntegrable come from the exact criterion on finitary
/// towers. ConditionHolds / ConditionFails come from the bounded-L1
/// sufficient condition; ConditionFails says nothing about integrability.
struct IntegrabilityVerdict {
  enum class Status { Integrable, NotIntegrable, ConditionHolds, ConditionFails };

  Status status;
  std::optional<std::int64_t> bound;      // smallest integer m0 witnessing the bound
  std::optional<HalfInt> supremum;        // exact supremum of the criterion value

  bool positive() const {
    return status == Status::Integrable || status == Status::ConditionHolds;
  }
};

std::string to_string(IntegrabilityVerdict::Status status);

/// Value of the finitary criterion at one level: a^1 - a^{last} on SL,
/// a^1 on SO and Sp.
HalfInt finitary_criterion_value(const RankedWeight& w);

/// min over representatives of sum_i |a^i|. For type A the minimum is taken
/// over constant shifts (attained at a median).
HalfInt minimal_l1_norm(const RankedWeight& w);

/// Supremum over n >= n0 of finitary_criterion_value, decided from the affine
/// head forms, then cross-checked numerically on 20 levels.
/// Requires a finitary tower and a dominant family.
IntegrabilityVerdict check_dual_integrable_finitary(const WeightFamily& f,
                                                    const TowerDescriptor& tower);

/// Supremum over n >= n0 of minimal_l1_norm. Any tower; dominant family.
IntegrabilityVerdict check_dual_integrable_diagonal(const WeightFamily& f,
                                                    const TowerDescriptor& tower);

struct CrossValidationReport {
  IntegrabilityVerdict verdict;
  std::vector<std::int64_t> counts;
  bool counts_stabilized;
  bool counts_grow;
};

/// Compares the finitary verdict with the isotypic counts of restrict_chain
/// for k = 1 .. k_max (k_max >= 2). Integrable must come with a count that is
/// flat over the last two steps; NotIntegrable with a strict increase
/// somewhere. Throws InternalInconsistency otherwise.
CrossValidationReport cross_validate(const WeightFamily& f, const TowerDescriptor& tower, int n,
                                     int k_max, std::int64_t dim_cap = kDefaultDimensionCap);

} // namespace indbbw
