#pragma once

#include "indbbw/ind_families.hpp"

#include <cstdint>
#include <vector>

namespace indbbw {

struct BranchTerm {
  RankedWeight weight;
  std::int64_t multiplicity;
};

/// Lower-level constituents, deduplicated, sorted by weight.
using BranchMultiset = std::vector<BranchTerm>;

inline constexpr std::int64_t kDefaultDimensionCap = 1'000'000;

/// Restriction of the irreducible module of highest weight w (a weight of
/// `level`) to level - 1 of a finitary tower.
///
///   SL  Gelfand-Tsetlin interlacing, merged as sl-classes
///   SO  one-step interlacing between B and D levels
///   Sp  two-step (Zhelobenko) interlacing with multiplicities
///
/// Throws InvalidInput for spin weights, non-dominant weights, level 1, or a
/// diagonal tower.
BranchMultiset branch_once(const RankedWeight& w, const TowerDescriptor& tower, int level);

/// Restricts weight_at_level(f, n + k) down to level n, one step at a time.
/// Throws CapacityExceeded when the top dimension exceeds dim_cap.
BranchMultiset restrict_chain(const WeightFamily& f, const TowerDescriptor& tower, int n, int k,
                              std::int64_t dim_cap = kDefaultDimensionCap);

/// Number of distinct constituents of restrict_chain for k = 1 .. k_max.
std::vector<std::int64_t> count_isotypic(const WeightFamily& f, const TowerDescriptor& tower,
                                         int n, int k_max,
                                         std::int64_t dim_cap = kDefaultDimensionCap);

/// True iff `lower` interlaces `upper` (gl-style representatives, one
/// coordinate fewer): upper_1 >= lower_1 >= upper_2 >= ... >= lower_m >= upper_{m+1}.
bool interlaces(std::span<const HalfInt> upper, std::span<const HalfInt> lower);

} // namespace indbbw
