#pragma once

#include "indbbw/root_weights.hpp"

#include <optional>
#include <set>

namespace indbbw {

/// Cohomology of the line bundle of a weight on G/B at one finite level:
/// either everything vanishes (singular) or exactly one degree survives and
/// carries the dual of the irreducible module with the given highest weight.
class BBWOutcome {
public:
  static BBWOutcome singular() { return BBWOutcome{}; }
  static BBWOutcome regular(int degree, RankedWeight weight);

  bool is_singular() const { return !weight_.has_value(); }
  bool is_regular() const { return weight_.has_value(); }
  /// Both require is_regular().
  int degree() const { return degree_; }
  const RankedWeight& weight() const { return *weight_; }

  std::string to_string() const;

  friend bool operator==(const BBWOutcome&, const BBWOutcome&) = default;

private:
  BBWOutcome() = default;
  int degree_ = 0;
  std::optional<RankedWeight> weight_;
};

/// True iff v (= lambda + rho) lies on a reflecting hyperplane.
bool lies_on_wall(ClassicalType type, std::span<const HalfInt> v);

/// Number of positive roots pairing negatively with v. For regular v this is
/// the length of the Weyl element moving v into the dominant chamber.
/// Runs in O(n log n).
std::int64_t negative_pairing_count(ClassicalType type, std::span<const HalfInt> v);

/// Dominant-chamber representative of the Weyl orbit of v.
std::vector<HalfInt> dominant_representative(ClassicalType type, std::span<const HalfInt> v);

/// Dot-action resolution: lambda + rho is singular, or the unique minimal
/// w with w(lambda + rho) strictly dominant gives degree l(w) and highest
/// weight w(lambda + rho) - rho.
BBWOutcome bbw_resolve(const RankedWeight& lambda);

/// Same answer obtained by walking simple reflections one at a time.
/// Quadratic; intended for cross-checks.
BBWOutcome bbw_resolve_reflection_walk(const RankedWeight& lambda);

/// Exhaustive search over weyl_enumerate. Subject to its rank caps.
BBWOutcome bbw_resolve_oracle(const RankedWeight& lambda);

/// <lambda, alpha_i> >= 0 for every listed simple root index (1-based).
bool parabolic_validity(const RankedWeight& lambda, const std::set<int>& levi_roots);

} // namespace indbbw
