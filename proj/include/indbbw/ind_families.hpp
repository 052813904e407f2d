#pragma once

#include "indbbw/bbw.hpp"

#include <set>
#include <string>
#include <vector>

namespace indbbw {

enum class TowerKind { SL, SO, Sp, DiagonalA };

std::string to_string(TowerKind kind);

/// An exhaustion G_1 ⊂ G_2 ⊂ ... by classical groups.
///
///   SL         level n is sl(n+1), type (A, n)
///   Sp         level n is sp(2n),  type (C, n)
///   SO         level n is so(n+2): B_{(n+1)/2} for odd n, D_{(n+2)/2} for even n
///   DiagonalA  level n is sl(N_n), N_1 = base_rank + 1, N_{n+1} = k N_n + t
class TowerDescriptor {
public:
  static TowerDescriptor sl() { return TowerDescriptor(TowerKind::SL); }
  static TowerDescriptor so() { return TowerDescriptor(TowerKind::SO); }
  static TowerDescriptor sp() { return TowerDescriptor(TowerKind::Sp); }
  /// Requires k >= 1, t >= 0, base_rank >= 1 and a strictly growing chain.
  static TowerDescriptor diagonal(int k, int t, int base_rank);

  TowerKind kind() const { return kind_; }
  int multiplicity() const { return k_; }
  int padding() const { return t_; }
  int base_rank() const { return base_rank_; }
  bool is_finitary() const { return kind_ != TowerKind::DiagonalA; }

  ClassicalType type_at(int level) const;
  /// Throws CapacityExceeded when the rank would exceed kMaxRank.
  int rank_at(int level) const;
  int coords_at(int level) const { return coordinate_count(type_at(level), rank_at(level)); }

  std::string to_string() const;

  friend bool operator==(const TowerDescriptor&, const TowerDescriptor&) = default;

  static constexpr int kMaxRank = 1 << 22;

private:
  explicit TowerDescriptor(TowerKind kind) : kind_(kind) {}
  TowerKind kind_;
  int k_ = 1;
  int t_ = 0;
  int base_rank_ = 1;
};

/// Front-anchored simple roots of the Levi factor. Empty means the Borel.
struct ParabolicDescriptor {
  std::set<int> levi_positions;

  static ParabolicDescriptor borel() { return {}; }
  friend bool operator==(const ParabolicDescriptor&, const ParabolicDescriptor&) = default;
};

/// constant + slope * n
struct AffineForm {
  HalfInt constant;
  std::int64_t slope = 0;

  HalfInt at(std::int64_t n) const { return constant + slope * HalfInt(n); }

  friend auto operator<=>(const AffineForm&, const AffineForm&) = default;
};

/// A projective system of weights mu_n, n >= n0: the leading coordinates are
/// given by affine forms in n, every remaining coordinate equals the tail.
struct WeightFamily {
  int n0 = 1;
  std::vector<AffineForm> head;
  HalfInt tail;

  static WeightFamily constant(std::vector<std::int64_t> head, std::int64_t tail = 0, int n0 = 1);

  std::string to_string() const;

  friend auto operator<=>(const WeightFamily&, const WeightFamily&) = default;
};

/// Equality of the limits two families describe (head and tail of the
/// canonical forms; the starting level is not part of the limit).
bool same_limit(const WeightFamily& a, const WeightFamily& b, const TowerDescriptor& tower);

/// Checks the tail/integrality rules of the family against the tower:
/// non-negative tail for B/C/D, integral for SL/Sp/DiagonalA, uniform
/// integrality for SO. Throws InvalidInput.
void validate_family(const WeightFamily& f, const TowerDescriptor& tower);

/// Type A: shift so the tail is 0. All types: trailing head entries equal to
/// the tail are folded into it.
WeightFamily canonicalize(const WeightFamily& f, const TowerDescriptor& tower);

RankedWeight weight_at_level(const WeightFamily& f, const TowerDescriptor& tower, int n);

/// Restriction of a level-(n+1) weight to level n along the standard
/// embedding (surplus coordinates dropped). Finitary towers only.
RankedWeight restrict_to_level(const RankedWeight& upper, const TowerDescriptor& tower, int n);

bool check_projective_compatibility(const WeightFamily& f, const TowerDescriptor& tower);

/// Dominance at every level >= f.n0, decided symbolically.
bool is_dominant_family(const WeightFamily& f, const TowerDescriptor& tower);

struct LevelOutcome {
  int level;
  BBWOutcome outcome;
};

struct LimitCohomology {
  enum class Kind { Stable, Vanishing, NonStable };

  Kind kind = Kind::Vanishing;
  int degree = 0;            // Stable only
  WeightFamily weight;       // Stable only, canonical and dominant
  std::string diagnostic;
  int stable_from = 0;       // first level of the eventual window
  std::vector<LevelOutcome> trace;

  bool is_stable() const { return kind == Kind::Stable; }
};

std::string to_string(LimitCohomology::Kind kind);

/// First level beyond which the relative order of the shifted head entries
/// and the shifted tail block (and of their absolute values for B, C, D)
/// can no longer change.
int pattern_threshold(const WeightFamily& f, const TowerDescriptor& tower);

/// Limit of the finite-level BBW outcomes. Probes levels n0 .. n0+probe_levels
/// and an eventual window past pattern_threshold. Throws InvalidInput for
/// probe_levels < 3 or a weight that is not Levi-dominant at some level.
LimitCohomology bbw_limit(const WeightFamily& f, const TowerDescriptor& tower,
                          const ParabolicDescriptor& parabolic, int probe_levels);

} // namespace indbbw
