#include "indbbw/branching.hpp"

#include "indbbw/errors.hpp"

#include <map>

namespace indbbw {

namespace {

using Coords = std::vector<std::int64_t>;
using Tally = std::map<Coords, std::int64_t>;

// Calls emit(x) for every x with bounds[i].first >= x_i >= bounds[i].second.
template <typename Emit>
void enumerate_box(const std::vector<std::pair<std::int64_t, std::int64_t>>& bounds, Emit&& emit) {
  Coords x(bounds.size());
  const auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == bounds.size()) {
      emit(x);
      return;
    }
    for (auto v = bounds[i].first; v >= bounds[i].second; --v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
}

// gl(m) -> gl(m-1): lower_i in [upper_{i+1}, upper_i]
void interlace_gl(const Coords& upper, std::int64_t mult, Tally& out) {
  std::vector<std::pair<std::int64_t, std::int64_t>> bounds;
  for (std::size_t i = 0; i + 1 < upper.size(); ++i)
    bounds.emplace_back(upper[i], upper[i + 1]);
  enumerate_box(bounds, [&](const Coords& x) { out[x] += mult; });
}

// B_m -> D_m: l_1 >= m_1 >= l_2 >= ... >= m_{m-1} >= l_m >= |m_m|
void interlace_b_to_d(const Coords& upper, std::int64_t mult, Tally& out) {
  std::vector<std::pair<std::int64_t, std::int64_t>> bounds;
  for (std::size_t i = 0; i + 1 < upper.size(); ++i)
    bounds.emplace_back(upper[i], upper[i + 1]);
  bounds.emplace_back(upper.back(), -upper.back());
  enumerate_box(bounds, [&](const Coords& x) { out[x] += mult; });
}

// D_m -> B_{m-1}: l_1 >= m_1 >= l_2 >= ... >= l_{m-1} >= m_{m-1} >= |l_m|
void interlace_d_to_b(const Coords& upper, std::int64_t mult, Tally& out) {
  std::vector<std::pair<std::int64_t, std::int64_t>> bounds;
  for (std::size_t i = 0; i + 2 < upper.size(); ++i)
    bounds.emplace_back(upper[i], upper[i + 1]);
  bounds.emplace_back(upper[upper.size() - 2], std::abs(upper.back()));
  enumerate_box(bounds, [&](const Coords& x) { out[x] += mult; });
}

// C_m -> C_{m-1} through an intermediate nu:
//   l_1 >= nu_1 >= l_2 >= ... >= l_m >= nu_m >= 0
//   nu_1 >= m_1 >= nu_2 >= ... >= m_{m-1} >= nu_m
void interlace_sp(const Coords& upper, std::int64_t mult, Tally& out) {
  std::vector<std::pair<std::int64_t, std::int64_t>> outer;
  for (std::size_t i = 0; i < upper.size(); ++i)
    outer.emplace_back(upper[i], i + 1 < upper.size() ? upper[i + 1] : 0);
  enumerate_box(outer, [&](const Coords& nu) {
    std::vector<std::pair<std::int64_t, std::int64_t>> inner;
    for (std::size_t i = 0; i + 1 < nu.size(); ++i)
      inner.emplace_back(nu[i], nu[i + 1]);
    enumerate_box(inner, [&](const Coords& x) { out[x] += mult; });
  });
}

Coords integer_coords(const RankedWeight& w) {
  Coords c;
  for (auto h : w.coeffs())
    c.push_back(h.as_integer());
  return c;
}

void check_branchable(const RankedWeight& w, const TowerDescriptor& tower, int level) {
  if (!tower.is_finitary())
    throw InvalidInput("branching along diagonal embeddings is not implemented");
  if (level < 2)
    throw InvalidInput("level " + std::to_string(level) + " has no lower level to branch to");
  if (w.type() != tower.type_at(level) || w.rank() != tower.rank_at(level))
    throw InvalidInput(w.to_string() + " is not a weight of level " + std::to_string(level) +
                       " of the " + tower.to_string() + " tower");
  if (!w.is_integral())
    throw InvalidInput("spin weights are not supported by branching: " + w.to_string());
  if (!is_dominant(w))
    throw InvalidInput("branching requires a dominant weight, got " + w.to_string());
}

BranchMultiset to_multiset(const Tally& tally, const TowerDescriptor& tower, int lower_level) {
  std::map<RankedWeight, std::int64_t> merged;
  const auto type = tower.type_at(lower_level);
  const auto rank = tower.rank_at(lower_level);
  for (const auto& [coords, mult] : tally)
    merged[RankedWeight::from_integers(type, rank, coords).canonical()] += mult;
  BranchMultiset out;
  for (auto& [w, mult] : merged)
    out.push_back({w, mult});
  return out;
}

} // namespace

bool interlaces(std::span<const HalfInt> upper, std::span<const HalfInt> lower) {
  if (lower.size() + 1 != upper.size())
    return false;
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1]))
      return false;
  return true;
}

BranchMultiset branch_once(const RankedWeight& w, const TowerDescriptor& tower, int level) {
  check_branchable(w, tower, level);
  Tally tally;
  const auto coords = integer_coords(w.canonical());
  switch (tower.kind()) {
  case TowerKind::SL: interlace_gl(coords, 1, tally); break;
  case TowerKind::Sp: interlace_sp(coords, 1, tally); break;
  case TowerKind::SO:
    if (w.type() == ClassicalType::B)
      interlace_b_to_d(coords, 1, tally);
    else
      interlace_d_to_b(coords, 1, tally);
    break;
  case TowerKind::DiagonalA: break;
  }
  return to_multiset(tally, tower, level - 1);
}

BranchMultiset restrict_chain(const WeightFamily& f, const TowerDescriptor& tower, int n, int k,
                              std::int64_t dim_cap) {
  if (k < 1)
    throw InvalidInput("restrict_chain needs k >= 1, got " + std::to_string(k));
  if (n < f.n0)
    throw InvalidInput("level " + std::to_string(n) + " is below the family start n0=" +
                       std::to_string(f.n0));
  const auto top = weight_at_level(f, tower, n + k);
  check_branchable(top, tower, n + k);
  const BigInt top_dim = dim_irrep(top);
  if (top_dim > dim_cap)
    throw CapacityExceeded("dimension " + top_dim.str() + " of " + top.to_string() +
                           " exceeds the cap " + std::to_string(dim_cap));

  BranchMultiset current{{top.canonical(), 1}};
  for (int level = n + k; level > n; --level) {
    std::map<RankedWeight, std::int64_t> merged;
    for (const auto& [w, mult] : current)
      for (const auto& [lower, lower_mult] : branch_once(w, tower, level))
        merged[lower] += mult * lower_mult;
    current.clear();
    for (auto& [w, mult] : merged)
      current.push_back({w, mult});
  }
  return current;
}

std::vector<std::int64_t> count_isotypic(const WeightFamily& f, const TowerDescriptor& tower,
                                         int n, int k_max, std::int64_t dim_cap) {
  if (k_max < 1)
    throw InvalidInput("count_isotypic needs k_max >= 1");
  std::vector<std::int64_t> counts;
  for (int k = 1; k <= k_max; ++k)
    counts.push_back(static_cast<std::int64_t>(restrict_chain(f, tower, n, k, dim_cap).size()));
  return counts;
}

} // namespace indbbw
