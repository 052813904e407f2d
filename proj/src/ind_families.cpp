#include "indbbw/ind_families.hpp"

#include "indbbw/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace indbbw {

std::string to_string(TowerKind kind) {
  switch (kind) {
  case TowerKind::SL: return "SL";
  case TowerKind::SO: return "SO";
  case TowerKind::Sp: return "Sp";
  case TowerKind::DiagonalA: return "DiagonalA";
  }
  return "?";
}

std::string to_string(LimitCohomology::Kind kind) {
  switch (kind) {
  case LimitCohomology::Kind::Stable: return "stable";
  case LimitCohomology::Kind::Vanishing: return "vanishing";
  case LimitCohomology::Kind::NonStable: return "non-stable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// TowerDescriptor

TowerDescriptor TowerDescriptor::diagonal(int k, int t, int base_rank) {
  if (k < 1 || t < 0 || base_rank < 1)
    throw InvalidInput("diagonal tower needs k >= 1, t >= 0, base_rank >= 1");
  if (k == 1 && t == 0)
    throw InvalidInput("diagonal tower with k = 1, t = 0 does not grow");
  TowerDescriptor tower(TowerKind::DiagonalA);
  tower.k_ = k;
  tower.t_ = t;
  tower.base_rank_ = base_rank;
  return tower;
}

ClassicalType TowerDescriptor::type_at(int level) const {
  if (level < 1)
    throw InvalidInput("tower levels start at 1, got " + std::to_string(level));
  switch (kind_) {
  case TowerKind::SL:
  case TowerKind::DiagonalA: return ClassicalType::A;
  case TowerKind::Sp: return ClassicalType::C;
  case TowerKind::SO: return level % 2 == 1 ? ClassicalType::B : ClassicalType::D;
  }
  return ClassicalType::A;
}

int TowerDescriptor::rank_at(int level) const {
  if (level < 1)
    throw InvalidInput("tower levels start at 1, got " + std::to_string(level));
  std::int64_t rank = 0;
  switch (kind_) {
  case TowerKind::SL:
  case TowerKind::Sp: rank = level; break;
  case TowerKind::SO: rank = level % 2 == 1 ? (level + 1) / 2 : (level + 2) / 2; break;
  case TowerKind::DiagonalA: {
    std::int64_t size = base_rank_ + 1;
    for (int n = 1; n < level && size <= kMaxRank; ++n)
      size = k_ * size + t_;
    rank = size - 1;
    break;
  }
  }
  if (rank > kMaxRank)
    throw CapacityExceeded("rank at level " + std::to_string(level) + " of " + to_string() +
                           " exceeds " + std::to_string(kMaxRank));
  return static_cast<int>(rank);
}

std::string TowerDescriptor::to_string() const {
  if (kind_ != TowerKind::DiagonalA)
    return indbbw::to_string(kind_);
  return "DiagonalA(k=" + std::to_string(k_) + ",t=" + std::to_string(t_) +
         ",base_rank=" + std::to_string(base_rank_) + ")";
}

// ---------------------------------------------------------------------------
// WeightFamily basics

WeightFamily WeightFamily::constant(std::vector<std::int64_t> head, std::int64_t tail, int n0) {
  WeightFamily f;
  f.n0 = n0;
  f.tail = tail;
  for (auto h : head)
    f.head.push_back({HalfInt(h), 0});
  return f;
}

std::string WeightFamily::to_string() const {
  std::ostringstream os;
  os << "n0=" << n0 << " head=(";
  for (std::size_t i = 0; i < head.size(); ++i) {
    os << (i ? "," : "") << head[i].constant;
    if (head[i].slope != 0)
      os << (head[i].slope > 0 ? "+" : "") << head[i].slope << "n";
  }
  os << ") tail=" << tail;
  return os.str();
}

namespace {

bool type_a_tower(const TowerDescriptor& tower) {
  return tower.kind() == TowerKind::SL || tower.kind() == TowerKind::DiagonalA;
}

} // namespace

void validate_family(const WeightFamily& f, const TowerDescriptor& tower) {
  if (f.n0 < 1)
    throw InvalidInput("family n0 must be >= 1, got " + std::to_string(f.n0));
  if (!type_a_tower(tower) && f.tail < 0)
    throw InvalidInput("family tail must be >= 0 on the " + tower.to_string() + " tower");
  const bool tail_integral = f.tail.is_integer();
  for (const auto& form : f.head) {
    if (form.constant.is_integer() != tail_integral)
      throw InvalidInput("family mixes integer and half-integer coordinates: " + f.to_string());
  }
  if (!tail_integral && tower.kind() != TowerKind::SO)
    throw InvalidInput("half-integer families are only representable on the SO tower");
  const int coords = tower.coords_at(f.n0);
  if (static_cast<int>(f.head.size()) > coords)
    throw InvalidInput("family head of length " + std::to_string(f.head.size()) +
                       " does not fit the " + std::to_string(coords) + " coordinates at level " +
                       std::to_string(f.n0));
}

WeightFamily canonicalize(const WeightFamily& f, const TowerDescriptor& tower) {
  validate_family(f, tower);
  WeightFamily out = f;
  if (type_a_tower(tower)) {
    for (auto& form : out.head)
      form.constant -= out.tail;
    out.tail = 0;
  }
  while (!out.head.empty() && out.head.back().slope == 0 && out.head.back().constant == out.tail)
    out.head.pop_back();
  return out;
}

bool same_limit(const WeightFamily& a, const WeightFamily& b, const TowerDescriptor& tower) {
  const auto ca = canonicalize(a, tower);
  const auto cb = canonicalize(b, tower);
  return ca.head == cb.head && ca.tail == cb.tail;
}

RankedWeight weight_at_level(const WeightFamily& f, const TowerDescriptor& tower, int n) {
  if (n < f.n0)
    throw InvalidInput("level " + std::to_string(n) + " is below the family start n0=" +
                       std::to_string(f.n0));
  const int coords = tower.coords_at(n);
  if (static_cast<int>(f.head.size()) > coords)
    throw InvalidInput("family head of length " + std::to_string(f.head.size()) +
                       " does not fit the " + std::to_string(coords) + " coordinates at level " +
                       std::to_string(n));
  std::vector<HalfInt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(coords));
  for (const auto& form : f.head)
    coeffs.push_back(form.at(n));
  coeffs.resize(static_cast<std::size_t>(coords), f.tail);
  return RankedWeight(tower.type_at(n), tower.rank_at(n), std::move(coeffs));
}

RankedWeight restrict_to_level(const RankedWeight& upper, const TowerDescriptor& tower, int n) {
  if (!tower.is_finitary())
    throw InvalidInput("restriction along diagonal embeddings is not supported");
  if (upper.type() != tower.type_at(n + 1) || upper.rank() != tower.rank_at(n + 1))
    throw InvalidInput(upper.to_string() + " is not a weight of level " + std::to_string(n + 1) +
                       " of the " + tower.to_string() + " tower");
  const auto coeffs = upper.coeffs().first(static_cast<std::size_t>(tower.coords_at(n)));
  return RankedWeight(tower.type_at(n), tower.rank_at(n),
                      std::vector<HalfInt>(coeffs.begin(), coeffs.end()));
}

bool check_projective_compatibility(const WeightFamily& f, const TowerDescriptor& tower) {
  WeightFamily canonical;
  try {
    canonical = canonicalize(f, tower);
  } catch (const InvalidInput&) {
    return false;
  }
  // Restriction drops surplus coordinates, so the tail truncates to itself
  // and each head coordinate must not move with n. For type A the shift
  // ambiguity is absorbed by the canonical tail 0: a constant difference
  // between levels would have to vanish on the tail coordinates.
  return std::all_of(canonical.head.begin(), canonical.head.end(),
                     [](const AffineForm& form) { return form.slope == 0; });
}

namespace {

// First level >= from whose coordinate count reaches at least `coords`.
int first_level_with_coords(const TowerDescriptor& tower, int from, int coords) {
  int n = from;
  while (tower.coords_at(n) < coords)
    ++n;
  return n;
}

// a(n) >= 0 for every n >= start
bool nonnegative_from(const AffineForm& a, int start) {
  return a.slope >= 0 && a.at(start) >= 0;
}

AffineForm difference(const AffineForm& a, const AffineForm& b) {
  return {a.constant - b.constant, a.slope - b.slope};
}

} // namespace

bool is_dominant_family(const WeightFamily& f, const TowerDescriptor& tower) {
  validate_family(f, tower);
  const int k = static_cast<int>(f.head.size());
  const int start = first_level_with_coords(tower, f.n0, k + 2);
  for (int n = f.n0; n < start; ++n)
    if (!is_dominant(weight_at_level(f, tower, n)))
      return false;

  // From `start` on the tail holds at least two coordinates, so the last
  // coordinate (and for D the last two) belong to the tail.
  for (int i = 0; i + 1 < k; ++i)
    if (!nonnegative_from(difference(f.head[i], f.head[i + 1]), start))
      return false;
  if (k > 0 && !nonnegative_from(difference(f.head.back(), AffineForm{f.tail, 0}), start))
    return false;
  return type_a_tower(tower) || f.tail >= 0;
}

// ---------------------------------------------------------------------------
// Stabilization

namespace {

struct Comparison {
  std::function<HalfInt(int)> value;
  // coefficient of the rank in value(n); only its sign matters
  int rank_coefficient;
};

bool superlinear_rank(const TowerDescriptor& tower) {
  return tower.kind() == TowerKind::DiagonalA && tower.multiplicity() >= 2;
}

// Smallest level from which value(n) keeps a constant sign.
int sign_threshold(const Comparison& cmp, const TowerDescriptor& tower, int start) {
  if (superlinear_rank(tower) && cmp.rank_coefficient != 0) {
    // value = affine(n) + m * rank(n) with rank increments nondecreasing:
    // once value and its increment both carry the sign of m, they keep it.
    const int want = cmp.rank_coefficient > 0 ? 1 : -1;
    for (int n = start;; ++n) {
      const HalfInt here = cmp.value(n);
      const HalfInt step = cmp.value(n + 1) - here;
      if (here.sign() == want && step.sign() == want)
        return n;
    }
  }

  // value is affine along each residue class (SO alternates B and D levels)
  const int period = tower.kind() == TowerKind::SO ? 2 : 1;
  int threshold = start;
  for (int offset = 0; offset < period; ++offset) {
    const int first = start + offset;
    const HalfInt v0 = cmp.value(first);
    const HalfInt slope = cmp.value(first + period) - v0;
    if (slope == 0 || v0.sign() == slope.sign()) {
      threshold = std::max(threshold, first);
      continue;
    }
    // smallest j with v0 + j * slope strictly of the sign of slope
    const std::int64_t steps = std::abs(v0.twice()) / std::abs(slope.twice()) + 1;
    const std::int64_t level = first + steps * period;
    if (level > TowerDescriptor::kMaxRank)
      throw CapacityExceeded("stabilization threshold beyond supported levels");
    threshold = std::max(threshold, static_cast<int>(level));
  }
  return threshold;
}

} // namespace

int pattern_threshold(const WeightFamily& f, const TowerDescriptor& tower) {
  validate_family(f, tower);
  const int k = static_cast<int>(f.head.size());
  const int start = first_level_with_coords(tower, f.n0, k + 2);
  if (k == 0)
    return start;

  const auto shifted_head = [&f, &tower](int i) {
    return [&f, &tower, i](int n) {
      return f.head[static_cast<std::size_t>(i)].at(n) +
             rho_entry(tower.type_at(n), tower.rank_at(n), i + 1);
    };
  };
  const auto tail_top = [&f, &tower, k](int n) {
    return f.tail + rho_entry(tower.type_at(n), tower.rank_at(n), k + 1);
  };
  const auto tail_bottom = [&f, &tower](int n) {
    return f.tail + rho_entry(tower.type_at(n), tower.rank_at(n), tower.coords_at(n));
  };
  const bool signed_type = !type_a_tower(tower);

  std::vector<Comparison> comparisons;
  for (int i = 0; i < k; ++i) {
    const auto vi = shifted_head(i);
    for (int j = i + 1; j < k; ++j) {
      const auto vj = shifted_head(j);
      comparisons.push_back({[=](int n) { return vi(n) - vj(n); }, 0});
      if (signed_type)
        comparisons.push_back({[=](int n) { return vi(n) + vj(n); }, 2});
    }
    comparisons.push_back({[=](int n) { return vi(n) - tail_top(n); }, 0});
    comparisons.push_back({[=](int n) { return vi(n) - tail_bottom(n); }, 1});
    if (signed_type) {
      comparisons.push_back({vi, 1});
      comparisons.push_back({[=](int n) { return vi(n) + tail_top(n); }, 2});
      comparisons.push_back({[=](int n) { return vi(n) + tail_bottom(n); }, 1});
    }
  }

  int threshold = start;
  for (const auto& cmp : comparisons)
    threshold = std::max(threshold, sign_threshold(cmp, tower, start));
  return threshold;
}

namespace {

class LevelProbe {
public:
  LevelProbe(const WeightFamily& f, const TowerDescriptor& tower,
             const ParabolicDescriptor& parabolic)
      : f_(f), tower_(tower), parabolic_(parabolic) {}

  const BBWOutcome& at(int n) {
    auto it = cache_.find(n);
    if (it != cache_.end())
      return it->second;
    const auto lambda = weight_at_level(f_, tower_, n);
    if (!parabolic_validity(lambda, parabolic_.levi_positions))
      throw InvalidInput("weight " + lambda.to_string() + " at level " + std::to_string(n) +
                         " is not dominant for the Levi factor of the parabolic");
    return cache_.emplace(n, bbw_resolve(lambda)).first->second;
  }

private:
  const WeightFamily& f_;
  const TowerDescriptor& tower_;
  const ParabolicDescriptor& parabolic_;
  std::map<int, BBWOutcome> cache_;
};

} // namespace

LimitCohomology bbw_limit(const WeightFamily& f, const TowerDescriptor& tower,
                          const ParabolicDescriptor& parabolic, int probe_levels) {
  if (probe_levels < 3)
    throw InvalidInput("probe_levels must be at least 3, got " + std::to_string(probe_levels));
  validate_family(f, tower);

  LevelProbe probe(f, tower, parabolic);
  LimitCohomology result;
  for (int n = f.n0; n <= f.n0 + probe_levels; ++n)
    result.trace.push_back({n, probe.at(n)});

  const int threshold = pattern_threshold(f, tower);
  const int window = tower.kind() == TowerKind::SO ? 4 : 3;
  const int window_end = threshold + window - 1;
  result.stable_from = threshold;

  std::vector<const BBWOutcome*> eventual;
  for (int n = threshold; n <= window_end; ++n)
    eventual.push_back(&probe.at(n));

  const auto singular_count = std::count_if(eventual.begin(), eventual.end(),
                                            [](const BBWOutcome* o) { return o->is_singular(); });
  if (singular_count == static_cast<std::ptrdiff_t>(eventual.size())) {
    int from = threshold;
    while (from > f.n0 && probe.at(from - 1).is_singular())
      --from;
    result.kind = LimitCohomology::Kind::Vanishing;
    result.diagnostic = "singular at every level >= " + std::to_string(from);
    return result;
  }

  std::ostringstream seen;
  bool degrees_agree = singular_count == 0;
  for (int n = threshold; n <= window_end; ++n) {
    const auto& o = *eventual[static_cast<std::size_t>(n - threshold)];
    seen << (n > threshold ? ", " : "") << "level " << n << ": "
         << (o.is_singular() ? std::string("singular") : "q=" + std::to_string(o.degree()));
    if (degrees_agree && o.degree() != eventual.front()->degree())
      degrees_agree = false;
  }
  if (!degrees_agree) {
    result.kind = LimitCohomology::Kind::NonStable;
    result.diagnostic = "degree does not stabilize (" + seen.str() + ")";
    return result;
  }

  // Past the threshold every shifted head entry sits above the tail block and
  // is positive, so the Weyl element only permutes head positions. The result
  // keeps the tail and moves head entry sigma(j) to slot j, picking up
  // rho_{sigma(j)} - rho_j = j - sigma(j).
  const int degree = eventual.front()->degree();
  const int k = static_cast<int>(f.head.size());
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  const auto shifted = [&](int i) {
    return f.head[static_cast<std::size_t>(i)].at(threshold) +
           rho_entry(tower.type_at(threshold), tower.rank_at(threshold), i + 1);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return shifted(a) > shifted(b); });

  WeightFamily mu;
  mu.tail = f.tail;
  for (int j = 0; j < k; ++j) {
    const auto& source = f.head[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
    mu.head.push_back({source.constant + HalfInt(j - order[static_cast<std::size_t>(j)]),
                       source.slope});
  }

  const auto matches = [&](int n) {
    const auto& o = probe.at(n);
    return o.is_regular() && o.degree() == degree && o.weight() == weight_at_level(mu, tower, n);
  };
  const int verify_end = std::max(window_end, f.n0 + probe_levels);
  for (int n = threshold; n <= verify_end; ++n)
    if (!matches(n))
      throw InternalInconsistency("limit family " + mu.to_string() + " does not reproduce level " +
                                  std::to_string(n) + " of " + f.to_string());
  int from = threshold;
  while (from > f.n0 && matches(from - 1))
    --from;
  mu.n0 = from;
  if (!is_dominant_family(mu, tower))
    throw InternalInconsistency("limit family " + mu.to_string() + " is not dominant");

  result.kind = LimitCohomology::Kind::Stable;
  result.degree = degree;
  result.weight = canonicalize(mu, tower);
  result.diagnostic = "stable from level " + std::to_string(from);
  return result;
}

} // namespace indbbw
