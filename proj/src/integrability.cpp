#include "indbbw/integrability.hpp"

#include "indbbw/errors.hpp"

#include <algorithm>

namespace indbbw {

std::string to_string(IntegrabilityVerdict::Status status) {
  switch (status) {
  case IntegrabilityVerdict::Status::Integrable: return "Integrable";
  case IntegrabilityVerdict::Status::NotIntegrable: return "NotIntegrable";
  case IntegrabilityVerdict::Status::ConditionHolds: return "ConditionHolds";
  case IntegrabilityVerdict::Status::ConditionFails: return "ConditionFails";
  }
  return "?";
}

HalfInt finitary_criterion_value(const RankedWeight& w) {
  const auto a = w.coeffs();
  if (w.type() == ClassicalType::A)
    return a.front() - a.back();
  return a.front();
}

HalfInt minimal_l1_norm(const RankedWeight& w) {
  std::vector<HalfInt> a(w.coeffs().begin(), w.coeffs().end());
  HalfInt center = 0;
  if (w.type() == ClassicalType::A) {
    std::sort(a.begin(), a.end());
    center = a[(a.size() - 1) / 2];
  }
  HalfInt total = 0;
  for (auto x : a)
    total += abs(x - center);
  return total;
}

namespace {

constexpr int kProbeLevels = 20;
constexpr int kProbeCoordinateCap = 1 << 16;

bool type_a_tower(const TowerDescriptor& tower) {
  return tower.kind() == TowerKind::SL || tower.kind() == TowerKind::DiagonalA;
}

int first_level_with_coords(const TowerDescriptor& tower, int from, int coords) {
  int n = from;
  while (tower.coords_at(n) < coords)
    ++n;
  return n;
}

void require_dominant(const WeightFamily& f, const TowerDescriptor& tower) {
  if (!is_dominant_family(f, tower))
    throw InvalidInput("integrability criteria need a dominant family, got " + f.to_string());
}

// Supremum of an eventually-affine criterion: numeric on [n0, start), affine
// from `start` on.
struct SupremumSketch {
  std::optional<HalfInt> early_max;
  bool unbounded = false;
  HalfInt value_at_start;
};

std::optional<HalfInt> finite_supremum(const SupremumSketch& s) {
  if (s.unbounded)
    return std::nullopt;
  return s.early_max ? std::max(*s.early_max, s.value_at_start) : s.value_at_start;
}

// Numeric cross-check over the first kProbeLevels levels.
template <typename Value>
void probe_supremum(const WeightFamily& f, const TowerDescriptor& tower, int start,
                    const std::optional<HalfInt>& sup, Value&& value, const char* what) {
  std::optional<HalfInt> probed_max;
  std::optional<HalfInt> at_start;
  HalfInt last;
  int last_level = 0;
  for (int n = f.n0; n < f.n0 + kProbeLevels; ++n) {
    if (tower.coords_at(n) > kProbeCoordinateCap)
      break;
    const HalfInt v = value(weight_at_level(f, tower, n));
    probed_max = probed_max ? std::max(*probed_max, v) : v;
    if (sup && v > *sup)
      throw InternalInconsistency(std::string(what) + " at level " + std::to_string(n) +
                                  " exceeds the computed supremum for " + f.to_string());
    if (n == start)
      at_start = v;
    last = v;
    last_level = n;
  }
  if (!sup && at_start && last_level > start + 1 && !(last > *at_start))
    throw InternalInconsistency(std::string(what) + " does not grow on probed levels although " +
                                "unbounded for " + f.to_string());
  if (sup && start < f.n0 + kProbeLevels && tower.coords_at(start) <= kProbeCoordinateCap &&
      probed_max != sup)
    throw InternalInconsistency(std::string(what) + " supremum is not attained on probed levels for " +
                                f.to_string());
}

IntegrabilityVerdict make_verdict(std::optional<HalfInt> sup, IntegrabilityVerdict::Status yes,
                                  IntegrabilityVerdict::Status no) {
  if (!sup)
    return {no, std::nullopt, std::nullopt};
  return {yes, sup->ceil(), *sup};
}

} // namespace

IntegrabilityVerdict check_dual_integrable_finitary(const WeightFamily& f,
                                                    const TowerDescriptor& tower) {
  if (!tower.is_finitary())
    throw InvalidInput("the finitary criterion does not apply to the " + tower.to_string() +
                       " tower");
  require_dominant(f, tower);

  const int k = static_cast<int>(f.head.size());
  // from `start` on the last coordinate is the tail
  const int start = first_level_with_coords(tower, f.n0, k + 1);
  SupremumSketch sketch;
  for (int n = f.n0; n < start; ++n) {
    const HalfInt v = finitary_criterion_value(weight_at_level(f, tower, n));
    sketch.early_max = sketch.early_max ? std::max(*sketch.early_max, v) : v;
  }
  AffineForm lead = k > 0 ? f.head.front() : AffineForm{f.tail, 0};
  if (tower.kind() == TowerKind::SL)
    lead.constant -= f.tail;
  sketch.unbounded = lead.slope > 0;
  sketch.value_at_start = lead.at(start);

  const auto sup = finite_supremum(sketch);
  probe_supremum(f, tower, start, sup, finitary_criterion_value, "finitary criterion");
  return make_verdict(sup, IntegrabilityVerdict::Status::Integrable,
                      IntegrabilityVerdict::Status::NotIntegrable);
}

IntegrabilityVerdict check_dual_integrable_diagonal(const WeightFamily& f,
                                                    const TowerDescriptor& tower) {
  require_dominant(f, tower);

  const int k = static_cast<int>(f.head.size());
  const bool constant_head = std::all_of(f.head.begin(), f.head.end(),
                                         [](const AffineForm& a) { return a.slope == 0; });
  SupremumSketch sketch;
  int start = f.n0;
  if (type_a_tower(tower)) {
    // once the tail fills at least half the coordinates it contains a median,
    // and the optimal shift is the tail itself
    start = first_level_with_coords(tower, f.n0, 2 * k);
    for (int n = f.n0; n < start; ++n) {
      const HalfInt v = minimal_l1_norm(weight_at_level(f, tower, n));
      sketch.early_max = sketch.early_max ? std::max(*sketch.early_max, v) : v;
    }
    sketch.unbounded = !constant_head;
    for (const auto& form : f.head)
      sketch.value_at_start += abs(form.at(start) - f.tail);
  } else {
    // unique representative; the tail contributes |c| per coordinate
    sketch.unbounded = !constant_head || f.tail != 0;
    for (const auto& form : f.head)
      sketch.value_at_start += abs(form.at(start));
  }

  const auto sup = finite_supremum(sketch);
  probe_supremum(f, tower, start, sup, minimal_l1_norm, "L1 criterion");
  return make_verdict(sup, IntegrabilityVerdict::Status::ConditionHolds,
                      IntegrabilityVerdict::Status::ConditionFails);
}

CrossValidationReport cross_validate(const WeightFamily& f, const TowerDescriptor& tower, int n,
                                     int k_max, std::int64_t dim_cap) {
  if (k_max < 2)
    throw InvalidInput("cross_validate needs k_max >= 2 to observe stabilization");
  CrossValidationReport report{check_dual_integrable_finitary(f, tower),
                               count_isotypic(f, tower, n, k_max, dim_cap), false, false};
  const auto& c = report.counts;
  report.counts_stabilized = c[c.size() - 1] == c[c.size() - 2];
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i + 1] > c[i])
      report.counts_grow = true;

  const bool integrable = report.verdict.status == IntegrabilityVerdict::Status::Integrable;
  if (integrable ? !report.counts_stabilized : !report.counts_grow)
    throw InternalInconsistency("integrability verdict " + to_string(report.verdict.status) +
                                " disagrees with isotypic counts for " + f.to_string());
  return report;
}

} // namespace indbbw
