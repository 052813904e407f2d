#include "indbbw/bbw.hpp"

#include "indbbw/errors.hpp"

#include <algorithm>
#include <cassert>
#include <climits>

namespace indbbw {

BBWOutcome BBWOutcome::regular(int degree, RankedWeight weight) {
  BBWOutcome out;
  out.degree_ = degree;
  out.weight_ = std::move(weight).canonical();
  return out;
}

std::string BBWOutcome::to_string() const {
  if (is_singular())
    return "Singular";
  return "Regular{q=" + std::to_string(degree_) + ", " + weight_->to_string() + "}";
}

namespace {

std::vector<HalfInt> shifted_by_rho(const RankedWeight& lambda) {
  std::vector<HalfInt> v(lambda.coeffs().begin(), lambda.coeffs().end());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] += rho_entry(lambda.type(), lambda.rank(), static_cast<int>(i) + 1);
  return v;
}

RankedWeight subtract_rho(ClassicalType type, int rank, std::vector<HalfInt> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] -= rho_entry(type, rank, static_cast<int>(i) + 1);
  return RankedWeight(type, rank, std::move(v));
}

class Fenwick {
public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}
  void add(std::size_t pos) {
    for (++pos; pos < tree_.size(); pos += pos & (~pos + 1))
      ++tree_[pos];
  }
  // number of inserted positions strictly below pos
  std::int64_t count_below(std::size_t pos) const {
    std::int64_t total = 0;
    for (; pos > 0; pos -= pos & (~pos + 1))
      total += tree_[pos];
    return total;
  }

private:
  std::vector<std::int64_t> tree_;
};

} // namespace

bool lies_on_wall(ClassicalType type, std::span<const HalfInt> v) {
  std::vector<HalfInt> sorted(v.begin(), v.end());
  if (type != ClassicalType::A) {
    if ((type == ClassicalType::B || type == ClassicalType::C) &&
        std::any_of(sorted.begin(), sorted.end(), [](HalfInt h) { return h == 0; }))
      return true;
    for (auto& h : sorted)
      h = abs(h);
  }
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::int64_t negative_pairing_count(ClassicalType type, std::span<const HalfInt> v) {
  // Pairs i < j with v_i < v_j (roots e_i - e_j); for B, C, D also pairs with
  // v_i < -v_j (roots e_i + e_j); for B, C single entries v_i < 0.
  std::vector<std::int64_t> values;
  values.reserve(2 * v.size());
  for (auto h : v) {
    values.push_back(h.twice());
    if (type != ClassicalType::A)
      values.push_back(-h.twice());
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const auto slot = [&](std::int64_t x) {
    return static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), x) -
                                    values.begin());
  };

  Fenwick seen(values.size());
  std::int64_t count = 0;
  for (auto h : v) {
    count += seen.count_below(slot(h.twice()));
    if (type != ClassicalType::A)
      count += seen.count_below(slot(-h.twice()));
    if ((type == ClassicalType::B || type == ClassicalType::C) && h < 0)
      ++count;
    seen.add(slot(h.twice()));
  }
  return count;
}

std::vector<HalfInt> dominant_representative(ClassicalType type, std::span<const HalfInt> v) {
  std::vector<HalfInt> out(v.begin(), v.end());
  if (type == ClassicalType::A) {
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
  }
  const auto negatives = std::count_if(out.begin(), out.end(), [](HalfInt h) { return h < 0; });
  for (auto& h : out)
    h = abs(h);
  std::sort(out.begin(), out.end(), std::greater<>{});
  if (type == ClassicalType::D && negatives % 2 == 1 && out.back() != 0)
    out.back() = -out.back();
  return out;
}

BBWOutcome bbw_resolve(const RankedWeight& lambda) {
  const auto v = shifted_by_rho(lambda);
  BBWOutcome result = BBWOutcome::singular();
  if (!lies_on_wall(lambda.type(), v)) {
    const auto degree = negative_pairing_count(lambda.type(), v);
    if (degree > INT_MAX)
      throw CapacityExceeded("cohomological degree overflows int at " + lambda.to_string());
    result = BBWOutcome::regular(
        static_cast<int>(degree),
        subtract_rho(lambda.type(), lambda.rank(), dominant_representative(lambda.type(), v)));
  }
#ifndef NDEBUG
  if (lambda.rank() <= 64 && !(result == bbw_resolve_reflection_walk(lambda)))
    throw InternalInconsistency("bbw_resolve and reflection walk disagree at " +
                                lambda.to_string());
#endif
  return result;
}

BBWOutcome bbw_resolve_reflection_walk(const RankedWeight& lambda) {
  const ClassicalType type = lambda.type();
  auto v = shifted_by_rho(lambda);
  const std::size_t n = v.size();
  int steps = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (v[i] < v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        ++steps;
        moved = true;
      }
    }
    if ((type == ClassicalType::B || type == ClassicalType::C) && v[n - 1] < 0) {
      v[n - 1] = -v[n - 1];
      ++steps;
      moved = true;
    }
    if (type == ClassicalType::D && v[n - 2] + v[n - 1] < 0) {
      const HalfInt a = v[n - 2];
      v[n - 2] = -v[n - 1];
      v[n - 1] = -a;
      ++steps;
      moved = true;
    }
  }
  if (!is_strictly_dominant(type, v))
    return BBWOutcome::singular();
  return BBWOutcome::regular(steps, subtract_rho(type, lambda.rank(), std::move(v)));
}

BBWOutcome bbw_resolve_oracle(const RankedWeight& lambda) {
  const auto elements = weyl_enumerate(lambda.type(), lambda.rank());
  const auto v = shifted_by_rho(lambda);
  // elements are sorted by length, so the first hit is minimal
  for (const auto& [w, length] : elements) {
    auto image = w.apply(std::span<const HalfInt>(v));
    if (is_strictly_dominant(lambda.type(), image))
      return BBWOutcome::regular(length, subtract_rho(lambda.type(), lambda.rank(), std::move(image)));
  }
  return BBWOutcome::singular();
}

bool parabolic_validity(const RankedWeight& lambda, const std::set<int>& levi_roots) {
  const int r = lambda.rank();
  const auto a = lambda.coeffs();
  for (int i : levi_roots) {
    if (i < 1 || i > r)
      throw InvalidInput("simple root index " + std::to_string(i) + " is out of range for " +
                         lambda.to_string());
    const auto k = static_cast<std::size_t>(i - 1);
    HalfInt pairing;
    if (lambda.type() == ClassicalType::A || i < r)
      pairing = a[k] - a[k + 1];
    else if (lambda.type() == ClassicalType::D)
      pairing = a[k - 1] + a[k];
    else
      pairing = a[k];
    if (pairing < 0)
      return false;
  }
  return true;
}

} // namespace indbbw
