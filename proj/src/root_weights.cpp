#include "indbbw/root_weights.hpp"

#include "indbbw/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace indbbw {

std::string to_string(ClassicalType type) {
  switch (type) {
  case ClassicalType::A: return "A";
  case ClassicalType::B: return "B";
  case ClassicalType::C: return "C";
  case ClassicalType::D: return "D";
  }
  return "?";
}

std::optional<ClassicalType> parse_classical_type(const std::string& name) {
  if (name == "A") return ClassicalType::A;
  if (name == "B") return ClassicalType::B;
  if (name == "C") return ClassicalType::C;
  if (name == "D") return ClassicalType::D;
  return std::nullopt;
}

int coordinate_count(ClassicalType type, int rank) {
  return type == ClassicalType::A ? rank + 1 : rank;
}

void check_rank(ClassicalType type, int rank) {
  const int min_rank = type == ClassicalType::D ? 2 : 1;
  if (rank < min_rank)
    throw InvalidInput("rank " + std::to_string(rank) + " is invalid for type " +
                       to_string(type) + " (minimum " + std::to_string(min_rank) + ")");
}

int positive_root_count(ClassicalType type, int rank) {
  switch (type) {
  case ClassicalType::A: return rank * (rank + 1) / 2;
  case ClassicalType::B:
  case ClassicalType::C: return rank * rank;
  case ClassicalType::D: return rank * (rank - 1);
  }
  return 0;
}

std::vector<std::vector<int>> positive_roots(ClassicalType type, int rank) {
  check_rank(type, rank);
  const int n = coordinate_count(type, rank);
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> minus(n, 0);
      minus[i] = 1;
      minus[j] = -1;
      roots.push_back(std::move(minus));
      if (type != ClassicalType::A) {
        std::vector<int> plus(n, 0);
        plus[i] = 1;
        plus[j] = 1;
        roots.push_back(std::move(plus));
      }
    }
    if (type == ClassicalType::B || type == ClassicalType::C) {
      std::vector<int> single(n, 0);
      single[i] = type == ClassicalType::B ? 1 : 2;
      roots.push_back(std::move(single));
    }
  }
  return roots;
}

// ---------------------------------------------------------------------------
// RankedWeight

RankedWeight::RankedWeight(ClassicalType type, int rank, std::vector<HalfInt> coeffs)
    : type_(type), rank_(rank), coeffs_(std::move(coeffs)) {
  check_rank(type, rank);
  const auto expected = static_cast<std::size_t>(coordinate_count(type, rank));
  if (coeffs_.size() != expected)
    throw InvalidInput("type " + indbbw::to_string(type) + " rank " + std::to_string(rank) +
                       " needs " + std::to_string(expected) + " coordinates, got " +
                       std::to_string(coeffs_.size()));
  const auto integral = std::count_if(coeffs_.begin(), coeffs_.end(),
                                      [](HalfInt h) { return h.is_integer(); });
  const bool all_integral = integral == static_cast<std::ptrdiff_t>(coeffs_.size());
  const bool all_half = integral == 0;
  if (type == ClassicalType::A || type == ClassicalType::C) {
    if (!all_integral)
      throw InvalidInput("type " + indbbw::to_string(type) + " weights must be integral");
  } else if (!all_integral && !all_half) {
    throw InvalidInput("type " + indbbw::to_string(type) +
                       " weight mixes integer and half-integer coordinates");
  }
}

RankedWeight RankedWeight::from_integers(ClassicalType type, int rank,
                                         const std::vector<std::int64_t>& coeffs) {
  return RankedWeight(type, rank, std::vector<HalfInt>(coeffs.begin(), coeffs.end()));
}

RankedWeight RankedWeight::zero(ClassicalType type, int rank) {
  check_rank(type, rank);
  return RankedWeight(type, rank,
                      std::vector<HalfInt>(static_cast<std::size_t>(coordinate_count(type, rank))));
}

bool RankedWeight::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](HalfInt h) { return h.is_integer(); });
}

RankedWeight RankedWeight::canonical() const {
  if (type_ != ClassicalType::A)
    return *this;
  const HalfInt low = *std::min_element(coeffs_.begin(), coeffs_.end());
  std::vector<HalfInt> shifted(coeffs_);
  for (auto& c : shifted)
    c -= low;
  return RankedWeight(type_, rank_, std::move(shifted));
}

std::string RankedWeight::to_string() const {
  std::ostringstream os;
  os << indbbw::to_string(type_) << rank_ << "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    os << (i ? "," : "") << coeffs_[i];
  os << ")";
  return os.str();
}

bool operator==(const RankedWeight& a, const RankedWeight& b) {
  if (a.type_ != b.type_ || a.rank_ != b.rank_)
    return false;
  if (a.type_ == ClassicalType::A)
    return a.canonical().coeffs_ == b.canonical().coeffs_;
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const RankedWeight& a, const RankedWeight& b) {
  if (auto c = a.type_ <=> b.type_; c != 0) return c;
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (a.type_ == ClassicalType::A) {
    const auto ca = a.canonical();
    const auto cb = b.canonical();
    return std::lexicographical_compare_three_way(ca.coeffs_.begin(), ca.coeffs_.end(),
                                                  cb.coeffs_.begin(), cb.coeffs_.end());
  }
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(),
                                                b.coeffs_.begin(), b.coeffs_.end());
}

// ---------------------------------------------------------------------------
// rho, dominance

HalfInt rho_entry(ClassicalType type, int rank, int i) {
  switch (type) {
  case ClassicalType::A:
  case ClassicalType::C: return HalfInt(rank + 1 - i);
  case ClassicalType::B: return HalfInt::from_twice(2 * (rank - i) + 1);
  case ClassicalType::D: return HalfInt(rank - i);
  }
  return {};
}

RankedWeight rho(ClassicalType type, int rank) {
  check_rank(type, rank);
  const int n = coordinate_count(type, rank);
  std::vector<HalfInt> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    v.push_back(rho_entry(type, rank, i));
  return RankedWeight(type, rank, std::move(v));
}

namespace {

bool weakly_decreasing(std::span<const HalfInt> v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>{});
}

bool strictly_decreasing(std::span<const HalfInt> v) {
  return std::adjacent_find(v.begin(), v.end(), std::less_equal<>{}) == v.end();
}

} // namespace

bool is_dominant(const RankedWeight& w) {
  const auto v = w.coeffs();
  switch (w.type()) {
  case ClassicalType::A: return weakly_decreasing(v);
  case ClassicalType::B:
  case ClassicalType::C: return weakly_decreasing(v) && v.back() >= 0;
  case ClassicalType::D: {
    const auto head = v.first(v.size() - 1);
    return weakly_decreasing(head) && head.back() >= abs(v.back());
  }
  }
  return false;
}

bool is_strictly_dominant(ClassicalType type, std::span<const HalfInt> v) {
  switch (type) {
  case ClassicalType::A: return strictly_decreasing(v);
  case ClassicalType::B:
  case ClassicalType::C: return strictly_decreasing(v) && v.back() > 0;
  case ClassicalType::D: {
    const auto head = v.first(v.size() - 1);
    return strictly_decreasing(head) && head.back() > abs(v.back());
  }
  }
  return false;
}

namespace {

// Calls visit(<lambda, a>, <lambda + rho, a>, <rho, a>) per positive root a, in doubled units.
template <class Visit>
void for_each_root_pairing(ClassicalType type, std::span<const HalfInt> lambda,
                           std::span<const HalfInt> shifted, std::span<const HalfInt> r,
                           Visit visit) {
  const std::size_t n = lambda.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      visit((lambda[i] - lambda[j]).twice(), (shifted[i] - shifted[j]).twice(),
            (r[i] - r[j]).twice());
      if (type != ClassicalType::A)
        visit((lambda[i] + lambda[j]).twice(), (shifted[i] + shifted[j]).twice(),
              (r[i] + r[j]).twice());
    }
    if (type == ClassicalType::B || type == ClassicalType::C) {
      const int scale = type == ClassicalType::B ? 1 : 2;
      visit(scale * lambda[i].twice(), scale * shifted[i].twice(), scale * r[i].twice());
    }
  }
}

} // namespace

BigInt signed_weyl_dimension(const RankedWeight& lambda) {
  const auto r = rho(lambda.type(), lambda.rank());
  std::vector<HalfInt> shifted(lambda.coeffs().begin(), lambda.coeffs().end());
  for (std::size_t i = 0; i < shifted.size(); ++i)
    shifted[i] += r[i];
  // roots orthogonal to lambda contribute a factor of 1
  BigInt numerator = 1;
  BigInt denominator = 1;
  bool singular = false;
  for_each_root_pairing(lambda.type(), lambda.coeffs(), shifted, r.coeffs(),
                        [&](std::int64_t own, std::int64_t top, std::int64_t bottom) {
                          if (own == 0 || singular)
                            return;
                          if (top == 0) {
                            singular = true;
                            return;
                          }
                          numerator *= top;
                          denominator *= bottom;
                        });
  if (singular)
    return 0;
  if (numerator % denominator != 0)
    throw InternalInconsistency("Weyl product at " + lambda.to_string() +
                                " is not an integer multiple of the product at rho");
  return numerator / denominator;
}

BigInt dim_irrep(const RankedWeight& w) {
  if (!is_dominant(w))
    throw InvalidInput("dim_irrep requires a dominant weight, got " + w.to_string());
  return signed_weyl_dimension(w);
}

// ---------------------------------------------------------------------------
// Weyl group enumeration

std::vector<HalfInt> SignedPermutation::apply(std::span<const HalfInt> v) const {
  std::vector<HalfInt> out(v.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const int target = std::abs(image[i]) - 1;
    out[static_cast<std::size_t>(target)] = image[i] > 0 ? v[i] : -v[i];
  }
  return out;
}

std::vector<int> SignedPermutation::apply(std::span<const int> v) const {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const int target = std::abs(image[i]) - 1;
    out[static_cast<std::size_t>(target)] = image[i] > 0 ? v[i] : -v[i];
  }
  return out;
}

std::vector<WeylElement> weyl_enumerate(ClassicalType type, int rank) {
  check_rank(type, rank);
  const int cap = type == ClassicalType::A ? kWeylEnumerationCapA : kWeylEnumerationCapBCD;
  if (rank > cap)
    throw CapacityExceeded("Weyl group enumeration is capped at rank " + std::to_string(cap) +
                           " for type " + to_string(type));

  const int n = coordinate_count(type, rank);
  const auto roots = positive_roots(type, rank);
  const std::set<std::vector<int>> positive(roots.begin(), roots.end());

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  const unsigned sign_masks = type == ClassicalType::A ? 1u : (1u << n);

  std::vector<WeylElement> elements;
  do {
    for (unsigned mask = 0; mask < sign_masks; ++mask) {
      const int flips = __builtin_popcount(mask);
      if (type == ClassicalType::D && flips % 2 != 0)
        continue;
      SignedPermutation w{perm};
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i))
          w.image[static_cast<std::size_t>(i)] *= -1;
      int length = 0;
      for (const auto& root : roots)
        if (!positive.contains(w.apply(std::span<const int>(root))))
          ++length;
      elements.push_back({std::move(w), length});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::sort(elements.begin(), elements.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.length != b.length ? a.length < b.length : a.element < b.element;
  });
  return elements;
}

} // namespace indbbw
