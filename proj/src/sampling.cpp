#include "indbbw/sampling.hpp"

#include <algorithm>

namespace indbbw {

RankedWeight random_weight(std::mt19937_64& rng, ClassicalType type, int rank, int low, int high) {
  std::uniform_int_distribution<int> entry(low, high);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(coordinate_count(type, rank)));
  for (auto& c : coeffs)
    c = entry(rng);
  return RankedWeight::from_integers(type, rank, coeffs);
}

RankedWeight random_dominant_weight(std::mt19937_64& rng, ClassicalType type, int rank,
                                    int max_entry) {
  std::uniform_int_distribution<int> entry(0, max_entry);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(coordinate_count(type, rank)));
  for (auto& c : coeffs)
    c = entry(rng);
  std::sort(coeffs.begin(), coeffs.end(), std::greater<>{});
  if (type == ClassicalType::D && std::bernoulli_distribution(0.5)(rng))
    coeffs.back() = -coeffs.back();
  return RankedWeight::from_integers(type, rank, coeffs);
}

} // namespace indbbw
