#pragma once

#include "indbbw/ind_families.hpp"

#include <random>

namespace indbbw {

/// Uniform integral weight with entries in [low, high].
RankedWeight random_weight(std::mt19937_64& rng, ClassicalType type, int rank, int low, int high);

/// Dominant integral weight with first entry at most `max_entry`.
RankedWeight random_dominant_weight(std::mt19937_64& rng, ClassicalType type, int rank,
                                    int max_entry);

} // namespace indbbw
