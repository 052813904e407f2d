#pragma once

#include "indbbw/half_int.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace indbbw {

using BigInt = boost::multiprecision::cpp_int;

enum class ClassicalType { A, B, C, D };

std::string to_string(ClassicalType type);
std::optional<ClassicalType> parse_classical_type(const std::string& name);

/// Number of epsilon coordinates: rank + 1 for type A, rank otherwise.
int coordinate_count(ClassicalType type, int rank);

/// Throws InvalidInput unless rank >= 1 (rank >= 2 for type D).
void check_rank(ClassicalType type, int rank);

int positive_root_count(ClassicalType type, int rank);

/// Positive roots in epsilon coordinates (entries in {-2,...,2}).
std::vector<std::vector<int>> positive_roots(ClassicalType type, int rank);

/// A weight of a classical simple Lie algebra in epsilon coordinates.
///
/// Type A weights are only defined modulo the all-ones vector; equality and
/// ordering go through the canonical representative (minimum entry 0).
/// Types A and C are integral. Types B and D accept integral or spin
/// (all half-integer) coordinates, never a mix.
class RankedWeight {
public:
  RankedWeight(ClassicalType type, int rank, std::vector<HalfInt> coeffs);

  static RankedWeight from_integers(ClassicalType type, int rank,
                                    const std::vector<std::int64_t>& coeffs);
  static RankedWeight zero(ClassicalType type, int rank);

  ClassicalType type() const { return type_; }
  int rank() const { return rank_; }
  std::span<const HalfInt> coeffs() const { return coeffs_; }
  HalfInt operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const { return coeffs_.size(); }

  bool is_integral() const;

  /// For type A: shifted so the minimum entry is 0. Identity otherwise.
  RankedWeight canonical() const;

  std::string to_string() const;

  friend bool operator==(const RankedWeight& a, const RankedWeight& b);
  friend std::strong_ordering operator<=>(const RankedWeight& a, const RankedWeight& b);

private:
  ClassicalType type_;
  int rank_;
  std::vector<HalfInt> coeffs_;
};

/// Half-sum of positive roots. Type A uses the representative (r, r-1, ..., 0).
RankedWeight rho(ClassicalType type, int rank);

/// i-th entry (1-based) of rho(type, rank) without building the vector.
HalfInt rho_entry(ClassicalType type, int rank, int i);

bool is_dominant(const RankedWeight& w);

/// Dominance with strict inequalities (regular dominant chamber interior).
bool is_strictly_dominant(ClassicalType type, std::span<const HalfInt> v);

/// Weyl dimension formula. Throws InvalidInput for non-dominant input.
BigInt dim_irrep(const RankedWeight& w);

/// Weyl's product formula evaluated at lambda + rho, without requiring
/// dominance: prod <lambda+rho, a> / prod <rho, a> over positive roots a.
/// Zero exactly when lambda + rho is singular.
BigInt signed_weyl_dimension(const RankedWeight& lambda);

/// Signed permutation acting on epsilon coordinates: the image of e_i is
/// sign * e_j where image[i] = sign * (j + 1).
struct SignedPermutation {
  std::vector<int> image;

  std::vector<HalfInt> apply(std::span<const HalfInt> v) const;
  std::vector<int> apply(std::span<const int> v) const;

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

struct WeylElement {
  SignedPermutation element;
  int length;
};

inline constexpr int kWeylEnumerationCapA = 6;
inline constexpr int kWeylEnumerationCapBCD = 4;

/// Every Weyl group element with its Coxeter length (number of positive
/// roots sent to negative roots), sorted by length then element.
/// Throws CapacityExceeded above rank 6 (type A) or rank 4 (B, C, D).
std::vector<WeylElement> weyl_enumerate(ClassicalType type, int rank);

} // namespace indbbw
