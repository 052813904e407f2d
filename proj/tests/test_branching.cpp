#include "test_util.hpp"

#include "indbbw/errors.hpp"
#include "indbbw/sampling.hpp"

#include <doctest.h>

#include <map>

using namespace indbbw;
using namespace indbbw::test;

namespace {

std::map<std::string, std::int64_t> as_map(const BranchMultiset& terms) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [w, m] : terms)
    out[w.to_string()] += m;
  return out;
}

BigInt total_dimension(const BranchMultiset& terms) {
  BigInt total = 0;
  for (const auto& [w, m] : terms)
    total += m * dim_irrep(w);
  return total;
}

} // namespace

// Frozen values below come from tests/oracle/reference.py (restricted
// characters via Freudenthal's formula).

TEST_CASE("SL adjoint branching") {
  const auto terms = branch_once(W(A, 2, {2, 1, 0}), TowerDescriptor::sl(), 2);
  CHECK(as_map(terms) ==
        std::map<std::string, std::int64_t>{{"A1(1,0)", 2}, {"A1(2,0)", 1}, {"A1(0,0)", 1}});
  CHECK(total_dimension(terms) == 8);
}

TEST_CASE("zero weight branches to the trivial module") {
  for (const auto& tower : {TowerDescriptor::sl(), TowerDescriptor::so(), TowerDescriptor::sp()})
    for (int level = 2; level <= 6; ++level) {
      const auto terms = branch_once(
          RankedWeight::zero(tower.type_at(level), tower.rank_at(level)), tower, level);
      REQUIRE(terms.size() == 1);
      CHECK(terms[0].multiplicity == 1);
      CHECK(terms[0].weight == RankedWeight::zero(tower.type_at(level - 1), tower.rank_at(level - 1)));
    }
}

TEST_CASE("Sp branching") {
  CHECK(as_map(branch_once(W(C, 2, {1, 0}), TowerDescriptor::sp(), 2)) ==
        std::map<std::string, std::int64_t>{{"C1(1)", 1}, {"C1(0)", 2}});
  CHECK(as_map(branch_once(W(C, 3, {2, 1, 1}), TowerDescriptor::sp(), 3)) ==
        std::map<std::string, std::int64_t>{
            {"C2(2,1)", 2}, {"C2(2,0)", 1}, {"C2(1,1)", 4}, {"C2(1,0)", 2}});
}

TEST_CASE("SO branching") {
  const auto so = TowerDescriptor::so();
  CHECK(as_map(branch_once(W(B, 2, {1, 1}), so, 3)) ==
        std::map<std::string, std::int64_t>{{"D2(1,1)", 1}, {"D2(1,0)", 1}, {"D2(1,-1)", 1}});
  CHECK(as_map(branch_once(W(D, 3, {1, 1, 0}), so, 4)) ==
        std::map<std::string, std::int64_t>{{"B2(1,1)", 1}, {"B2(1,0)", 1}});
  CHECK(as_map(branch_once(W(D, 3, {2, 1, 0}), so, 4)) ==
        std::map<std::string, std::int64_t>{
            {"B2(2,1)", 1}, {"B2(2,0)", 1}, {"B2(1,1)", 1}, {"B2(1,0)", 1}});
  CHECK(as_map(branch_once(W(B, 3, {2, 1, 1}), so, 5)) ==
        std::map<std::string, std::int64_t>{{"D3(2,1,1)", 1},
                                            {"D3(2,1,0)", 1},
                                            {"D3(2,1,-1)", 1},
                                            {"D3(1,1,1)", 1},
                                            {"D3(1,1,0)", 1},
                                            {"D3(1,1,-1)", 1}});
}

TEST_CASE("branching rejects what it cannot do") {
  CHECK_THROWS_AS(branch_once(W(A, 2, {2, 1, 0}), TowerDescriptor::sl(), 1), InvalidInput);
  CHECK_THROWS_AS(branch_once(W(A, 2, {0, 1, 0}), TowerDescriptor::sl(), 2), InvalidInput);
  CHECK_THROWS_AS(branch_once(W(A, 2, {2, 1, 0}), TowerDescriptor::diagonal(2, 0, 1), 2),
                  InvalidInput);
  CHECK_THROWS_AS(branch_once(RankedWeight(B, 2, {half(1), half(1)}), TowerDescriptor::so(), 3),
                  InvalidInput);
}

TEST_CASE("dimension conservation and dominance") {
  std::mt19937_64 rng(5);
  const std::vector<TowerDescriptor> towers = {TowerDescriptor::sl(), TowerDescriptor::so(),
                                               TowerDescriptor::sp()};
  for (int i = 0; i < 300; ++i) {
    const auto& tower = towers[static_cast<std::size_t>(i) % 3];
    const int level = 2 + (i / 3) % 5;
    const auto w = random_dominant_weight(rng, tower.type_at(level), tower.rank_at(level), 4);
    if (dim_irrep(w) > 100'000)
      continue;
    const auto terms = branch_once(w, tower, level);
    CAPTURE(w.to_string());
    CHECK(total_dimension(terms) == dim_irrep(w));
    for (const auto& [lower, m] : terms) {
      CHECK(is_dominant(lower));
      CHECK(m > 0);
      if (tower.kind() == TowerKind::SL) {
        // some constant shift of the lower weight interlaces the upper one
        const auto upper_weight = w.canonical();
        const auto lower_weight = lower.canonical();
        const auto upper = upper_weight.coeffs();
        bool found = false;
        for (HalfInt s = HalfInt(0); s <= upper.front(); s = s + HalfInt(1)) {
          std::vector<HalfInt> candidate;
          for (auto x : lower_weight.coeffs())
            candidate.push_back(x + s);
          found = found || interlaces(upper, candidate);
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("interlacing") {
  const std::vector<HalfInt> upper = {3, 1, 0};
  CHECK(interlaces(upper, std::vector<HalfInt>{2, 0}));
  CHECK(interlaces(upper, std::vector<HalfInt>{3, 1}));
  CHECK_FALSE(interlaces(upper, std::vector<HalfInt>{4, 0}));
  CHECK_FALSE(interlaces(upper, std::vector<HalfInt>{2, 2}));
}

TEST_CASE("restriction chains") {
  const auto sl = TowerDescriptor::sl();
  const auto natural = restrict_chain(WeightFamily::constant({1}), sl, 2, 2);
  CHECK(as_map(natural) == std::map<std::string, std::int64_t>{{"A2(1,0,0)", 1}, {"A2(0,0,0)", 2}});
  CHECK(total_dimension(natural) == 5);

  const auto zero = restrict_chain(WeightFamily::constant({}), sl, 3, 3);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].multiplicity == 1);

  CHECK(count_isotypic(WeightFamily::constant({1}), sl, 2, 3) == std::vector<std::int64_t>{2, 2, 2});
  CHECK(count_isotypic(WeightFamily::constant({}), sl, 2, 3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(count_isotypic(affine({{0, 1}}), sl, 1, 3) == std::vector<std::int64_t>{3, 4, 5});
  CHECK_THROWS_AS(restrict_chain(WeightFamily::constant({9, 5, 2}), sl, 3, 5, 1000),
                  CapacityExceeded);
}
