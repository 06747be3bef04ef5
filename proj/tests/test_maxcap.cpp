#include "doctest.h"

#include <cmath>

#include "labelcap/closed_form.hpp"
#include "labelcap/errors.hpp"
#include "labelcap/maxcap.hpp"

using namespace labelcap;

namespace {

Label lab2(Symbol a, Symbol b, const Alphabet& alphabet) { return Label({a, b}, alphabet); }

}  // namespace

TEST_CASE("pair classification") {
  Alphabet q3(3);
  auto type = [&](Symbol a0, Symbol a1, Symbol b0, Symbol b1) {
    return classify_pair(lab2(a0, a1, q3), lab2(b0, b1, q3));
  };
  CHECK(type(0, 1, 0, 2) == PairType::kNonCyclicNoOverlap);
  CHECK(type(0, 1, 2, 1) == PairType::kNonCyclicNoOverlap);
  CHECK(type(0, 1, 1, 2) == PairType::kNonCyclicOneSideOverlap);
  CHECK(type(0, 1, 2, 0) == PairType::kNonCyclicOneSideOverlap);
  CHECK(type(0, 1, 1, 0) == PairType::kNonCyclicTwoSideOverlap);
  CHECK(type(0, 0, 1, 1) == PairType::kBothPeriodOne);
  CHECK(type(0, 0, 1, 2) == PairType::kPeriodOneNoOverlap);
  CHECK(type(0, 0, 0, 1) == PairType::kPeriodOneOverlap);
  CHECK(type(0, 0, 1, 0) == PairType::kPeriodOneOverlap);
}

TEST_CASE("best pair for q = 3") {
  PairSearchResult reduced = best_pair_capacity(3, /*reduce_symmetry=*/true);
  PairSearchResult full = best_pair_capacity(3, /*reduce_symmetry=*/false);
  CHECK(full.pairs_examined == 36);
  CHECK(reduced.pairs_examined < full.pairs_examined);
  CHECK(std::abs(reduced.capacity.lambda - full.capacity.lambda) < 1e-12);

  double expected =
      largest_real_root(IntPolynomial({-1, 1, -3, 3, -3, 1}), 1.0 + 1e-9, 4.0);
  CHECK(std::abs(full.capacity.lambda - expected) < 1e-9);

  const std::vector<PairType> want{PairType::kNonCyclicTwoSideOverlap,
                                   PairType::kBothPeriodOne, PairType::kPeriodOneOverlap};
  auto sorted_want = want;
  std::sort(sorted_want.begin(), sorted_want.end());
  CHECK(full.witness_types == sorted_want);
  CHECK(reduced.witness_types == sorted_want);
  // 12 of type (aa,ab), 3 of (aa,bb), 3 of (ab,ba).
  CHECK(full.witnesses.size() == 18);
}

TEST_CASE("best pair value is alphabet-independent for q >= 3") {
  PairSearchResult q3 = best_pair_capacity(3);
  PairSearchResult q4 = best_pair_capacity(4);
  CHECK(std::abs(q3.capacity.lambda - q4.capacity.lambda) < 1e-9);
  CHECK(q3.witness_types == q4.witness_types);
}

TEST_CASE("best pair for q = 2 reaches the full binary capacity") {
  PairSearchResult result = best_pair_capacity(2);
  CHECK(result.capacity.log2_lambda == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("a no-overlap pair has capacity exactly 1") {
  Alphabet q4(4);
  LabelSet pair({lab2(0, 1, q4), lab2(0, 2, q4)});
  CHECK(capacity_via_automaton(pair).lambda == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("forbidden substring capacities") {
  CHECK(forbidden_substring_capacity(3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}).lambda ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(forbidden_substring_capacity(3, {}).lambda == doctest::Approx(3.0).epsilon(1e-9));
  Alphabet dna = Alphabet::dna();
  double lam = forbidden_substring_capacity(dna, {"AGT", "CGT"}).lambda;
  double expected = largest_real_root(IntPolynomial({0, 2, 0, -4, 1}), 1.0 + 1e-9, 5.0);
  CHECK(std::abs(lam - expected) < 1e-9);
  // Multi-length patterns: binary strings avoiding 11 and 000.
  double rll = forbidden_substring_capacity(2, {{1, 1}, {0, 0, 0}}).lambda;
  CHECK(rll > 1.0);
  CHECK(rll < 2.0);
}

TEST_CASE("archetype table rows agree pairwise") {
  auto rows = pair_type_table_check(3);
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) {
    CAPTURE(pair_type_name(row.type));
    CHECK(std::abs(row.pair_lambda - row.forbidden_lambda) < 1e-9);
  }
  // Proof constants: 2, 2.148, 2.107, 2.206 and the archetype ordering.
  auto lambda_of = [&](PairType t) {
    for (const auto& row : rows) {
      if (row.type == t) return row.pair_lambda;
    }
    FAIL("type missing");
    return 0.0;
  };
  CHECK(lambda_of(PairType::kNonCyclicNoOverlap) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(lambda_of(PairType::kNonCyclicOneSideOverlap) == doctest::Approx(2.148).epsilon(1e-3));
  CHECK(lambda_of(PairType::kPeriodOneNoOverlap) == doctest::Approx(2.107).epsilon(1e-3));
  CHECK(lambda_of(PairType::kBothPeriodOne) == doctest::Approx(2.206).epsilon(1e-3));
  CHECK(lambda_of(PairType::kNonCyclicNoOverlap) <
        lambda_of(PairType::kPeriodOneNoOverlap));
  CHECK(lambda_of(PairType::kPeriodOneNoOverlap) <
        lambda_of(PairType::kNonCyclicOneSideOverlap));
  CHECK(lambda_of(PairType::kNonCyclicOneSideOverlap) <
        lambda_of(PairType::kNonCyclicTwoSideOverlap));
  CHECK(lambda_of(PairType::kNonCyclicTwoSideOverlap) ==
        doctest::Approx(lambda_of(PairType::kBothPeriodOne)).epsilon(1e-9));
  CHECK(lambda_of(PairType::kBothPeriodOne) ==
        doctest::Approx(lambda_of(PairType::kPeriodOneOverlap)).epsilon(1e-9));
}

TEST_CASE("nine-label bound") {
  CapacityValue nine = nine_label_lower_bound();
  CHECK(nine.log2_lambda >= std::log2(3.866) - 1e-6);
  CHECK(nine.log2_lambda <= 2.0);
  // Frozen regression value for this implementation.
  CHECK(nine.lambda == doctest::Approx(3.866198262509).epsilon(1e-9));
}

TEST_CASE("the same nine labels gain capacity over a larger alphabet") {
  // A fifth symbol that starts no label loosens the constraint, so the
  // capacity rises strictly; the value is frozen from this implementation.
  Alphabet q5(5);
  auto L = [&](int a, int b) {
    return Label({static_cast<Symbol>(a), static_cast<Symbol>(b)}, q5);
  };
  LabelSet nine5({L(0, 1), L(1, 0), L(2, 0), L(2, 1), L(2, 2), L(3, 0), L(3, 1), L(3, 2),
                  L(3, 3)});
  CapacityValue wide = capacity_via_automaton(nine5);
  CHECK(wide.lambda > nine_label_lower_bound().lambda + 1e-6);
  CHECK(wide.lambda == doctest::Approx(4.036347850195).epsilon(1e-9));
}

TEST_CASE("generic subset search") {
  // k = 2 reproduces the dedicated pair search.
  SubsetSearchResult pairs = best_subset_capacity(3, 2, /*reduce_symmetry=*/false);
  CHECK(pairs.subsets_examined == 36);
  CHECK(std::abs(pairs.capacity.lambda - best_pair_capacity(3, false).capacity.lambda) < 1e-12);

  // k = 3 over q = 3: the (aa, bb, ab) family attains the maximum found.
  SubsetSearchResult triples = best_subset_capacity(3, 3);
  CHECK(triples.capacity.lambda >= three_label_lower_bound(3).lambda - 1e-9);

  // Budget refusal instead of a huge enumeration.
  CHECK_THROWS_AS((void)best_subset_capacity(8, 9), BudgetExceeded);
}

TEST_CASE("three-label bound") {
  CapacityValue three_q3 = three_label_lower_bound(3);
  double expected =
      largest_real_root(IntPolynomial({-1, 2, -3, 2, -3, 1}), 1.0 + 1e-9, 4.0);
  CHECK(std::abs(three_q3.lambda - expected) < 1e-9);
  CHECK(three_q3.lambda == doctest::Approx(2.582).epsilon(1e-3));
  // Symbols beyond the two used ones do not matter.
  CapacityValue three_q4 = three_label_lower_bound(4);
  CHECK(std::abs(three_q4.lambda - three_q3.lambda) < 1e-9);
  // Three labels beat the best pair.
  CHECK(three_q3.lambda > best_pair_capacity(3).capacity.lambda + 1e-6);
}
