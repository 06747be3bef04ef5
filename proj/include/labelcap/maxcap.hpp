#pragma once

#include <string>
#include <vector>

#include "labelcap/alphabet.hpp"
#include "labelcap/presentation.hpp"

namespace labelcap {

// Structural archetypes of a pair of distinct length-2 labels. Every pair
// reduces to one of these under alphabet relabeling.
enum class PairType {
  kNonCyclicNoOverlap,       // ab, ac
  kNonCyclicOneSideOverlap,  // ab, bc
  kNonCyclicTwoSideOverlap,  // ab, ba
  kBothPeriodOne,            // aa, bb
  kPeriodOneNoOverlap,       // aa, bc
  kPeriodOneOverlap,         // aa, ab
};
std::string pair_type_name(PairType type);
PairType classify_pair(const Label& a, const Label& b);

struct PairSearchResult {
  CapacityValue capacity;
  std::vector<std::pair<Label, Label>> witnesses;  // pairs attaining the max
  std::vector<PairType> witness_types;             // deduplicated, sorted
  std::size_t pairs_examined = 0;
};

// Maximal capacity over unordered pairs of distinct length-2 labels over a
// q-ary alphabet, with every attaining pair. With `reduce_symmetry` the
// enumeration keeps one representative per relabeling orbit (capacity is
// invariant under alphabet permutations); the full enumeration remains
// available as the correctness oracle.
PairSearchResult best_pair_capacity(int q, bool reduce_symmetry = true,
                                    double witness_tol = 1e-9);

struct SubsetSearchResult {
  CapacityValue capacity;
  std::vector<LabelSet> witnesses;
  std::size_t subsets_examined = 0;
};

// Maximal capacity over k-element sets of length-2 labels over a q-ary
// alphabet. Exhaustive up to relabeling symmetry, guarded by a subset
// budget; no optimality theorem backs values beyond k = 2, the result is
// whatever the enumeration finds.
SubsetSearchResult best_subset_capacity(int q, int k, bool reduce_symmetry = true,
                                        std::size_t max_subsets = 200'000,
                                        double witness_tol = 1e-9);

// Capacity of all sequences over a q-ary alphabet avoiding every pattern as
// a contiguous substring. Built from sliding pattern windows, independent of
// the labeling transducer, so it can cross-validate it.
CapacityValue forbidden_substring_capacity(int q, const std::vector<std::vector<Symbol>>& patterns,
                                           double tol = 1e-12);
CapacityValue forbidden_substring_capacity(const Alphabet& alphabet,
                                           const std::vector<std::string>& patterns,
                                           double tol = 1e-12);

// Capacity of the fixed nine-label length-2 set over the DNA alphabet
// whose value stays above log2(3.866).
CapacityValue nine_label_lower_bound();
LabelSet nine_label_set();

// Capacity of (aa, bb, ab) over a q-ary alphabet (q >= 3): the three-label
// lower bound log2(2.582...).
CapacityValue three_label_lower_bound(int q);

struct PairTypeCheckRow {
  PairType type = PairType::kNonCyclicNoOverlap;
  std::pair<std::string, std::string> example;  // display form of the pair used
  std::vector<std::string> forbidden_patterns;  // over the ternary output alphabet
  double pair_lambda = 0.0;
  double forbidden_lambda = 0.0;
};

// For each pair archetype over a q-ary alphabet (q >= 3): the pair's
// automaton capacity next to the capacity of ternary sequences avoiding
// that archetype's forbidden output patterns. The two columns agree.
std::vector<PairTypeCheckRow> pair_type_table_check(int q = 3);

}  // namespace labelcap
