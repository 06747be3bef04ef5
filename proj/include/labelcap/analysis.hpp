#pragma once

#include <optional>
#include <string>

#include "labelcap/alphabet.hpp"

namespace labelcap {

// Smallest divisor p of |label| such that the label is the (|label|/p)-fold
// repetition of its first p symbols. p == |label| means non-periodic.
int period(const Label& label);

// Length of the longest suffix of `a` equal to a prefix of `b`, up to
// min(|a|, |b|); 0 when none. Requires a != b as symbol sequences.
int overlap(const Label& a, const Label& b);

// Longest proper border: largest r < |label| with the length-r prefix equal
// to the length-r suffix. 0 for single-symbol labels. This equals the
// suffix/prefix overlap of the two length-(l-1) windows of the label.
int cyclic_overlap(const Label& label);

struct AlmostPeriodicDecomposition {
  int partial_period_length = 0;  // p' < l, at least one full repetition
  int suffix_length = 0;          // t with 0 < t < p'
};

// Smallest p' < |label| for which the label is whole repetitions of its
// first p' symbols followed by a proper nonempty prefix of them.
std::optional<AlmostPeriodicDecomposition> almost_periodic(const Label& label);

enum class LabelKind {
  kNonCyclic,
  kPeriodicNonCyclicPeriod,
  kNonPeriodicCyclicOverlap,
  kPeriodicOverlapPeriodOne,
  kUncovered,
};

// Exactly one kind per label; the `period` and `cyclic_overlap` values are
// cached for every kind. `condition` is 1 when the border itself has no
// border and 2 when the label is almost periodic with a border-free
// almost-periodic suffix (set only for kNonPeriodicCyclicOverlap).
struct LabelClass {
  LabelKind kind = LabelKind::kUncovered;
  int period = 0;
  int cyclic_overlap = 0;
  int condition = 0;
};

LabelClass classify(const Label& label);

std::string label_kind_name(LabelKind kind);

}  // namespace labelcap
