#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "labelcap/alphabet.hpp"

namespace labelcap {

// Enumeration budget for the exact oracle. The default allows q^n up to
// 4^12 source sequences; beyond that the oracle refuses rather than
// truncating.
struct EnumerationBudget {
  std::uint64_t max_inputs = std::uint64_t{1} << 24;
};

struct ImageCensus {
  int n = 0;
  std::uint64_t count = 0;
  // Materialized only when requested; sorted for reproducible output.
  std::optional<std::vector<std::vector<int>>> sequences;
};

// Exact image set F_n of the labeling map, by enumerating all q^n source
// sequences in lexicographic order and deduplicating their labelings.
ImageCensus enumerate_valid_labelings(const LabelSet& labels, int n,
                                      const EnumerationBudget& budget = {},
                                      bool materialize = true);

// Count-only variant (streaming dedup, nothing materialized).
std::uint64_t count_valid_labelings(const LabelSet& labels, int n,
                                    const EnumerationBudget& budget = {});

// Growth-rate estimates s_n = log2(|F_n| / |F_{n-1}|) for n = 2..nmax.
// These estimate the capacity limsup; they do not prove it.
std::vector<double> capacity_slope_estimate(const LabelSet& labels, int nmax,
                                            const EnumerationBudget& budget = {});

// |C_{d,inf}(n)| for the binary (d,inf)-RLL constraint, by direct dynamic
// programming (independent of the automaton machinery).
std::uint64_t rll_count(int d, int n);

}  // namespace labelcap
