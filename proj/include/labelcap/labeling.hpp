#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "labelcap/alphabet.hpp"

namespace labelcap {

// Aho-Corasick automaton over a label set, used for linear-time occurrence
// scanning. Node 0 is the root; goto transitions are dense per node.
class MultiPatternMatcher {
 public:
  explicit MultiPatternMatcher(const LabelSet& labels);

  // c[i] = j iff label j (1-based) starts at position i; 0 otherwise.
  // Prefix-freeness makes the match at each start position unique.
  std::vector<int> starts(std::span<const Symbol> x) const;

  int node_count() const { return static_cast<int>(next_.size()) / q_; }

 private:
  int q_ = 0;
  std::vector<std::int32_t> next_;        // node*q_ + symbol -> node
  std::vector<std::int32_t> match_;       // label index ending here, 0 if none
  std::vector<std::int32_t> suffix_out_;  // next matching node on the fail chain
  std::vector<int> lengths_;              // label lengths, 1-based
};

// The labeling sequence L(x): position i carries the index of the label
// starting there, or 0.
std::vector<int> labeling_sequence(std::span<const Symbol> x, const LabelSet& labels);

// The complete labeling sequence of a single label: every position covered
// by an occurrence window is 1.
std::vector<int> complete_labeling_sequence(std::span<const Symbol> x, const Label& label);

}  // namespace labelcap
