#pragma once

#include <vector>

#include "labelcap/alphabet.hpp"
#include "labelcap/presentation.hpp"

namespace labelcap {

// All q^1 + ... + q^lmax labels over a q-ary alphabet, lexicographic within
// each length.
std::vector<Label> all_labels(const Alphabet& alphabet, int lmax);

struct CapacityClass {
  double lambda = 0.0;
  double log2_lambda = 0.0;
  std::vector<Label> labels;  // lexicographic by (length, symbols)
};

// Labels of length <= lmax grouped by automaton capacity (equal within
// `equality_tol`), sorted by capacity descending. The ordering results this
// reproduces are proven for lmax <= 5 only, so larger lmax is refused.
std::vector<CapacityClass> order_labels_by_capacity(const Alphabet& alphabet, int lmax,
                                                    double equality_tol = 1e-9);

}  // namespace labelcap
