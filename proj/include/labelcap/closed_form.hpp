#pragma once

#include <optional>

#include "labelcap/alphabet.hpp"
#include "labelcap/analysis.hpp"
#include "labelcap/polynomial.hpp"
#include "labelcap/presentation.hpp"

namespace labelcap {

// Characteristic polynomial whose largest real root lambda gives the
// labeling capacity log2(lambda) of a single label, by class:
//   non-cyclic (l):                     x^l - x^(l-1) - 1
//   non-cyclic period p:                x^(l+1) - x^l - x^(l-p+1) + x^(l-p) - 1
//   non-periodic cyclic overlap r:      x^l - x^(l-1) - x^r + x^(r-1) - 1
//   periodic overlap of period one, r:  x^(l-r) - x^(l-r-1) - 1
// Uncovered classes yield nullopt; the automaton handles them.
std::optional<IntPolynomial> capacity_polynomial(const Label& label);

// Polynomial for the largest single-label capacity at length l:
// x^(l+1) - 2x^l + x^(l-1) - 1. The maximality result covers l <= 5 only;
// `beyond_proven_scope` flags larger l.
struct MaxSingleLabelPolynomial {
  IntPolynomial polynomial;
  bool beyond_proven_scope = false;
};
MaxSingleLabelPolynomial max_single_label_polynomial(int l);

// Multi-label closed forms. Exactly three cases are covered:
//  - all labels non-cyclic, pairwise non-overlapping and factor-free:
//      x^lk - x^(lk-1) - sum_i m_i x^(lk-i)   (m_i = #labels of length i)
//  - two non-cyclic labels with a unique one-sided overlap t:
//      x^(l1+l2-1) - x^(l1+l2-2) - x^(l1-1) - x^(l2-1) - x^(t-1)
//  - two distinct period-one labels of one length l > 1:
//      x^(l-1)(x-1)(x^(l+1) - 2x^l + x^(l-1) - 2) - (x+1)
// The first two demand, beyond zero/one-sided overlap values, that no label
// occurs inside another and (for the overlap case) that the overlap length
// is the only suffix/prefix match; without those the constraint the theorem
// counts is not the labeling image. Everything else yields nullopt.
std::optional<IntPolynomial> multi_label_polynomial(const LabelSet& labels);

// x^(d+1) - x^d - (q-1): the (q,d,inf)-RLL capacity polynomial.
IntPolynomial rll_capacity_polynomial(int q, int d);

// Closed-form capacity when one exists: single labels through
// capacity_polynomial, multi-label sets through multi_label_polynomial,
// root solved on (1+1e-9, q+1].
std::optional<CapacityValue> cap_formula(const LabelSet& labels, double tol = 1e-12);

}  // namespace labelcap
