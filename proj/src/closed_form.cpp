#include "labelcap/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace labelcap {

namespace {

IntPolynomial non_cyclic_polynomial(int l) {
  return IntPolynomial::from_terms({{l, 1}, {l - 1, -1}, {0, -1}});
}

// True when `inner` occurs as a contiguous factor of `outer`.
bool occurs_within(const Label& inner, const Label& outer) {
  const int li = inner.length();
  const int lo = outer.length();
  for (int at = 0; at + li <= lo; ++at) {
    bool match = true;
    for (int i = 0; i < li && match; ++i) match = outer[at + i] == inner[i];
    if (match) return true;
  }
  return false;
}

// All suffix/prefix match lengths of (a, b), up to min(|a|, |b|).
std::vector<int> overlap_lengths(const Label& a, const Label& b) {
  std::vector<int> out;
  const int la = a.length();
  const int lb = b.length();
  for (int r = 1; r <= std::min(la, lb); ++r) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) ok = a[la - r + i] == b[i];
    if (ok) out.push_back(r);
  }
  return out;
}

}  // namespace

std::optional<IntPolynomial> capacity_polynomial(const Label& label) {
  const LabelClass cls = classify(label);
  const int l = label.length();
  switch (cls.kind) {
    case LabelKind::kNonCyclic:
      return non_cyclic_polynomial(l);
    case LabelKind::kPeriodicNonCyclicPeriod: {
      const int p = cls.period;
      return IntPolynomial::from_terms(
          {{l + 1, 1}, {l, -1}, {l - p + 1, -1}, {l - p, 1}, {0, -1}});
    }
    case LabelKind::kNonPeriodicCyclicOverlap: {
      const int r = cls.cyclic_overlap;
      return IntPolynomial::from_terms({{l, 1}, {l - 1, -1}, {r, -1}, {r - 1, 1}, {0, -1}});
    }
    case LabelKind::kPeriodicOverlapPeriodOne:
      // Same capacity as a non-cyclic label of length l - r.
      return non_cyclic_polynomial(l - cls.cyclic_overlap);
    case LabelKind::kUncovered:
      return std::nullopt;
  }
  return std::nullopt;
}

MaxSingleLabelPolynomial max_single_label_polynomial(int l) {
  if (l < 1) throw std::invalid_argument("label length must be >= 1");
  MaxSingleLabelPolynomial out;
  out.polynomial = IntPolynomial::from_terms({{l + 1, 1}, {l, -2}, {l - 1, 1}, {0, -1}});
  out.beyond_proven_scope = l > 5;
  return out;
}

std::optional<IntPolynomial> multi_label_polynomial(const LabelSet& labels) {
  const int k = labels.size();
  if (k < 2) throw std::invalid_argument("multi-label polynomial requires k >= 2");

  std::vector<LabelClass> classes;
  classes.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) classes.push_back(classify(labels[i]));

  // Containment of any label in another breaks every covered case: an
  // occurrence of the outer label would force inner-label marks the theorem
  // languages do not model.
  bool factor_free = true;
  for (int i = 0; i < k && factor_free; ++i) {
    for (int j = 0; j < k && factor_free; ++j) {
      if (i != j && occurs_within(labels[i], labels[j])) factor_free = false;
    }
  }

  // Symbols that begin no label. The theorem languages assume gaps between
  // occurrences can be filled freely; without such a symbol the all-zero
  // mark (and arbitrary zero runs) need not be realizable, and the counted
  // constraint overshoots the labeling image (e.g. every single symbol as a
  // label).
  std::vector<bool> starts_label(static_cast<std::size_t>(labels.alphabet().size()), false);
  for (int i = 0; i < k; ++i) starts_label[labels[i][0]] = true;
  std::vector<Symbol> free_symbols;
  for (Symbol c = 0; c < labels.alphabet().size(); ++c) {
    if (!starts_label[c]) free_symbols.push_back(c);
  }

  const bool all_non_cyclic = std::all_of(classes.begin(), classes.end(), [](const LabelClass& c) {
    return c.kind == LabelKind::kNonCyclic;
  });

  if (all_non_cyclic && factor_free && !free_symbols.empty()) {
    bool any_overlap = false;
    for (int i = 0; i < k && !any_overlap; ++i) {
      for (int j = 0; j < k && !any_overlap; ++j) {
        if (i != j && !overlap_lengths(labels[i], labels[j]).empty()) any_overlap = true;
      }
    }
    if (!any_overlap) {
      const int lk = labels.max_length();
      IntPolynomial p = IntPolynomial::from_terms({{lk, 1}, {lk - 1, -1}});
      for (int i = 0; i < k; ++i) {
        p = p - IntPolynomial::monomial(lk - labels[i].length());
      }
      return p;
    }
    if (k == 2) {
      // Unique one-sided overlap between two non-cyclic labels.
      for (int first : {0, 1}) {
        const Label& a = labels[first];
        const Label& b = labels[1 - first];
        auto fwd = overlap_lengths(a, b);
        auto bwd = overlap_lengths(b, a);
        if (fwd.size() == 1 && bwd.empty()) {
          const int t = fwd.front();
          const int l1 = a.length();
          const int l2 = b.length();
          // A gap symbol must exist that cannot complete b right after its
          // overlapped prefix; otherwise filling after a lone a-occurrence
          // could mark a spurious b.
          bool fillable = false;
          for (Symbol c : free_symbols) {
            bool completes = true;
            for (int i = t; i < l2 && completes; ++i) completes = b[i] == c;
            if (!completes) fillable = true;
          }
          if (!fillable) return std::nullopt;
          return IntPolynomial::from_terms({{l1 + l2 - 1, 1},
                                            {l1 + l2 - 2, -1},
                                            {l1 - 1, -1},
                                            {l2 - 1, -1},
                                            {t - 1, -1}});
        }
      }
    }
    return std::nullopt;
  }

  if (k == 2 && labels.alphabet().size() >= 3 &&
      classes[0].kind == LabelKind::kPeriodicNonCyclicPeriod &&
      classes[1].kind == LabelKind::kPeriodicNonCyclicPeriod && classes[0].period == 1 &&
      classes[1].period == 1 && labels[0].length() == labels[1].length() &&
      labels[0].length() > 1) {
    const int l = labels[0].length();
    IntPolynomial inner =
        IntPolynomial::from_terms({{l + 1, 1}, {l, -2}, {l - 1, 1}, {0, -2}});
    IntPolynomial shift = IntPolynomial::monomial(l - 1);
    IntPolynomial x_minus_1 = IntPolynomial::from_terms({{1, 1}, {0, -1}});
    IntPolynomial x_plus_1 = IntPolynomial::from_terms({{1, 1}, {0, 1}});
    return shift * x_minus_1 * inner - x_plus_1;
  }

  return std::nullopt;
}

IntPolynomial rll_capacity_polynomial(int q, int d) {
  if (q < 2 || d < 0) throw std::invalid_argument("rll polynomial requires q >= 2, d >= 0");
  return IntPolynomial::from_terms({{d + 1, 1}, {d, -1}, {0, -(q - 1)}});
}

std::optional<CapacityValue> cap_formula(const LabelSet& labels, double tol) {
  std::optional<IntPolynomial> poly;
  if (labels.size() == 1) {
    poly = capacity_polynomial(labels[0]);
  } else {
    poly = multi_label_polynomial(labels);
  }
  if (!poly) return std::nullopt;
  CapacityValue value;
  value.method = CapacityMethod::kFormula;
  value.tolerance = tol;
  value.polynomial = *poly;
  value.lambda = largest_real_root_for_capacity(*poly, labels.alphabet().size(), tol);
  value.log2_lambda = std::log2(value.lambda);
  return value;
}

}  // namespace labelcap
