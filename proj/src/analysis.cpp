#include "labelcap/analysis.hpp"

#include <stdexcept>

namespace labelcap {

namespace {

// Longest proper border of an arbitrary symbol sequence (KMP prefix value).
int border_length(const std::vector<Symbol>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> pi(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    int j = pi[static_cast<std::size_t>(i - 1)];
    while (j > 0 && s[static_cast<std::size_t>(i)] != s[static_cast<std::size_t>(j)]) {
      j = pi[static_cast<std::size_t>(j - 1)];
    }
    if (s[static_cast<std::size_t>(i)] == s[static_cast<std::size_t>(j)]) ++j;
    pi[static_cast<std::size_t>(i)] = j;
  }
  return n == 0 ? 0 : pi[static_cast<std::size_t>(n - 1)];
}

bool all_equal(const std::vector<Symbol>& s) {
  for (Symbol c : s) {
    if (c != s.front()) return false;
  }
  return true;
}

std::vector<Symbol> slice(const Label& l, int from, int len) {
  return {l.symbols().begin() + from, l.symbols().begin() + from + len};
}

}  // namespace

int period(const Label& label) {
  const int l = label.length();
  for (int p = 1; p < l; ++p) {
    if (l % p != 0) continue;
    bool ok = true;
    for (int i = p; i < l && ok; ++i) ok = label[i] == label[i - p];
    if (ok) return p;
  }
  return l;
}

int overlap(const Label& a, const Label& b) {
  if (a == b) throw std::invalid_argument("overlap requires distinct labels");
  const int la = a.length();
  const int lb = b.length();
  int best = 0;
  for (int r = 1; r <= std::min(la, lb); ++r) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) ok = a[la - r + i] == b[i];
    if (ok) best = r;
  }
  return best;
}

int cyclic_overlap(const Label& label) {
  if (label.length() <= 1) return 0;
  return border_length(label.symbols());
}

std::optional<AlmostPeriodicDecomposition> almost_periodic(const Label& label) {
  const int l = label.length();
  for (int p = 1; p < l; ++p) {
    const int t = l % p;
    if (t == 0) continue;  // whole repetitions only would make it periodic
    bool ok = true;
    for (int i = p; i < l && ok; ++i) ok = label[i] == label[i % p];
    if (ok) return AlmostPeriodicDecomposition{p, t};
  }
  return std::nullopt;
}

LabelClass classify(const Label& label) {
  const int l = label.length();
  LabelClass out;
  out.period = period(label);
  out.cyclic_overlap = cyclic_overlap(label);

  if (out.cyclic_overlap == 0) {
    out.kind = LabelKind::kNonCyclic;
    return out;
  }
  if (out.period < l) {
    // Periodic label: covered exactly when the period sub-label is non-cyclic.
    std::vector<Symbol> per = slice(label, 0, out.period);
    out.kind = border_length(per) == 0 ? LabelKind::kPeriodicNonCyclicPeriod
                                       : LabelKind::kUncovered;
    return out;
  }

  // Non-periodic with cyclic overlap r > 0.
  std::vector<Symbol> border = slice(label, 0, out.cyclic_overlap);
  if (border_length(border) == 0) {
    out.kind = LabelKind::kNonPeriodicCyclicOverlap;
    out.condition = 1;
    return out;
  }
  if (auto ap = almost_periodic(label)) {
    std::vector<Symbol> suffix = slice(label, 0, ap->suffix_length);
    if (border_length(suffix) == 0) {
      out.kind = LabelKind::kNonPeriodicCyclicOverlap;
      out.condition = 2;
      return out;
    }
  }
  if (all_equal(border)) {
    // Border is sigma^r with r >= 2, i.e. has period one.
    out.kind = LabelKind::kPeriodicOverlapPeriodOne;
    return out;
  }
  out.kind = LabelKind::kUncovered;
  return out;
}

std::string label_kind_name(LabelKind kind) {
  switch (kind) {
    case LabelKind::kNonCyclic:
      return "non-cyclic";
    case LabelKind::kPeriodicNonCyclicPeriod:
      return "periodic-non-cyclic-period";
    case LabelKind::kNonPeriodicCyclicOverlap:
      return "non-periodic-cyclic-overlap";
    case LabelKind::kPeriodicOverlapPeriodOne:
      return "periodic-overlap-period-one";
    case LabelKind::kUncovered:
      return "uncovered";
  }
  return "uncovered";
}

}  // namespace labelcap
