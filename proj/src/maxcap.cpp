#include "labelcap/maxcap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "labelcap/errors.hpp"
#include "labelcap/spectral.hpp"

namespace labelcap {

namespace {

// Canonical form of an unordered pair of length-2 labels under alphabet
// relabeling: the lexicographically least sorted pair over all permutations
// of the symbols the pair actually uses.
std::array<Symbol, 4> canonical_pair(Symbol a0, Symbol a1, Symbol b0, Symbol b1, int q) {
  std::vector<Symbol> used{a0, a1, b0, b1};
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::array<Symbol, 4> best{};
  bool have = false;
  std::vector<Symbol> image(used.size());
  std::iota(image.begin(), image.end(), Symbol{0});
  // Permute the images of the used symbols; unused symbols are irrelevant.
  do {
    auto relabel = [&](Symbol s) {
      auto pos = std::lower_bound(used.begin(), used.end(), s) - used.begin();
      return image[static_cast<std::size_t>(pos)];
    };
    std::array<Symbol, 2> u{relabel(a0), relabel(a1)};
    std::array<Symbol, 2> v{relabel(b0), relabel(b1)};
    if (v < u) std::swap(u, v);
    std::array<Symbol, 4> cand{u[0], u[1], v[0], v[1]};
    if (!have || cand < best) {
      best = cand;
      have = true;
    }
  } while (std::next_permutation(image.begin(), image.end()));
  (void)q;
  return best;
}

}  // namespace

std::string pair_type_name(PairType type) {
  switch (type) {
    case PairType::kNonCyclicNoOverlap:
      return "non-cyclic/no-overlap";
    case PairType::kNonCyclicOneSideOverlap:
      return "non-cyclic/one-side-overlap";
    case PairType::kNonCyclicTwoSideOverlap:
      return "non-cyclic/two-side-overlap";
    case PairType::kBothPeriodOne:
      return "both-period-one";
    case PairType::kPeriodOneNoOverlap:
      return "period-one+non-cyclic/no-overlap";
    case PairType::kPeriodOneOverlap:
      return "period-one+non-cyclic/overlap";
  }
  return "?";
}

PairType classify_pair(const Label& a, const Label& b) {
  if (a.length() != 2 || b.length() != 2 || a == b) {
    throw std::invalid_argument("pair classification expects two distinct length-2 labels");
  }
  const bool a_run = a[0] == a[1];
  const bool b_run = b[0] == b[1];
  if (a_run && b_run) return PairType::kBothPeriodOne;
  if (a_run || b_run) {
    const Label& run = a_run ? a : b;
    const Label& plain = a_run ? b : a;
    const bool touches = plain[0] == run[0] || plain[1] == run[0];
    return touches ? PairType::kPeriodOneOverlap : PairType::kPeriodOneNoOverlap;
  }
  const bool fwd = a[1] == b[0];
  const bool bwd = b[1] == a[0];
  if (fwd && bwd) return PairType::kNonCyclicTwoSideOverlap;
  if (fwd || bwd) return PairType::kNonCyclicOneSideOverlap;
  return PairType::kNonCyclicNoOverlap;
}

PairSearchResult best_pair_capacity(int q, bool reduce_symmetry, double witness_tol) {
  if (q < 2) throw std::invalid_argument("pair search requires q >= 2");
  Alphabet alphabet(q);
  std::vector<Label> all2;
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      all2.push_back(Label({static_cast<Symbol>(x), static_cast<Symbol>(y)}, alphabet));
    }
  }

  PairSearchResult result;
  std::set<std::array<Symbol, 4>> seen_orbits;
  std::vector<std::pair<double, std::pair<Label, Label>>> computed;
  for (std::size_t i = 0; i < all2.size(); ++i) {
    for (std::size_t j = i + 1; j < all2.size(); ++j) {
      const Label& a = all2[i];
      const Label& b = all2[j];
      if (reduce_symmetry) {
        auto orbit = canonical_pair(a[0], a[1], b[0], b[1], q);
        if (!seen_orbits.insert(orbit).second) continue;
      }
      CapacityValue v = capacity_via_automaton(LabelSet({a, b}));
      computed.emplace_back(v.lambda, std::make_pair(a, b));
      ++result.pairs_examined;
    }
  }
  double best = 0.0;
  for (const auto& [lambda, pair] : computed) best = std::max(best, lambda);
  result.capacity.method = CapacityMethod::kAutomaton;
  result.capacity.lambda = best;
  result.capacity.log2_lambda = std::log2(best);
  result.capacity.tolerance = witness_tol;
  std::set<PairType> types;
  for (const auto& [lambda, pair] : computed) {
    if (best - lambda <= witness_tol) {
      result.witnesses.push_back(pair);
      types.insert(classify_pair(pair.first, pair.second));
    }
  }
  result.witness_types.assign(types.begin(), types.end());
  return result;
}

SubsetSearchResult best_subset_capacity(int q, int k, bool reduce_symmetry,
                                        std::size_t max_subsets, double witness_tol) {
  if (q < 2 || q > 8) throw std::invalid_argument("subset search supports 2 <= q <= 8");
  const int total = q * q;
  if (k < 1 || k > total) throw std::invalid_argument("k out of range");
  // C(total, k) with early refusal.
  double combinations = 1.0;
  for (int i = 0; i < k; ++i) combinations = combinations * (total - i) / (i + 1);
  if (combinations > static_cast<double>(max_subsets)) {
    throw BudgetExceeded("subset search over C(" + std::to_string(total) + "," +
                         std::to_string(k) + ") label sets exceeds the budget");
  }

  Alphabet alphabet(q);
  std::vector<Label> all2;
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      all2.push_back(Label({static_cast<Symbol>(x), static_cast<Symbol>(y)}, alphabet));
    }
  }
  std::vector<Symbol> perm(static_cast<std::size_t>(q));
  std::iota(perm.begin(), perm.end(), Symbol{0});
  auto canonical = [&](const std::vector<int>& chosen) {
    std::vector<std::vector<Symbol>> best;
    std::vector<Symbol> p = perm;
    do {
      std::vector<std::vector<Symbol>> image;
      for (int idx : chosen) {
        image.push_back({p[all2[static_cast<std::size_t>(idx)][0]],
                         p[all2[static_cast<std::size_t>(idx)][1]]});
      }
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = std::move(image);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  };

  SubsetSearchResult result;
  std::set<std::vector<std::vector<Symbol>>> seen_orbits;
  std::vector<std::pair<double, std::vector<int>>> computed;
  std::vector<int> chosen(static_cast<std::size_t>(k));
  std::iota(chosen.begin(), chosen.end(), 0);
  while (true) {
    bool evaluate = true;
    if (reduce_symmetry) evaluate = seen_orbits.insert(canonical(chosen)).second;
    if (evaluate) {
      std::vector<Label> labels;
      for (int idx : chosen) labels.push_back(all2[static_cast<std::size_t>(idx)]);
      computed.emplace_back(capacity_via_automaton(LabelSet(std::move(labels))).lambda, chosen);
      ++result.subsets_examined;
    }
    // Next k-combination of {0..total-1}.
    int pos = k - 1;
    while (pos >= 0 && chosen[static_cast<std::size_t>(pos)] == total - k + pos) --pos;
    if (pos < 0) break;
    ++chosen[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      chosen[static_cast<std::size_t>(i)] = chosen[static_cast<std::size_t>(i - 1)] + 1;
    }
  }

  double best = 0.0;
  for (const auto& [lambda, subset] : computed) best = std::max(best, lambda);
  result.capacity.method = CapacityMethod::kAutomaton;
  result.capacity.lambda = best;
  result.capacity.log2_lambda = std::log2(best);
  result.capacity.tolerance = witness_tol;
  for (const auto& [lambda, subset] : computed) {
    if (best - lambda <= witness_tol) {
      std::vector<Label> labels;
      for (int idx : subset) labels.push_back(all2[static_cast<std::size_t>(idx)]);
      result.witnesses.emplace_back(std::move(labels));
    }
  }
  return result;
}

CapacityValue forbidden_substring_capacity(int q, const std::vector<std::vector<Symbol>>& patterns,
                                           double tol) {
  if (q < 1) throw std::invalid_argument("alphabet size must be >= 1");
  for (const auto& p : patterns) {
    if (p.empty()) throw std::invalid_argument("patterns must be nonempty");
    for (Symbol s : p) {
      if (s >= q) throw std::invalid_argument("pattern symbol outside alphabet");
    }
  }
  // Sliding windows of the last up-to-(L-1) symbols; a transition appending
  // symbol a survives when no pattern is a suffix of window+a. Shorter
  // boundary windows are transient and cannot raise the spectral radius.
  int lmax = 1;
  for (const auto& p : patterns) lmax = std::max(lmax, static_cast<int>(p.size()));

  std::vector<std::vector<Symbol>> states;
  std::vector<std::vector<Symbol>> pending{{}};
  while (!pending.empty()) {
    std::vector<Symbol> w = pending.back();
    pending.pop_back();
    states.push_back(w);
    if (static_cast<int>(w.size()) < lmax - 1) {
      for (int a = 0; a < q; ++a) {
        std::vector<Symbol> nw = w;
        nw.push_back(static_cast<Symbol>(a));
        pending.push_back(nw);
      }
    }
  }
  std::sort(states.begin(), states.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  auto index_of = [&](const std::vector<Symbol>& w) {
    return static_cast<int>(
        std::lower_bound(states.begin(), states.end(), w,
                         [](const auto& a, const auto& b) {
                           if (a.size() != b.size()) return a.size() < b.size();
                           return a < b;
                         }) -
        states.begin());
  };

  const int n = static_cast<int>(states.size());
  Eigen::MatrixXi adjacency = Eigen::MatrixXi::Zero(n, n);
  for (int s = 0; s < n; ++s) {
    std::vector<Symbol> extended = states[static_cast<std::size_t>(s)];
    for (int a = 0; a < q; ++a) {
      extended.push_back(static_cast<Symbol>(a));
      bool hits_pattern = false;
      for (const auto& p : patterns) {
        if (p.size() > extended.size()) continue;
        if (std::equal(p.begin(), p.end(), extended.end() - static_cast<long>(p.size()))) {
          hits_pattern = true;
          break;
        }
      }
      if (!hits_pattern) {
        std::vector<Symbol> nw = extended;
        if (static_cast<int>(nw.size()) > lmax - 1) nw.erase(nw.begin());
        adjacency(s, index_of(nw)) += 1;
      }
      extended.pop_back();
    }
  }
  CapacityValue value;
  value.method = CapacityMethod::kAutomaton;
  value.tolerance = tol;
  value.lambda = spectral_radius(adjacency, tol);
  value.log2_lambda = std::log2(value.lambda);
  return value;
}

CapacityValue forbidden_substring_capacity(const Alphabet& alphabet,
                                           const std::vector<std::string>& patterns, double tol) {
  std::vector<std::vector<Symbol>> parsed;
  parsed.reserve(patterns.size());
  for (const std::string& p : patterns) parsed.push_back(parse_sequence(p, alphabet));
  return forbidden_substring_capacity(alphabet.size(), parsed, tol);
}

LabelSet nine_label_set() {
  Alphabet dna = Alphabet::dna();
  return LabelSet::parse("AC,CA,GA,GC,GG,TA,TC,TG,TT", dna);
}

CapacityValue nine_label_lower_bound() { return capacity_via_automaton(nine_label_set()); }

CapacityValue three_label_lower_bound(int q) {
  if (q < 3) throw std::invalid_argument("the three-label bound needs q >= 3");
  Alphabet alphabet(q);
  LabelSet labels({Label({0, 0}, alphabet), Label({1, 1}, alphabet), Label({0, 1}, alphabet)});
  return capacity_via_automaton(labels);
}

std::vector<PairTypeCheckRow> pair_type_table_check(int q) {
  if (q < 3) throw std::invalid_argument("the archetype table needs q >= 3");
  Alphabet alphabet(q);
  auto lab = [&](Symbol x, Symbol y) { return Label({x, y}, alphabet); };
  const Symbol a = 0;
  const Symbol b = 1;
  const Symbol c = 2;

  struct RowSpec {
    PairType type;
    Label first;
    Label second;
    std::vector<std::string> forbidden;
  };
  // Forbidden output patterns per archetype, over the ternary labeling
  // alphabet {0, 1, 2}.
  std::vector<RowSpec> rows{
      {PairType::kNonCyclicNoOverlap, lab(a, b), lab(a, c), {"11", "12", "21", "22"}},
      {PairType::kNonCyclicOneSideOverlap, lab(a, b), lab(b, c), {"11", "21", "22"}},
      {PairType::kNonCyclicTwoSideOverlap, lab(a, b), lab(b, a), {"11", "101", "22", "202"}},
      {PairType::kBothPeriodOne, lab(a, a), lab(b, b), {"12", "101", "21", "202"}},
      {PairType::kPeriodOneNoOverlap, lab(a, a), lab(b, c), {"12", "101", "21", "22"}},
      {PairType::kPeriodOneOverlap, lab(a, a), lab(a, b), {"101", "102", "21", "22"}},
  };

  std::vector<PairTypeCheckRow> out;
  for (const RowSpec& spec : rows) {
    PairTypeCheckRow row;
    row.type = spec.type;
    row.example = {spec.first.str(), spec.second.str()};
    row.forbidden_patterns = spec.forbidden;
    row.pair_lambda = capacity_via_automaton(LabelSet({spec.first, spec.second})).lambda;
    std::vector<std::vector<Symbol>> patterns;
    for (const std::string& p : spec.forbidden) {
      std::vector<Symbol> sym;
      for (char ch : p) sym.push_back(static_cast<Symbol>(ch - '0'));
      patterns.push_back(sym);
    }
    row.forbidden_lambda = forbidden_substring_capacity(3, patterns).lambda;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace labelcap
