#include "labelcap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "labelcap/errors.hpp"
#include "labelcap/labeling.hpp"

namespace labelcap {

namespace {

// q^n, or nullopt on overflow past the 64-bit range.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

void check_budget(const LabelSet& labels, int n, const EnumerationBudget& budget) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  auto inputs = checked_pow(static_cast<std::uint64_t>(labels.alphabet().size()), n);
  if (!inputs || *inputs > budget.max_inputs) {
    throw BudgetExceeded("oracle enumeration of q^n = " +
                         std::to_string(labels.alphabet().size()) + "^" + std::to_string(n) +
                         " source sequences exceeds the budget of " +
                         std::to_string(budget.max_inputs));
  }
}

// Visits the labeling sequence of every x in lexicographic order.
template <typename Fn>
void for_each_labeling(const LabelSet& labels, int n, Fn&& fn) {
  const int q = labels.alphabet().size();
  MultiPatternMatcher matcher(labels);
  std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(matcher.starts(x));
    int pos = n - 1;
    while (pos >= 0 && x[static_cast<std::size_t>(pos)] == q - 1) {
      x[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++x[static_cast<std::size_t>(pos)];
  }
}

std::uint64_t encode(const std::vector<int>& c, int base) {
  std::uint64_t key = 0;
  for (int v : c) key = key * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(v);
  return key;
}

}  // namespace

ImageCensus enumerate_valid_labelings(const LabelSet& labels, int n,
                                      const EnumerationBudget& budget, bool materialize) {
  check_budget(labels, n, budget);
  const int base = labels.size() + 1;
  ImageCensus census;
  census.n = n;
  if (checked_pow(static_cast<std::uint64_t>(base), n)) {
    // Labelings pack into one 64-bit key.
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, std::vector<int>>> kept;
    for_each_labeling(labels, n, [&](const std::vector<int>& c) {
      std::uint64_t key = encode(c, base);
      if (seen.insert(key).second && materialize) kept.emplace_back(key, c);
    });
    census.count = seen.size();
    if (materialize) {
      std::sort(kept.begin(), kept.end());
      census.sequences.emplace();
      census.sequences->reserve(kept.size());
      for (auto& [key, c] : kept) census.sequences->push_back(std::move(c));
    }
  } else {
    std::unordered_set<std::string> seen;
    std::vector<std::vector<int>> kept;
    for_each_labeling(labels, n, [&](const std::vector<int>& c) {
      std::string key(c.begin(), c.end());
      if (seen.insert(std::move(key)).second && materialize) kept.push_back(c);
    });
    census.count = seen.size();
    if (materialize) {
      std::sort(kept.begin(), kept.end());
      census.sequences = std::move(kept);
    }
  }
  return census;
}

std::uint64_t count_valid_labelings(const LabelSet& labels, int n,
                                    const EnumerationBudget& budget) {
  return enumerate_valid_labelings(labels, n, budget, /*materialize=*/false).count;
}

std::vector<double> capacity_slope_estimate(const LabelSet& labels, int nmax,
                                            const EnumerationBudget& budget) {
  if (nmax < 2) throw std::invalid_argument("nmax must be >= 2");
  check_budget(labels, nmax, budget);
  std::vector<double> slopes;
  slopes.reserve(static_cast<std::size_t>(nmax) - 1);
  std::uint64_t prev = count_valid_labelings(labels, 1, budget);
  for (int n = 2; n <= nmax; ++n) {
    std::uint64_t cur = count_valid_labelings(labels, n, budget);
    slopes.push_back(std::log2(static_cast<double>(cur) / static_cast<double>(prev)));
    prev = cur;
  }
  return slopes;
}

std::uint64_t rll_count(int d, int n) {
  if (d < 0 || n < 0) throw std::invalid_argument("rll_count requires d, n >= 0");
  if (n == 0) return 1;
  // State: trailing zero count capped at d. Start state: cap reached
  // (nothing before the first symbol constrains a one).
  std::vector<std::uint64_t> state(static_cast<std::size_t>(d) + 1, 0);
  state[static_cast<std::size_t>(d)] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(d) + 1, 0);
    for (int z = 0; z <= d; ++z) {
      std::uint64_t cnt = state[static_cast<std::size_t>(z)];
      if (cnt == 0) continue;
      int nz = std::min(z + 1, d);
      next[static_cast<std::size_t>(nz)] += cnt;  // append 0
      if (z == d) next[0] += cnt;                 // append 1 after >= d zeroes
    }
    state = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : state) total += c;
  return total;
}

}  // namespace labelcap
