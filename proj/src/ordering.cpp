#include "labelcap/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "labelcap/errors.hpp"

namespace labelcap {

std::vector<Label> all_labels(const Alphabet& alphabet, int lmax) {
  if (lmax < 1) throw std::invalid_argument("lmax must be >= 1");
  const int q = alphabet.size();
  std::vector<Label> out;
  for (int l = 1; l <= lmax; ++l) {
    std::vector<Symbol> cur(static_cast<std::size_t>(l), 0);
    while (true) {
      out.emplace_back(cur, alphabet);
      int pos = l - 1;
      while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == q - 1) {
        cur[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++cur[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

std::vector<CapacityClass> order_labels_by_capacity(const Alphabet& alphabet, int lmax,
                                                    double equality_tol) {
  if (lmax > 5) {
    throw UnsupportedScope("capacity ordering is established for lengths up to 5");
  }
  std::vector<Label> labels = all_labels(alphabet, lmax);
  std::vector<std::pair<double, std::size_t>> caps;
  caps.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    CapacityValue v = capacity_via_automaton(LabelSet({labels[i]}));
    caps.emplace_back(v.lambda, i);
  }
  std::sort(caps.begin(), caps.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<CapacityClass> classes;
  for (const auto& [lambda, idx] : caps) {
    if (classes.empty() || classes.back().lambda - lambda > equality_tol) {
      CapacityClass fresh;
      fresh.lambda = lambda;
      classes.push_back(std::move(fresh));
    }
    classes.back().labels.push_back(labels[idx]);
  }
  for (CapacityClass& cls : classes) {
    std::sort(cls.labels.begin(), cls.labels.end(), [](const Label& a, const Label& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a < b;
    });
    cls.log2_lambda = std::log2(cls.lambda);
  }
  return classes;
}

}  // namespace labelcap
