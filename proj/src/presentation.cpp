#include "labelcap/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "labelcap/errors.hpp"
#include "labelcap/spectral.hpp"

namespace labelcap {

namespace {

struct SubsetHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

Eigen::MatrixXi DeterministicPresentation::adjacency() const {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(num_states, num_states);
  for (int u = 0; u < num_states; ++u) {
    for (int o = 0; o < out_symbols; ++o) {
      int v = transition(u, o);
      if (v >= 0) a(u, v) += 1;
    }
  }
  return a;
}

std::string DeterministicPresentation::to_dot() const {
  std::ostringstream os;
  os << "digraph presentation {\n  rankdir=LR;\n";
  os << "  start [shape=point];\n  start -> s" << start << ";\n";
  for (int u = 0; u < num_states; ++u) {
    os << "  s" << u << " [shape=circle,label=\"" << u << "\"];\n";
  }
  for (int u = 0; u < num_states; ++u) {
    for (int o = 0; o < out_symbols; ++o) {
      int v = transition(u, o);
      if (v >= 0) os << "  s" << u << " -> s" << v << " [label=\"" << o << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

DeterministicPresentation determinize_image(const OutputTransducer& transducer,
                                            const AutomatonOptions& options) {
  const int q = transducer.q;
  const int out_symbols = transducer.k + 1;

  // NFA view over output symbols: per source state, group targets by output.
  std::vector<std::vector<std::pair<int, std::int32_t>>> nfa(
      static_cast<std::size_t>(transducer.num_states));
  for (int s = 0; s < transducer.num_states; ++s) {
    for (Symbol a = 0; a < q; ++a) {
      nfa[static_cast<std::size_t>(s)].emplace_back(transducer.output(s, a),
                                                    transducer.transition(s, a));
    }
  }

  std::vector<std::int32_t> start_subset;
  if (options.interior_only) {
    for (int s : transducer.full_window_states()) start_subset.push_back(s);
  } else {
    start_subset.push_back(transducer.initial);
  }
  std::sort(start_subset.begin(), start_subset.end());

  std::unordered_map<std::vector<std::int32_t>, int, SubsetHash> index;
  std::vector<std::vector<std::int32_t>> order;
  index.emplace(start_subset, 0);
  order.push_back(start_subset);

  DeterministicPresentation dp;
  dp.start = 0;
  dp.out_symbols = out_symbols;

  for (std::size_t head = 0; head < order.size(); ++head) {
    std::vector<std::vector<std::int32_t>> targets(static_cast<std::size_t>(out_symbols));
    for (std::int32_t s : order[head]) {
      for (const auto& [o, ns] : nfa[static_cast<std::size_t>(s)]) {
        targets[static_cast<std::size_t>(o)].push_back(ns);
      }
    }
    for (int o = 0; o < out_symbols; ++o) {
      auto& t = targets[static_cast<std::size_t>(o)];
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      if (t.empty()) {
        dp.trans.push_back(-1);
        continue;
      }
      auto [it, fresh] = index.emplace(t, static_cast<int>(order.size()));
      if (fresh) {
        if (order.size() >= options.max_subset_states) {
          throw BudgetExceeded("subset construction exceeded " +
                               std::to_string(options.max_subset_states) + " states");
        }
        order.push_back(t);
      }
      dp.trans.push_back(it->second);
    }
  }
  dp.num_states = static_cast<int>(order.size());
  return dp;
}

BigInt exact_image_count(const DeterministicPresentation& presentation, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<BigInt> count(static_cast<std::size_t>(presentation.num_states));
  count[static_cast<std::size_t>(presentation.start)] = BigInt(1);
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(static_cast<std::size_t>(presentation.num_states));
    for (int u = 0; u < presentation.num_states; ++u) {
      if (count[static_cast<std::size_t>(u)].is_zero()) continue;
      for (int o = 0; o < presentation.out_symbols; ++o) {
        int v = presentation.transition(u, o);
        if (v >= 0) next[static_cast<std::size_t>(v)] += count[static_cast<std::size_t>(u)];
      }
    }
    count = std::move(next);
  }
  BigInt total;
  for (const BigInt& c : count) total += c;
  return total;
}

std::string capacity_method_name(CapacityMethod method) {
  switch (method) {
    case CapacityMethod::kFormula:
      return "formula";
    case CapacityMethod::kAutomaton:
      return "automaton";
    case CapacityMethod::kOracleEstimate:
      return "oracle-estimate";
  }
  return "automaton";
}

CapacityValue capacity_via_automaton(const LabelSet& labels, const AutomatonOptions& options) {
  OutputTransducer t = build_reverse_transducer(labels);
  DeterministicPresentation dp = determinize_image(t, options);
  if (dp.num_states > 8192) {
    throw BudgetExceeded("presentation with " + std::to_string(dp.num_states) +
                         " states is beyond the dense eigenvalue path");
  }
  CapacityValue value;
  value.method = CapacityMethod::kAutomaton;
  value.tolerance = options.tol;
  value.lambda = spectral_radius(dp.adjacency(), options.tol);
  value.log2_lambda = std::log2(value.lambda);
  return value;
}

}  // namespace labelcap
