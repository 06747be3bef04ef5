#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "labelcap/alphabet.hpp"
#include "labelcap/bigint.hpp"
#include "labelcap/polynomial.hpp"
#include "labelcap/transducer.hpp"

namespace labelcap {

// Deterministic presentation of the (reversed) image language of the
// labeling map: subset construction over the transducer's output symbols.
// Out-edges of every state carry distinct output symbols, every state is
// accepting, and the number of length-n paths from the start equals |F_n|.
struct DeterministicPresentation {
  int num_states = 0;
  int start = 0;
  int out_symbols = 0;  // output alphabet size k+1
  // trans[state * out_symbols + symbol] -> state, or -1 when absent.
  std::vector<std::int32_t> trans;

  int transition(int state, int symbol) const {
    return trans[static_cast<std::size_t>(state) * static_cast<std::size_t>(out_symbols) +
                 static_cast<std::size_t>(symbol)];
  }

  // Entry (u, v) counts the distinct output symbols leading u -> v.
  Eigen::MatrixXi adjacency() const;

  std::string to_dot() const;
};

struct AutomatonOptions {
  // Refusal threshold for the subset construction.
  std::size_t max_subset_states = 1'000'000;
  double tol = 1e-12;
  // When true the presentation is built from full-length windows only,
  // dropping the boundary (transient) states. Capacity is insensitive to
  // this choice; exact counting is not, so counting always keeps them.
  bool interior_only = false;
};

DeterministicPresentation determinize_image(const OutputTransducer& transducer,
                                            const AutomatonOptions& options = {});

// Exact |F_n|: paths of length n from the start state, in exact integer
// arithmetic.
BigInt exact_image_count(const DeterministicPresentation& presentation, int n);

enum class CapacityMethod { kFormula, kAutomaton, kOracleEstimate };
std::string capacity_method_name(CapacityMethod method);

struct CapacityValue {
  double lambda = 0.0;
  double log2_lambda = 0.0;
  CapacityMethod method = CapacityMethod::kAutomaton;
  std::optional<IntPolynomial> polynomial;
  double tolerance = 0.0;
};

// Transducer -> determinized presentation -> Perron eigenvalue over the
// recurrent part -> log2. Works for any prefix-free label set, including
// the classes with no closed form.
CapacityValue capacity_via_automaton(const LabelSet& labels,
                                     const AutomatonOptions& options = {});

}  // namespace labelcap
