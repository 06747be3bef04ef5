#include "labelcap/verify.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "labelcap/closed_form.hpp"
#include "labelcap/digraph.hpp"
#include "labelcap/maxcap.hpp"
#include "labelcap/oracle.hpp"
#include "labelcap/ordering.hpp"
#include "labelcap/presentation.hpp"

namespace labelcap {

namespace {

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    out << (ok ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << "\n";
    if (!ok) ++failures;
  }
};

const std::vector<std::string>& suite_label_sets() {
  static const std::vector<std::string> kSets{
      "A",    "AA",       "AC",        "ATA",      "CGCG",    "AATAA",
      "ACACA", "AAGAAGAA", "ACGAC",     "AC,G",     "CG,A",    "AC,GT,AGCT",
      "ACGT,GTT", "AA,CC", "AA,CC,AC",
  };
  return kSets;
}

}  // namespace

int run_verification(std::ostream& out) {
  Reporter r{out};
  Alphabet dna = Alphabet::dna();

  // Formula and automaton agree on every covered label of length <= 4
  // (every length-5 class has a length <= 4 representative; the acceptance
  // suite sweeps length 5 exhaustively).
  {
    bool ok = true;
    std::string worst;
    for (const Label& label : all_labels(dna, 4)) {
      LabelSet ls({label});
      auto formula = cap_formula(ls);
      if (!formula) {
        ok = false;
        worst = label.str() + " uncovered";
        break;
      }
      double automaton = capacity_via_automaton(ls).lambda;
      if (std::abs(automaton - formula->lambda) >= 1e-9) {
        ok = false;
        worst = label.str();
        break;
      }
    }
    r.check("formula/automaton agreement, all labels len<=4 q=4", ok, worst);
  }

  // Exact path counts match the brute-force oracle.
  {
    bool ok = true;
    std::string worst;
    for (const std::string& text : suite_label_sets()) {
      LabelSet ls = LabelSet::parse(text, dna);
      DeterministicPresentation dp = determinize_image(build_reverse_transducer(ls));
      for (int n = 1; n <= 8 && ok; ++n) {
        BigInt exact = exact_image_count(dp, n);
        std::uint64_t brute = count_valid_labelings(ls, n);
        if (exact.to_string() != std::to_string(brute)) {
          ok = false;
          worst = text + " at n=" + std::to_string(n);
        }
      }
      if (!ok) break;
    }
    r.check("automaton counts = oracle counts, n<=8", ok, worst);
  }

  // Reference capacity constants.
  {
    struct Row {
      const char* labels;
      double lambda;
      double tol;
    };
    const std::vector<Row> rows{
        {"ATA", 1.618, 1e-3},      {"CGCG", 1.44, 5e-3},        {"AA", 1.7549, 1e-3},
        {"A", 2.0, 1e-9},          {"AC,GT,AGCT", 2.075, 1e-3}, {"ACGT,GTT", 1.685, 1e-3},
        {"AA,CC", 2.206, 1e-3},    {"AA,CC,AC", 2.582, 1e-3},
    };
    bool ok = true;
    std::string worst;
    for (const Row& row : rows) {
      double lambda = capacity_via_automaton(LabelSet::parse(row.labels, dna)).lambda;
      if (std::abs(lambda - row.lambda) > row.tol) {
        ok = false;
        worst = std::string(row.labels) + " gave " + std::to_string(lambda);
        break;
      }
    }
    r.check("reference capacity constants", ok, worst);
  }

  // Path-unique equivalence on two vertices, all sixteen subgraphs.
  {
    bool ok = true;
    Alphabet binary(2);
    for (int mask = 0; mask < 16 && ok; ++mask) {
      DiGraph g(2);
      int bit = 0;
      for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v, ++bit) {
          if (mask & (1 << bit)) g.add_edge(u, v);
        }
      }
      bool unique = is_path_unique(g);
      if (g.edge_count() == 4) {
        ok = !unique;
        continue;
      }
      double cap = capacity_via_automaton(complement_label_set(g, binary)).log2_lambda;
      ok = unique == (std::abs(cap - 1.0) < 1e-9);
    }
    r.check("path-unique iff full capacity, q=2 exhaustive", ok);
  }

  // Pair archetypes against the forbidden-pattern presentation.
  {
    bool ok = true;
    std::string worst;
    for (const PairTypeCheckRow& row : pair_type_table_check(3)) {
      if (std::abs(row.pair_lambda - row.forbidden_lambda) >= 1e-9) {
        ok = false;
        worst = pair_type_name(row.type);
        break;
      }
    }
    r.check("pair archetypes = forbidden-pattern capacities", ok, worst);
  }

  // RLL cross-check: the oracle's DP against the closed-form root, and the
  // single-label equivalence count(n) = rll(l-1, n-l+1).
  {
    bool ok = true;
    for (int l : {2, 3, 4}) {
      // Non-cyclic label: symbols cycle through the alphabet.
      std::vector<Symbol> plain;
      for (int i = 0; i < l; ++i) plain.push_back(static_cast<Symbol>(i % 4));
      LabelSet ls({Label(plain, dna)});
      for (int n = l - 1; n <= 9 && ok; ++n) {
        ok = count_valid_labelings(ls, n) == rll_count(l - 1, n - l + 1);
      }
    }
    r.check("non-cyclic label counts = RLL counts", ok);
  }

  out << (r.failures == 0 ? "verification passed" : "verification FAILED") << "\n";
  return r.failures;
}

}  // namespace labelcap
