// label: capacities of pattern-label sets over finite alphabets.
//
// Exit codes: 0 success, 1 failure (including verify disagreements),
// 2 invalid input, 3 budget exceeded, 4 outside supported scope.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "labelcap/closed_form.hpp"
#include "labelcap/digraph.hpp"
#include "labelcap/errors.hpp"
#include "labelcap/labeling.hpp"
#include "labelcap/maxcap.hpp"
#include "labelcap/oracle.hpp"
#include "labelcap/ordering.hpp"
#include "labelcap/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace labelcap;

constexpr int kExitFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitScope = 4;

// Floats carry 12 significant digits in machine output.
double sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

struct AlphabetArgs {
  int q = 4;
  std::string display;

  Alphabet resolve() const {
    if (!display.empty()) return Alphabet::from_display(display);
    return Alphabet(q);
  }
};

void add_alphabet_flags(CLI::App* cmd, AlphabetArgs& args) {
  cmd->add_option("--q", args.q, "Alphabet size")->check(CLI::Range(1, 36));
  cmd->add_option("--alphabet", args.display, "Explicit display characters, e.g. ACGT");
}

struct LabelArgs {
  std::string display;  // comma-separated display labels
  std::string indices;  // semicolon-separated labels, comma-separated indices

  LabelSet resolve(const Alphabet& alphabet) const {
    if (!indices.empty()) {
      std::vector<Label> labels;
      std::stringstream ss(indices);
      std::string tok;
      while (std::getline(ss, tok, ';')) {
        if (!tok.empty()) labels.push_back(Label::parse(tok, alphabet));
      }
      return LabelSet(std::move(labels));
    }
    if (display.empty()) throw std::invalid_argument("no labels given");
    return LabelSet::parse(display, alphabet);
  }
};

void add_label_flags(CLI::App* cmd, LabelArgs& args) {
  cmd->add_option("--labels", args.display,
                  "Comma-separated labels in display form, e.g. AC,G");
  cmd->add_option("--labels-indices", args.indices,
                  "Semicolon-separated labels as comma-separated indices, e.g. 0,1;2");
}

EnumerationBudget budget_from(const std::optional<std::uint64_t>& flag) {
  EnumerationBudget budget;
  if (const char* env = std::getenv("LABELCAP_BUDGET")) {
    budget.max_inputs = std::strtoull(env, nullptr, 10);
  }
  if (flag) budget.max_inputs = *flag;
  return budget;
}

AutomatonOptions automaton_options() {
  AutomatonOptions options;
  if (const char* env = std::getenv("LABELCAP_BUDGET")) {
    options.max_subset_states = std::strtoull(env, nullptr, 10);
  }
  return options;
}

json capacity_json(const CapacityValue& v) {
  json out;
  out["method"] = capacity_method_name(v.method);
  out["lambda"] = sig12(v.lambda);
  out["log2_lambda"] = sig12(v.log2_lambda);
  if (v.polynomial) {
    out["polynomial"] = v.polynomial->coefficients();
    out["polynomial_text"] = v.polynomial->to_string();
  }
  return out;
}

void print_capacity_text(const std::string& labels, const CapacityValue& v) {
  std::printf("labels: %s\n", labels.c_str());
  std::printf("method: %s\n", capacity_method_name(v.method).c_str());
  if (v.polynomial) std::printf("polynomial: %s\n", v.polynomial->to_string().c_str());
  std::printf("lambda: %.12g\n", v.lambda);
  std::printf("capacity (log2 lambda): %.12g\n", v.log2_lambda);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string labeling_to_string(const std::vector<int>& c) {
  bool wide = false;
  for (int v : c) wide = wide || v > 9;
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (wide && i) out += ",";
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "labeling-capacity toolkit: closed-form, automaton and brute-force\n"
      "capacities of pattern-label sets (supported envelope: label length <= 6,\n"
      "q <= 6, up to 16 labels; larger inputs run until a state budget refuses)"};
  app.require_subcommand(1);

  // ---- classify ----
  auto* classify_cmd = app.add_subcommand("classify", "Period/overlap analysis of labels");
  AlphabetArgs cl_alpha;
  LabelArgs cl_labels;
  bool cl_json = false;
  add_alphabet_flags(classify_cmd, cl_alpha);
  add_label_flags(classify_cmd, cl_labels);
  classify_cmd->add_flag("--json", cl_json, "Machine-readable output");
  classify_cmd->callback([&] {
    Alphabet alphabet = cl_alpha.resolve();
    LabelSet labels = cl_labels.resolve(alphabet);
    json rows = json::array();
    for (int i = 0; i < labels.size(); ++i) {
      const Label& label = labels[i];
      LabelClass cls = classify(label);
      auto ap = almost_periodic(label);
      if (cl_json) {
        json row;
        row["label"] = label.str();
        row["length"] = label.length();
        row["period"] = cls.period;
        row["cyclic_overlap"] = cls.cyclic_overlap;
        row["class"] = label_kind_name(cls.kind);
        if (cls.condition != 0) row["condition"] = cls.condition;
        if (ap) {
          row["almost_periodic"] = {{"partial_period", ap->partial_period_length},
                                    {"suffix", ap->suffix_length}};
        }
        rows.push_back(row);
      } else {
        std::printf("%s: length=%d period=%d cyclic_overlap=%d class=%s", label.str().c_str(),
                    label.length(), cls.period, cls.cyclic_overlap,
                    label_kind_name(cls.kind).c_str());
        if (cls.condition != 0) std::printf(" condition=%d", cls.condition);
        if (ap) {
          std::printf(" almost_periodic=(p'=%d,t=%d)", ap->partial_period_length,
                      ap->suffix_length);
        }
        std::printf("\n");
      }
    }
    if (cl_json) std::printf("%s\n", rows.dump().c_str());
  });

  // ---- map ----
  auto* map_cmd = app.add_subcommand("map", "Labeling sequence of a source string");
  AlphabetArgs map_alpha;
  LabelArgs map_labels;
  std::string map_x;
  bool map_complete = false;
  add_alphabet_flags(map_cmd, map_alpha);
  add_label_flags(map_cmd, map_labels);
  map_cmd->add_option("--x", map_x, "Source sequence")->required();
  map_cmd->add_flag("--complete", map_complete, "Complete labeling sequence (single label only)");
  map_cmd->callback([&] {
    Alphabet alphabet = map_alpha.resolve();
    LabelSet labels = map_labels.resolve(alphabet);
    std::vector<Symbol> x = parse_sequence(map_x, alphabet);
    std::vector<int> c;
    if (map_complete) {
      if (labels.size() != 1) {
        throw std::invalid_argument("--complete is defined for a single label");
      }
      c = complete_labeling_sequence(x, labels[0]);
    } else {
      c = labeling_sequence(x, labels);
    }
    std::printf("%s\n", labeling_to_string(c).c_str());
  });

  // ---- count ----
  auto* count_cmd = app.add_subcommand("count", "|F_n|: number of valid labeling sequences");
  AlphabetArgs cnt_alpha;
  LabelArgs cnt_labels;
  int cnt_n = 0;
  std::string cnt_method = "oracle";
  bool cnt_emit = false;
  std::optional<std::uint64_t> cnt_budget;
  add_alphabet_flags(count_cmd, cnt_alpha);
  add_label_flags(count_cmd, cnt_labels);
  count_cmd->add_option("--n", cnt_n, "Sequence length")->required();
  count_cmd->add_option("--method", cnt_method, "oracle | automaton")
      ->check(CLI::IsMember({"oracle", "automaton"}));
  count_cmd->add_flag("--emit-set", cnt_emit, "Write one labeling sequence per line (oracle)");
  count_cmd->add_option("--budget", cnt_budget, "Max enumerated source sequences");
  count_cmd->callback([&] {
    Alphabet alphabet = cnt_alpha.resolve();
    LabelSet labels = cnt_labels.resolve(alphabet);
    if (cnt_method == "oracle") {
      ImageCensus census =
          enumerate_valid_labelings(labels, cnt_n, budget_from(cnt_budget), cnt_emit);
      if (cnt_emit) {
        for (const auto& seq : *census.sequences) {
          std::printf("%s\n", labeling_to_string(seq).c_str());
        }
      }
      std::printf("%llu\n", static_cast<unsigned long long>(census.count));
    } else {
      auto dp = determinize_image(build_reverse_transducer(labels), automaton_options());
      std::printf("%s\n", exact_image_count(dp, cnt_n).to_string().c_str());
    }
  });

  // ---- cap ----
  auto* cap_cmd = app.add_subcommand("cap", "Labeling capacity of a label set");
  AlphabetArgs cap_alpha;
  LabelArgs cap_labels;
  std::string cap_method = "automaton";
  bool cap_json = false;
  std::string cap_dot;
  int cap_nmax = 10;
  std::optional<std::uint64_t> cap_budget;
  bool cap_disagreed = false;
  add_alphabet_flags(cap_cmd, cap_alpha);
  add_label_flags(cap_cmd, cap_labels);
  cap_cmd->add_option("--method", cap_method, "formula | automaton | oracle | all")
      ->check(CLI::IsMember({"formula", "automaton", "oracle", "all"}));
  cap_cmd->add_flag("--json", cap_json, "Machine-readable output");
  cap_cmd->add_option("--dot", cap_dot, "Write the determinized presentation as DOT");
  cap_cmd->add_option("--nmax", cap_nmax, "Oracle slope horizon")->check(CLI::Range(2, 32));
  cap_cmd->add_option("--budget", cap_budget, "Max enumerated source sequences (oracle)");
  cap_cmd->callback([&] {
    Alphabet alphabet = cap_alpha.resolve();
    LabelSet labels = cap_labels.resolve(alphabet);
    json report;
    report["labels"] = json::array();
    for (int i = 0; i < labels.size(); ++i) report["labels"].push_back(labels[i].str());
    report["alphabet"] = alphabet.size();

    std::optional<CapacityValue> formula;
    std::optional<CapacityValue> automaton;
    std::optional<double> slope;
    json notes = json::array();

    if (cap_method == "formula" || cap_method == "all") {
      formula = cap_formula(labels);
      if (!formula) {
        if (cap_method == "formula") {
          throw UnsupportedScope("no closed form covers this label set; use the automaton");
        }
        notes.push_back("no closed form for this label set");
      }
    }
    if (cap_method == "automaton" || cap_method == "all") {
      automaton = capacity_via_automaton(labels, automaton_options());
    }
    if (cap_method == "oracle" || cap_method == "all") {
      auto slopes = capacity_slope_estimate(labels, cap_nmax, budget_from(cap_budget));
      slope = slopes.back();
      notes.push_back("oracle slope estimates the capacity; it is not a proof");
    }
    if (!cap_dot.empty()) {
      write_file(cap_dot,
                 determinize_image(build_reverse_transducer(labels), automaton_options())
                     .to_dot());
    }

    if (cap_method == "all") {
      json methods;
      if (formula) methods["formula"] = capacity_json(*formula);
      if (automaton) methods["automaton"] = capacity_json(*automaton);
      if (slope) {
        json est;
        est["method"] = capacity_method_name(CapacityMethod::kOracleEstimate);
        est["lambda"] = sig12(std::exp2(*slope));
        est["log2_lambda"] = sig12(*slope);
        est["nmax"] = cap_nmax;
        methods["oracle"] = est;
      }
      bool disagree = false;
      if (formula && automaton && std::abs(formula->lambda - automaton->lambda) > 1e-9) {
        disagree = true;
      }
      if (slope && automaton && std::abs(*slope - automaton->log2_lambda) > 0.05) {
        disagree = true;
      }
      report["methods"] = methods;
      report["disagreement"] = disagree;
      report["notes"] = notes;
      if (cap_json) {
        std::printf("%s\n", report.dump().c_str());
      } else {
        if (formula) print_capacity_text(labels.str(), *formula);
        if (automaton) print_capacity_text(labels.str(), *automaton);
        if (slope) std::printf("oracle slope at n=%d: %.12g\n", cap_nmax, *slope);
        std::printf("disagreement: %s\n", disagree ? "yes" : "no");
      }
      cap_disagreed = disagree;
      return;
    }

    CapacityValue value;
    if (cap_method == "formula") {
      value = *formula;
    } else if (cap_method == "automaton") {
      value = *automaton;
    } else {
      value.method = CapacityMethod::kOracleEstimate;
      value.log2_lambda = *slope;
      value.lambda = std::exp2(*slope);
      value.tolerance = 0.05;
    }
    if (cap_json) {
      json out = report;
      out.update(capacity_json(value));
      if (!notes.empty()) out["notes"] = notes;
      std::printf("%s\n", out.dump().c_str());
    } else {
      print_capacity_text(labels.str(), value);
    }
  });

  // ---- order ----
  auto* order_cmd = app.add_subcommand("order", "Group labels of length <= lmax by capacity");
  AlphabetArgs ord_alpha;
  int ord_lmax = 5;
  bool ord_json = false;
  int ord_examples = 6;
  add_alphabet_flags(order_cmd, ord_alpha);
  order_cmd->add_option("--lmax", ord_lmax, "Maximum label length (<= 5)")->required();
  order_cmd->add_flag("--json", ord_json, "Machine-readable output");
  order_cmd->add_option("--max-examples", ord_examples, "Representatives shown per class");
  order_cmd->callback([&] {
    Alphabet alphabet = ord_alpha.resolve();
    auto classes = order_labels_by_capacity(alphabet, ord_lmax);
    if (ord_json) {
      json out = json::array();
      for (const auto& cls : classes) {
        json row;
        row["lambda"] = sig12(cls.lambda);
        row["log2_lambda"] = sig12(cls.log2_lambda);
        row["size"] = cls.labels.size();
        json reps = json::array();
        for (std::size_t i = 0;
             i < cls.labels.size() && i < static_cast<std::size_t>(ord_examples); ++i) {
          reps.push_back(cls.labels[i].str());
        }
        row["representatives"] = reps;
        out.push_back(row);
      }
      std::printf("%s\n", out.dump().c_str());
    } else {
      for (const auto& cls : classes) {
        std::printf("capacity %.9f (lambda %.9f), %zu labels:", cls.log2_lambda, cls.lambda,
                    cls.labels.size());
        for (std::size_t i = 0;
             i < cls.labels.size() && i < static_cast<std::size_t>(ord_examples); ++i) {
          std::printf(" %s", cls.labels[i].str().c_str());
        }
        if (cls.labels.size() > static_cast<std::size_t>(ord_examples)) std::printf(" ...");
        std::printf("\n");
      }
    }
  });

  // ---- minlabels ----
  auto* min_cmd = app.add_subcommand("minlabels", "Minimal label count for full capacity");
  int min_len = 2;
  int min_q = 4;
  min_cmd->add_option("--len", min_len, "Label length (1 or 2)")->required();
  min_cmd->add_option("--q", min_q, "Alphabet size")->required();
  min_cmd->callback([&] {
    std::printf("%lld\n", static_cast<long long>(minimal_label_count(min_len, min_q)));
  });

  // ---- pathunique / extremal (also grouped under `graph`) ----
  std::string pu_in;
  int ex_n = 0;
  std::string ex_dot;
  auto register_graph_cmds = [&](CLI::App* parent) {
    auto* pu = parent->add_subcommand("pathunique", "Decide walk-uniqueness of a digraph");
    pu->add_option("--in", pu_in, "Graph file: first line n, then 'u v' edges")->required();
    pu->callback([&] {
      std::ifstream in(pu_in);
      if (!in) throw std::invalid_argument("cannot open " + pu_in);
      DiGraph g = DiGraph::read(in);
      std::printf("%s\n", is_path_unique(g) ? "path-unique" : "not path-unique");
    });
    auto* ex = parent->add_subcommand("extremal", "Edge-maximal path-unique graph");
    ex->add_option("--n", ex_n, "Vertex count")->required();
    ex->add_option("--dot", ex_dot, "Write the graph as DOT");
    ex->callback([&] {
      DiGraph g = extremal_path_unique_graph(ex_n);
      if (!ex_dot.empty()) write_file(ex_dot, g.to_dot());
      std::printf("%s", g.to_text().c_str());
      std::printf("edges: %d (h_max = %lld)\n", g.edge_count(),
                  static_cast<long long>(h_max(ex_n)));
    });
  };
  register_graph_cmds(&app);
  auto* graph_group = app.add_subcommand("graph", "Digraph utilities");
  register_graph_cmds(graph_group);
  graph_group->require_subcommand(1);

  // ---- search-pairs ----
  auto* pairs_cmd = app.add_subcommand("search-pairs", "Best capacity over pairs of 2-labels");
  int sp_q = 3;
  bool sp_json = false;
  bool sp_full = false;
  pairs_cmd->add_option("--q", sp_q, "Alphabet size")->check(CLI::Range(2, 8));
  pairs_cmd->add_flag("--json", sp_json, "Machine-readable output");
  pairs_cmd->add_flag("--no-symmetry", sp_full, "Full enumeration without orbit reduction");
  pairs_cmd->callback([&] {
    PairSearchResult result = best_pair_capacity(sp_q, !sp_full);
    if (sp_json) {
      json out;
      out["q"] = sp_q;
      out["pairs_examined"] = result.pairs_examined;
      out["lambda"] = sig12(result.capacity.lambda);
      out["log2_lambda"] = sig12(result.capacity.log2_lambda);
      json wit = json::array();
      for (const auto& [a, b] : result.witnesses) wit.push_back(json::array({a.str(), b.str()}));
      out["witnesses"] = wit;
      json types = json::array();
      for (PairType t : result.witness_types) types.push_back(pair_type_name(t));
      out["witness_types"] = types;
      std::printf("%s\n", out.dump().c_str());
    } else {
      std::printf("q=%d pairs_examined=%zu\n", sp_q, result.pairs_examined);
      std::printf("best lambda: %.12g  capacity: %.12g\n", result.capacity.lambda,
                  result.capacity.log2_lambda);
      for (const auto& [a, b] : result.witnesses) {
        std::printf("witness: (%s, %s)  type: %s\n", a.str().c_str(), b.str().c_str(),
                    pair_type_name(classify_pair(a, b)).c_str());
      }
    }
  });

  // ---- search (generic k-subset) ----
  auto* search_cmd =
      app.add_subcommand("search", "Best capacity over k-element sets of length-2 labels");
  int se_q = 3;
  int se_k = 2;
  bool se_json = false;
  bool se_full = false;
  search_cmd->add_option("--q", se_q, "Alphabet size")->check(CLI::Range(2, 8));
  search_cmd->add_option("--k", se_k, "Number of labels")->required();
  search_cmd->add_flag("--json", se_json, "Machine-readable output");
  search_cmd->add_flag("--no-symmetry", se_full, "Full enumeration without orbit reduction");
  search_cmd->callback([&] {
    SubsetSearchResult result = best_subset_capacity(se_q, se_k, !se_full);
    if (se_json) {
      json out;
      out["q"] = se_q;
      out["k"] = se_k;
      out["subsets_examined"] = result.subsets_examined;
      out["lambda"] = sig12(result.capacity.lambda);
      out["log2_lambda"] = sig12(result.capacity.log2_lambda);
      json wit = json::array();
      for (const LabelSet& w : result.witnesses) wit.push_back(w.str());
      out["witnesses"] = wit;
      out["note"] = "no optimality theorem beyond k = 2; exhaustive search result";
      std::printf("%s\n", out.dump().c_str());
    } else {
      std::printf("q=%d k=%d subsets_examined=%zu\n", se_q, se_k, result.subsets_examined);
      std::printf("best lambda: %.12g  capacity: %.12g\n", result.capacity.lambda,
                  result.capacity.log2_lambda);
      for (const LabelSet& w : result.witnesses) {
        std::printf("witness: {%s}\n", w.str().c_str());
      }
    }
  });

  // ---- forbidden ----
  auto* forb_cmd = app.add_subcommand("forbidden", "Capacity avoiding given substrings");
  AlphabetArgs fb_alpha;
  std::string fb_patterns;
  bool fb_json = false;
  add_alphabet_flags(forb_cmd, fb_alpha);
  forb_cmd->add_option("--patterns", fb_patterns, "Comma-separated forbidden substrings");
  forb_cmd->add_flag("--json", fb_json, "Machine-readable output");
  forb_cmd->callback([&] {
    Alphabet alphabet = fb_alpha.resolve();
    std::vector<std::string> patterns;
    std::stringstream ss(fb_patterns);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) patterns.push_back(tok);
    }
    CapacityValue v = forbidden_substring_capacity(alphabet, patterns);
    if (fb_json) {
      json out;
      out["alphabet"] = alphabet.size();
      out["patterns"] = patterns;
      out.update(capacity_json(v));
      std::printf("%s\n", out.dump().c_str());
    } else {
      std::printf("lambda: %.12g\ncapacity: %.12g\n", v.lambda, v.log2_lambda);
    }
  });

  // ---- bound ----
  auto* bound_cmd = app.add_subcommand("bound", "Reference lower bounds (nine or three labels)");
  std::string bd_which;
  int bd_q = 3;
  bool bd_json = false;
  bound_cmd->add_option("--which", bd_which, "nine | three")
      ->required()
      ->check(CLI::IsMember({"nine", "three"}));
  bound_cmd->add_option("--q", bd_q, "Alphabet size for the three-label bound");
  bound_cmd->add_flag("--json", bd_json, "Machine-readable output");
  bound_cmd->callback([&] {
    CapacityValue v;
    std::string labels;
    if (bd_which == "nine") {
      v = nine_label_lower_bound();
      labels = nine_label_set().str();
    } else {
      v = three_label_lower_bound(bd_q);
      Alphabet alphabet(bd_q);
      labels =
          LabelSet({Label({0, 0}, alphabet), Label({1, 1}, alphabet), Label({0, 1}, alphabet)})
              .str();
    }
    if (bd_json) {
      json out;
      out["which"] = bd_which;
      out["labels"] = labels;
      out.update(capacity_json(v));
      std::printf("%s\n", out.dump().c_str());
    } else {
      print_capacity_text(labels, v);
    }
  });

  // ---- verify ----
  bool verify_failed = false;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-method regression suite");
  verify_cmd->callback([&] { verify_failed = run_verification(std::cout) != 0; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const BudgetExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBudget;
  } catch (const UnsupportedScope& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitScope;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return (verify_failed || cap_disagreed) ? kExitFailure : 0;
}
