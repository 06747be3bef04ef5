#include "doctest.h"

#include <random>

#include "labelcap/labeling.hpp"

using namespace labelcap;

namespace {

// Naive window-compare occurrence scan; the oracle the matcher must agree
// with.
std::vector<int> naive_starts(const std::vector<Symbol>& x, const LabelSet& labels) {
  std::vector<int> c(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (int j = 0; j < labels.size(); ++j) {
      const Label& lab = labels[j];
      if (i + static_cast<std::size_t>(lab.length()) > x.size()) continue;
      bool match = true;
      for (int d = 0; d < lab.length() && match; ++d) {
        match = x[i + static_cast<std::size_t>(d)] == lab[d];
      }
      if (match) {
        CHECK(c[i] == 0);  // prefix-freeness: one label per start position
        c[i] = j + 1;
      }
    }
  }
  return c;
}

std::vector<int> digits(const char* s) {
  std::vector<int> out;
  for (const char* p = s; *p; ++p) out.push_back(*p - '0');
  return out;
}

}  // namespace

TEST_CASE("labeling sequence reference examples") {
  Alphabet dna = Alphabet::dna();
  auto x = parse_sequence("AAACGATGACAC", dna);
  CHECK(labeling_sequence(x, LabelSet::parse("AC", dna)) == digits("001000001010"));
  CHECK(labeling_sequence(x, LabelSet::parse("AC,G", dna)) == digits("001020021010"));

  auto y = parse_sequence("ACCGGCGATA", dna);
  CHECK(labeling_sequence(y, LabelSet::parse("CG,A", dna)) == digits("2010010202"));
}

TEST_CASE("complete labeling sequence") {
  Alphabet dna = Alphabet::dna();
  auto y = parse_sequence("ACCGGCGATA", dna);
  CHECK(complete_labeling_sequence(y, Label::parse("CG", dna)) == digits("0011011000"));
  // No occurrence: all zeros.
  CHECK(complete_labeling_sequence(y, Label::parse("TTT", dna)) == digits("0000000000"));
  // Overlapping occurrences cover everything.
  auto z = parse_sequence("CGCGCG", dna);
  CHECK(complete_labeling_sequence(z, Label::parse("CGCG", dna)) == digits("111111"));
}

TEST_CASE("matcher agrees with the naive window scan on random inputs") {
  Alphabet dna = Alphabet::dna();
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> sym(0, 3);
  std::uniform_int_distribution<int> len(1, 24);
  const std::vector<std::string> sets = {"AC",     "AC,G",      "CG,A",  "AC,GT,AGCT",
                                         "ACGT,GTT", "AA,CC,AC", "AATAA", "CGCGCG,GATG"};
  for (const std::string& text : sets) {
    LabelSet labels = LabelSet::parse(text, dna);
    MultiPatternMatcher matcher(labels);
    for (int round = 0; round < 200; ++round) {
      std::vector<Symbol> x(static_cast<std::size_t>(len(rng)));
      for (auto& s : x) s = static_cast<Symbol>(sym(rng));
      CAPTURE(text);
      CHECK(matcher.starts(x) == naive_starts(x, labels));
    }
  }
}

TEST_CASE("complete labeling is recoverable from the labeling sequence") {
  // Position i is covered iff some occurrence starts within the l-1
  // positions before it (inclusive).
  Alphabet dna = Alphabet::dna();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> sym(0, 3);
  for (const char* text : {"ATA", "CGCG", "ACG", "AATAA"}) {
    Label label = Label::parse(text, dna);
    LabelSet single({label});
    const int l = label.length();
    for (int round = 0; round < 100; ++round) {
      std::vector<Symbol> x(18);
      for (auto& s : x) s = static_cast<Symbol>(sym(rng));
      auto starts = labeling_sequence(x, single);
      auto complete = complete_labeling_sequence(x, label);
      for (int i = 0; i < static_cast<int>(x.size()); ++i) {
        bool covered = false;
        for (int j = std::max(0, i - l + 1); j <= i; ++j) {
          covered = covered || starts[static_cast<std::size_t>(j)] == 1;
        }
        CHECK(complete[static_cast<std::size_t>(i)] == (covered ? 1 : 0));
      }
    }
  }
}

TEST_CASE("labeling is pure and handles short inputs") {
  Alphabet dna = Alphabet::dna();
  LabelSet labels = LabelSet::parse("ACG,T", dna);
  auto x = parse_sequence("TACGT", dna);
  CHECK(labeling_sequence(x, labels) == labeling_sequence(x, labels));
  // Shorter than the longest label: only the short label can fire.
  auto y = parse_sequence("AC", dna);
  CHECK(labeling_sequence(y, labels) == std::vector<int>{0, 0});
  auto t = parse_sequence("T", dna);
  CHECK(labeling_sequence(t, labels) == std::vector<int>{2});
}
