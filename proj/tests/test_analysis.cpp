#include "doctest.h"

#include "labelcap/analysis.hpp"
#include "labelcap/errors.hpp"
#include "labelcap/ordering.hpp"

using namespace labelcap;

namespace {

Label lab(const char* s) { return Label::parse(s, Alphabet::dna()); }

// The two-window overlap from the cyclic-overlap definition, without the
// distinctness requirement the public overlap() enforces. Test oracle only.
int raw_overlap(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  int best = 0;
  for (std::size_t r = 1; r <= std::min(a.size(), b.size()); ++r) {
    if (std::equal(a.end() - static_cast<long>(r), a.end(), b.begin())) {
      best = static_cast<int>(r);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("label parsing and alphabets") {
  Alphabet dna = Alphabet::dna();
  CHECK(Label::parse("AATAA", dna) == Label::parse("0,0,3,0,0", dna));
  CHECK(Label::parse("AATAA", dna).str() == "AATAA");
  Alphabet six(6);  // digit display beyond the DNA range
  CHECK(six.display_char(5) == '5');
  CHECK(Label::parse("0,5", six).str() == "05");
  CHECK_THROWS_AS((void)Label::parse("AZ", dna), std::invalid_argument);
  CHECK_THROWS_AS((void)Label::parse("0,7", dna), std::invalid_argument);
  CHECK_THROWS_AS(LabelSet::parse("AC,ACG", dna), std::invalid_argument);  // prefix
  CHECK_THROWS_AS(LabelSet::parse("AC,AC", dna), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(Alphabet::from_display("AAC"), std::invalid_argument);   // repeats
  CHECK(LabelSet::parse("AC,G", dna).max_length() == 2);
  CHECK(LabelSet::parse("AC,G", dna).min_length() == 1);
}

TEST_CASE("period") {
  CHECK(period(lab("CGCGCG")) == 2);
  CHECK(period(lab("GATG")) == 4);  // non-periodic
  CHECK(period(lab("A")) == 1);
  CHECK(period(lab("ACAC")) == 2);
  CHECK(period(lab("ACACA")) == 5);  // 5 is prime; only the trivial divisor works
}

TEST_CASE("overlap") {
  CHECK(overlap(lab("CGCGCG"), lab("GATG")) == 1);
  CHECK(overlap(lab("GATG"), lab("CGCGCG")) == 0);
  CHECK(overlap(lab("ACGT"), lab("GTT")) == 2);
  CHECK(overlap(lab("GTT"), lab("ACGT")) == 0);
  // Full-length suffix matches are allowed for distinct labels.
  CHECK(overlap(lab("GAC"), lab("AC")) == 2);
  CHECK_THROWS_AS((void)overlap(lab("AC"), lab("AC")), std::invalid_argument);
}

TEST_CASE("cyclic overlap") {
  CHECK(cyclic_overlap(lab("CGCGCG")) == 4);
  CHECK(cyclic_overlap(lab("ATA")) == 1);
  CHECK(cyclic_overlap(lab("AC")) == 0);
  CHECK(cyclic_overlap(lab("A")) == 0);
  CHECK(cyclic_overlap(lab("GATG")) == 1);
  CHECK(cyclic_overlap(lab("ACACA")) == 3);
  CHECK(cyclic_overlap(lab("CGTCGTC")) == 4);
}

TEST_CASE("cyclic overlap equals the two-window overlap, exhaustive l<=6") {
  // The overlap of the two length-(l-1) windows, taken so that a suffix of
  // the label meets a prefix of the label: overlap(tail window, head window).
  // That orientation reproduces the reference values (GATG has cyclic
  // overlap 1, not 2) and coincides with the longest proper border.
  Alphabet dna = Alphabet::dna();
  for (const Label& label : all_labels(dna, 6)) {
    if (label.length() == 1) {
      CHECK(cyclic_overlap(label) == 0);
      continue;
    }
    const auto& s = label.symbols();
    std::vector<Symbol> head(s.begin(), s.end() - 1);
    std::vector<Symbol> tail(s.begin() + 1, s.end());
    CAPTURE(label.str());
    CHECK(cyclic_overlap(label) == raw_overlap(tail, head));
  }
}

TEST_CASE("period divides length; periodic labels have overlap l - p") {
  Alphabet dna = Alphabet::dna();
  for (const Label& label : all_labels(dna, 6)) {
    int p = period(label);
    CHECK(label.length() % p == 0);
    if (p < label.length()) {
      CAPTURE(label.str());
      CHECK(cyclic_overlap(label) == label.length() - p);
    }
  }
}

TEST_CASE("almost periodic") {
  auto a = almost_periodic(lab("ACACA"));
  REQUIRE(a);
  CHECK(a->partial_period_length == 2);
  CHECK(a->suffix_length == 1);
  auto b = almost_periodic(lab("CGTCGTC"));
  REQUIRE(b);
  CHECK(b->partial_period_length == 3);
  CHECK(b->suffix_length == 1);
  CHECK_FALSE(almost_periodic(lab("ACG")));
  auto c = almost_periodic(lab("AATAA"));
  REQUIRE(c);
  CHECK(c->partial_period_length == 3);
  CHECK(c->suffix_length == 2);
}

TEST_CASE("classify") {
  CHECK(classify(lab("ACG")).kind == LabelKind::kNonCyclic);
  CHECK(classify(lab("A")).kind == LabelKind::kNonCyclic);

  LabelClass cgcg = classify(lab("CGCG"));
  CHECK(cgcg.kind == LabelKind::kPeriodicNonCyclicPeriod);
  CHECK(cgcg.period == 2);

  LabelClass ata = classify(lab("ATA"));
  CHECK(ata.kind == LabelKind::kNonPeriodicCyclicOverlap);
  CHECK(ata.cyclic_overlap == 1);
  CHECK(ata.condition == 1);

  LabelClass acaca = classify(lab("ACACA"));
  CHECK(acaca.kind == LabelKind::kNonPeriodicCyclicOverlap);
  CHECK(acaca.cyclic_overlap == 3);
  CHECK(acaca.condition == 2);

  LabelClass aataa = classify(lab("AATAA"));
  CHECK(aataa.kind == LabelKind::kPeriodicOverlapPeriodOne);
  CHECK(aataa.cyclic_overlap == 2);

  CHECK(classify(lab("AAGAAGAA")).kind == LabelKind::kUncovered);
  // Periodic label whose period block is itself cyclic.
  CHECK(classify(lab("ATAATA")).kind == LabelKind::kUncovered);
}

TEST_CASE("classification is total and single-tag over all 1364 labels, l<=5") {
  Alphabet dna = Alphabet::dna();
  auto labels = all_labels(dna, 5);
  CHECK(labels.size() == 1364);
  int uncovered = 0;
  for (const Label& label : labels) {
    LabelClass cls = classify(label);
    // The switch in label_kind_name is exhaustive; reaching it proves the tag
    // is one of the five kinds.
    CHECK_FALSE(label_kind_name(cls.kind).empty());
    if (cls.kind == LabelKind::kUncovered) ++uncovered;
  }
  // Every label of length <= 5 lands in a covered class.
  CHECK(uncovered == 0);
}

TEST_CASE("ordering beyond length 5 is refused") {
  CHECK_THROWS_AS((void)order_labels_by_capacity(Alphabet::dna(), 6), labelcap::UnsupportedScope);
  auto classes = order_labels_by_capacity(Alphabet::dna(), 2);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].labels.front().length() == 1);
}
