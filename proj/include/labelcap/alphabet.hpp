#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace labelcap {

using Symbol = std::uint8_t;

// A q-ary alphabet with optional display characters. Defaults to the DNA
// characters for q <= 4 and decimal digits for q <= 10; larger alphabets are
// index-only.
class Alphabet {
 public:
  explicit Alphabet(int size);
  Alphabet(int size, std::string display);

  static Alphabet dna() { return Alphabet(4); }
  // Alphabet whose display characters are exactly `display` (q = length).
  static Alphabet from_display(const std::string& display);

  int size() const { return size_; }
  bool has_display() const { return !display_.empty(); }
  char display_char(Symbol s) const;
  // Index of a display character, or nullopt if not in this alphabet.
  std::optional<Symbol> index_of(char c) const;

  bool operator==(const Alphabet& rhs) const {
    return size_ == rhs.size_ && display_ == rhs.display_;
  }

 private:
  int size_ = 0;
  std::string display_;  // empty for index-only alphabets
};

// A pattern over an alphabet; the unit the labeling channel marks.
class Label {
 public:
  Label(std::vector<Symbol> symbols, Alphabet alphabet);

  // Parses either display characters ("AATAA") or comma-separated indices
  // ("0,0,3,0,0").
  static Label parse(const std::string& text, const Alphabet& alphabet);

  int length() const { return static_cast<int>(symbols_.size()); }
  Symbol operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const Alphabet& alphabet() const { return alphabet_; }

  std::string str() const;

  bool operator==(const Label& rhs) const { return symbols_ == rhs.symbols_; }
  bool operator!=(const Label& rhs) const { return !(*this == rhs); }
  bool operator<(const Label& rhs) const { return symbols_ < rhs.symbols_; }

  bool is_prefix_of(const Label& rhs) const;

 private:
  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
};

// An ordered, prefix-free collection of distinct labels over one alphabet.
// Construction rejects duplicates and prefix violations, which is what
// guarantees that at most one label occurrence starts at any position.
class LabelSet {
 public:
  explicit LabelSet(std::vector<Label> labels);

  // Parses a comma-separated list of display-format labels.
  static LabelSet parse(const std::string& text, const Alphabet& alphabet);

  int size() const { return static_cast<int>(labels_.size()); }
  const Label& operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<Label>& labels() const { return labels_; }
  const Alphabet& alphabet() const { return labels_.front().alphabet(); }
  int max_length() const;
  int min_length() const;

  std::string str() const;  // comma-separated display form

 private:
  std::vector<Label> labels_;
};

// Parses a source sequence in the same display format as labels.
std::vector<Symbol> parse_sequence(const std::string& text, const Alphabet& alphabet);
std::string sequence_str(const std::vector<Symbol>& seq, const Alphabet& alphabet);

}  // namespace labelcap
