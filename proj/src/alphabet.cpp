#include "labelcap/alphabet.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace labelcap {

namespace {

std::string default_display(int size) {
  static const std::string kDna = "ACGT";
  static const std::string kDigits = "0123456789";
  if (size <= 4) return kDna.substr(0, static_cast<std::size_t>(size));
  if (size <= 10) return kDigits.substr(0, static_cast<std::size_t>(size));
  return {};
}

}  // namespace

Alphabet::Alphabet(int size) : size_(size), display_(default_display(size)) {
  if (size < 1) throw std::invalid_argument("alphabet size must be >= 1");
}

Alphabet::Alphabet(int size, std::string display) : size_(size), display_(std::move(display)) {
  if (size < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (display_.size() != static_cast<std::size_t>(size)) {
    throw std::invalid_argument("display characters must match alphabet size");
  }
  for (std::size_t i = 0; i < display_.size(); ++i) {
    for (std::size_t j = i + 1; j < display_.size(); ++j) {
      if (display_[i] == display_[j]) {
        throw std::invalid_argument("display characters must be distinct");
      }
    }
  }
}

Alphabet Alphabet::from_display(const std::string& display) {
  return Alphabet(static_cast<int>(display.size()), display);
}

char Alphabet::display_char(Symbol s) const {
  if (s >= size_) throw std::out_of_range("symbol outside alphabet");
  if (display_.empty()) throw std::logic_error("alphabet has no display characters");
  return display_[s];
}

std::optional<Symbol> Alphabet::index_of(char c) const {
  auto pos = display_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Symbol>(pos);
}

Label::Label(std::vector<Symbol> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(std::move(alphabet)) {
  if (symbols_.empty()) throw std::invalid_argument("label must be nonempty");
  for (Symbol s : symbols_) {
    if (s >= alphabet_.size()) throw std::invalid_argument("label symbol outside alphabet");
  }
}

Label Label::parse(const std::string& text, const Alphabet& alphabet) {
  if (text.empty()) throw std::invalid_argument("empty label");
  std::vector<Symbol> syms;
  if (text.find(',') != std::string::npos ||
      (!alphabet.has_display() && text.find_first_not_of("0123456789") == std::string::npos)) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty index in label '" + text + "'");
      int v = std::stoi(tok);
      if (v < 0 || v >= alphabet.size()) {
        throw std::invalid_argument("index " + tok + " outside alphabet");
      }
      syms.push_back(static_cast<Symbol>(v));
    }
  } else {
    for (char c : text) {
      auto idx = alphabet.index_of(c);
      if (!idx) throw std::invalid_argument(std::string("character '") + c + "' not in alphabet");
      syms.push_back(*idx);
    }
  }
  return Label(std::move(syms), alphabet);
}

std::string Label::str() const { return sequence_str(symbols_, alphabet_); }

bool Label::is_prefix_of(const Label& rhs) const {
  if (length() > rhs.length()) return false;
  return std::equal(symbols_.begin(), symbols_.end(), rhs.symbols_.begin());
}

LabelSet::LabelSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("label set must be nonempty");
  const Alphabet& alpha = labels_.front().alphabet();
  for (const Label& l : labels_) {
    if (!(l.alphabet() == alpha)) {
      throw std::invalid_argument("labels must share one alphabet");
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = 0; j < labels_.size(); ++j) {
      if (i == j) continue;
      if (labels_[i] == labels_[j]) {
        throw std::invalid_argument("duplicate label " + labels_[i].str());
      }
      if (labels_[i].is_prefix_of(labels_[j])) {
        throw std::invalid_argument("label " + labels_[i].str() + " is a prefix of " +
                                    labels_[j].str());
      }
    }
  }
}

LabelSet LabelSet::parse(const std::string& text, const Alphabet& alphabet) {
  std::vector<Label> labels;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) labels.push_back(Label::parse(tok, alphabet));
  }
  return LabelSet(std::move(labels));
}

int LabelSet::max_length() const {
  int m = 0;
  for (const Label& l : labels_) m = std::max(m, l.length());
  return m;
}

int LabelSet::min_length() const {
  int m = labels_.front().length();
  for (const Label& l : labels_) m = std::min(m, l.length());
  return m;
}

std::string LabelSet::str() const {
  std::string out;
  for (const Label& l : labels_) {
    if (!out.empty()) out += ",";
    out += l.str();
  }
  return out;
}

std::vector<Symbol> parse_sequence(const std::string& text, const Alphabet& alphabet) {
  return Label::parse(text, alphabet).symbols();
}

std::string sequence_str(const std::vector<Symbol>& seq, const Alphabet& alphabet) {
  if (alphabet.has_display()) {
    std::string out;
    out.reserve(seq.size());
    for (Symbol s : seq) out.push_back(alphabet.display_char(s));
    return out;
  }
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(static_cast<int>(seq[i]));
  }
  return out;
}

}  // namespace labelcap
