#pragma once

#include <cstdint>
#include <vector>

#include "labelcap/alphabet.hpp"

namespace labelcap {

// Windowed transducer that realizes the labeling map when the source is
// processed right to left. A state is the right context of the current
// position: the up-to-(lmax-1) most recently read symbols, most recent
// first. Reading symbol a in context w emits label index j exactly when
// a followed by the first |label_j|-1 context symbols equals label j and
// the context holds at least |label_j|-1 symbols; the length requirement
// encodes the boundary condition that an occurrence must fit inside the
// source. The emitted stream, reversed, is the labeling sequence.
//
// Deterministic in input: one transition per (state, symbol). State count
// is sum over i in [0, lmax-1] of q^i; the initial state is the empty
// window.
struct OutputTransducer {
  int q = 0;
  int k = 0;     // number of labels; outputs range over 0..k
  int lmax = 0;  // maximum label length
  int num_states = 0;
  int initial = 0;
  std::vector<std::int32_t> next;  // state * q + symbol -> state
  std::vector<std::int32_t> out;   // state * q + symbol -> emitted index

  int transition(int state, Symbol a) const {
    return next[static_cast<std::size_t>(state) * static_cast<std::size_t>(q) + a];
  }
  int output(int state, Symbol a) const {
    return out[static_cast<std::size_t>(state) * static_cast<std::size_t>(q) + a];
  }

  // The window of a state, most recent symbol first.
  std::vector<Symbol> window_of(int state) const;
  // States whose windows have the full lmax-1 length (interior positions).
  std::vector<int> full_window_states() const;

  // Runs the transducer over x right to left and returns the labeling
  // sequence (emission order reversed back to left-to-right).
  std::vector<int> run(const std::vector<Symbol>& x) const;
};

OutputTransducer build_reverse_transducer(const LabelSet& labels);

}  // namespace labelcap
