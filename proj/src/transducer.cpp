#include "labelcap/transducer.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace labelcap {

namespace {

// Window states are indexed level by level: all windows of length 0, then
// length 1 in lexicographic order, and so on up to length lmax-1.
std::vector<std::uint64_t> level_offsets(int q, int lmax) {
  std::vector<std::uint64_t> off(static_cast<std::size_t>(lmax), 0);
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (int len = 0; len < lmax; ++len) {
    off[static_cast<std::size_t>(len)] = total;
    total += level;
    level *= static_cast<std::uint64_t>(q);
  }
  return off;
}

int window_index(const std::vector<Symbol>& w, int q,
                 const std::vector<std::uint64_t>& offsets) {
  std::uint64_t value = 0;
  for (Symbol s : w) value = value * static_cast<std::uint64_t>(q) + s;
  return static_cast<int>(offsets[w.size()] + value);
}

}  // namespace

std::vector<Symbol> OutputTransducer::window_of(int state) const {
  auto offsets = level_offsets(q, lmax == 0 ? 1 : lmax);
  int len = 0;
  while (len + 1 < static_cast<int>(offsets.size()) &&
         static_cast<std::uint64_t>(state) >= offsets[static_cast<std::size_t>(len) + 1]) {
    ++len;
  }
  std::uint64_t value = static_cast<std::uint64_t>(state) - offsets[static_cast<std::size_t>(len)];
  std::vector<Symbol> w(static_cast<std::size_t>(len), 0);
  for (int i = len - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<Symbol>(value % static_cast<std::uint64_t>(q));
    value /= static_cast<std::uint64_t>(q);
  }
  return w;
}

std::vector<int> OutputTransducer::full_window_states() const {
  auto offsets = level_offsets(q, lmax == 0 ? 1 : lmax);
  std::vector<int> states;
  for (int s = static_cast<int>(offsets.back()); s < num_states; ++s) states.push_back(s);
  return states;
}

std::vector<int> OutputTransducer::run(const std::vector<Symbol>& x) const {
  std::vector<int> emitted;
  emitted.reserve(x.size());
  int state = initial;
  for (std::size_t i = x.size(); i-- > 0;) {
    emitted.push_back(output(state, x[i]));
    state = transition(state, x[i]);
  }
  std::reverse(emitted.begin(), emitted.end());
  return emitted;
}

OutputTransducer build_reverse_transducer(const LabelSet& labels) {
  OutputTransducer t;
  t.q = labels.alphabet().size();
  t.k = labels.size();
  t.lmax = labels.max_length();
  auto offsets = level_offsets(t.q, t.lmax);
  std::uint64_t count = offsets.back();
  // One more level on top of the last offset.
  std::uint64_t top = 1;
  for (int i = 0; i < t.lmax - 1; ++i) top *= static_cast<std::uint64_t>(t.q);
  count += top;
  if (count > std::uint64_t{1} << 26) {
    throw std::invalid_argument("transducer state space too large (reduce q or label length)");
  }
  t.num_states = static_cast<int>(count);
  t.initial = 0;
  t.next.assign(static_cast<std::size_t>(t.num_states) * static_cast<std::size_t>(t.q), 0);
  t.out.assign(static_cast<std::size_t>(t.num_states) * static_cast<std::size_t>(t.q), 0);

  std::vector<Symbol> window;  // current state's window, most recent first
  for (int state = 0; state < t.num_states; ++state) {
    window = t.window_of(state);
    for (Symbol a = 0; a < t.q; ++a) {
      // Emission: prefix-freeness makes at most one label match.
      int emit = 0;
      for (int j = 0; j < t.k; ++j) {
        const Label& lab = labels[j];
        const int l = lab.length();
        if (static_cast<int>(window.size()) < l - 1) continue;
        bool match = lab[0] == a;
        for (int i = 1; i < l && match; ++i) {
          match = lab[i] == window[static_cast<std::size_t>(i - 1)];
        }
        if (match) {
          assert(emit == 0);
          emit = j + 1;
        }
      }
      // New window: a prepended, truncated to lmax-1 symbols.
      std::vector<Symbol> next_window;
      if (t.lmax > 1) {
        next_window.reserve(static_cast<std::size_t>(t.lmax) - 1);
        next_window.push_back(a);
        for (std::size_t i = 0;
             next_window.size() < static_cast<std::size_t>(t.lmax) - 1 && i < window.size(); ++i) {
          next_window.push_back(window[i]);
        }
      }
      std::size_t slot = static_cast<std::size_t>(state) * static_cast<std::size_t>(t.q) + a;
      t.next[slot] = window_index(next_window, t.q, offsets);
      t.out[slot] = emit;
    }
  }
  return t;
}

}  // namespace labelcap
