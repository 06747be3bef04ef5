#include "labelcap/labeling.hpp"

#include <cassert>
#include <queue>
#include <stdexcept>

namespace labelcap {

MultiPatternMatcher::MultiPatternMatcher(const LabelSet& labels)
    : q_(labels.alphabet().size()) {
  auto node_slot = [&](int node, Symbol s) { return node * q_ + s; };
  next_.assign(static_cast<std::size_t>(q_), -1);
  match_.assign(1, 0);
  std::vector<std::int32_t> fail(1, 0);
  lengths_.assign(static_cast<std::size_t>(labels.size()) + 1, 0);

  for (int j = 0; j < labels.size(); ++j) {
    const Label& lab = labels[j];
    lengths_[static_cast<std::size_t>(j) + 1] = lab.length();
    int node = 0;
    for (Symbol s : lab.symbols()) {
      if (next_[static_cast<std::size_t>(node_slot(node, s))] < 0) {
        int fresh = node_count();
        next_[static_cast<std::size_t>(node_slot(node, s))] = fresh;
        next_.resize(next_.size() + static_cast<std::size_t>(q_), -1);
        match_.push_back(0);
        fail.push_back(0);
      }
      node = next_[static_cast<std::size_t>(node_slot(node, s))];
    }
    match_[static_cast<std::size_t>(node)] = j + 1;
  }

  // BFS: fail links, then flatten goto into a full transition function.
  std::queue<int> bfs;
  for (Symbol s = 0; s < q_; ++s) {
    auto& slot = next_[static_cast<std::size_t>(node_slot(0, s))];
    if (slot < 0) {
      slot = 0;
    } else {
      fail[static_cast<std::size_t>(slot)] = 0;
      bfs.push(slot);
    }
  }
  suffix_out_.assign(match_.size(), 0);
  while (!bfs.empty()) {
    int node = bfs.front();
    bfs.pop();
    int f = fail[static_cast<std::size_t>(node)];
    suffix_out_[static_cast<std::size_t>(node)] =
        match_[static_cast<std::size_t>(f)] != 0 ? f : suffix_out_[static_cast<std::size_t>(f)];
    for (Symbol s = 0; s < q_; ++s) {
      auto& slot = next_[static_cast<std::size_t>(node_slot(node, s))];
      int via_fail = next_[static_cast<std::size_t>(node_slot(f, s))];
      if (slot < 0) {
        slot = via_fail;
      } else {
        fail[static_cast<std::size_t>(slot)] = via_fail;
        bfs.push(slot);
      }
    }
  }
}

std::vector<int> MultiPatternMatcher::starts(std::span<const Symbol> x) const {
  std::vector<int> c(x.size(), 0);
  int node = 0;
  for (std::size_t end = 0; end < x.size(); ++end) {
    node = next_[static_cast<std::size_t>(node * q_ + x[end])];
    for (int m = node; m != 0;
         m = suffix_out_[static_cast<std::size_t>(m)]) {
      int j = match_[static_cast<std::size_t>(m)];
      if (j == 0) continue;
      std::size_t start = end + 1 - static_cast<std::size_t>(lengths_[static_cast<std::size_t>(j)]);
      assert(c[start] == 0);  // prefix-free sets admit one start per position
      c[start] = j;
    }
  }
  return c;
}

std::vector<int> labeling_sequence(std::span<const Symbol> x, const LabelSet& labels) {
  if (x.empty()) throw std::invalid_argument("source sequence must be nonempty");
  return MultiPatternMatcher(labels).starts(x);
}

std::vector<int> complete_labeling_sequence(std::span<const Symbol> x, const Label& label) {
  std::vector<int> starts = labeling_sequence(x, LabelSet({label}));
  std::vector<int> covered(x.size(), 0);
  const int l = label.length();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (starts[i] == 0) continue;
    for (int d = 0; d < l; ++d) covered[i + static_cast<std::size_t>(d)] = 1;
  }
  return covered;
}

}  // namespace labelcap
