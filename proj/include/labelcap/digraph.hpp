#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "labelcap/alphabet.hpp"

namespace labelcap {

// Simple directed graph with loops allowed and no multi-edges.
class DiGraph {
 public:
  explicit DiGraph(int vertex_count);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);  // rejects duplicates and out-of-range endpoints
  std::vector<std::pair<int, int>> edges() const;
  const std::vector<std::vector<int>>& successors() const { return succ_; }

  // Format: first line the vertex count, then one "u v" pair per line.
  static DiGraph read(std::istream& in);
  std::string to_text() const;
  std::string to_dot() const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> succ_;
};

// Whether between every ordered vertex pair there is at most one walk of
// each length. Decided on the product graph over vertex pairs: uniqueness
// fails exactly when some vertex has two distinct out-edges whose target
// pair can reach a diagonal pair.
bool is_path_unique(const DiGraph& g);

// Maximum edge count of a path-unique digraph on n vertices:
// (n+1)^2/4 for odd n, n(n+2)/4 for even n.
std::int64_t h_max(int n);

// A path-unique digraph attaining h_max(n): loops on a source block X of
// size ceil((n+1)/2) for odd n (n/2 for even n) plus every edge from X to
// the remaining vertices.
DiGraph extremal_path_unique_graph(int n);

// Minimal number of length-l labels achieving capacity log2(q);
// l = 1 gives q - 1, l = 2 gives q^2 - h_max(q) (0 when q = 1).
// Lengths >= 3 are refused.
std::int64_t minimal_label_count(int l, int q);

// All length-2 labels xy with (x, y) NOT an edge of g; the label set whose
// capacity is log2(q) exactly when g is path-unique. g must have q vertices
// and may not be complete (a label set cannot be empty).
LabelSet complement_label_set(const DiGraph& g, const Alphabet& alphabet);

}  // namespace labelcap
