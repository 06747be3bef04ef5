#include "labelcap/digraph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "labelcap/errors.hpp"

namespace labelcap {

DiGraph::DiGraph(int vertex_count) : n_(vertex_count), succ_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
}

int DiGraph::edge_count() const {
  int total = 0;
  for (const auto& adj : succ_) total += static_cast<int>(adj.size());
  return total;
}

bool DiGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& adj = succ_[static_cast<std::size_t>(u)];
  return std::find(adj.begin(), adj.end(), v) != adj.end();
}

void DiGraph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  succ_[static_cast<std::size_t>(u)].push_back(v);
}

std::vector<std::pair<int, int>> DiGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : succ_[static_cast<std::size_t>(u)]) out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiGraph DiGraph::read(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("graph file: missing vertex count");
  DiGraph g(n);
  int u = 0;
  int v = 0;
  while (in >> u >> v) g.add_edge(u, v);
  return g;
}

std::string DiGraph::to_text() const {
  std::ostringstream os;
  os << n_ << "\n";
  for (auto [u, v] : edges()) os << u << " " << v << "\n";
  return os.str();
}

std::string DiGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph g {\n";
  for (int u = 0; u < n_; ++u) os << "  v" << u << ";\n";
  for (auto [u, v] : edges()) os << "  v" << u << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

bool is_path_unique(const DiGraph& g) {
  const int n = g.vertex_count();
  // Two distinct equal-length walks u -> v share a longest common prefix;
  // right after it they sit at one vertex a and leave along two distinct
  // edges a -> x, a -> y. Uniqueness therefore fails exactly when some such
  // split pair {x, y} reaches a diagonal pair (v, v) in the product graph.
  // Backward reachability from the diagonal over pair states:
  std::vector<char> reaches_diag(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::deque<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    reaches_diag[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = 1;
    queue.emplace_back(v, v);
  }
  // Predecessor lists once, to keep the BFS linear in edges^2 / n.
  std::vector<std::vector<int>> pred(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v : g.successors()[static_cast<std::size_t>(u)]) {
      pred[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (int pa : pred[static_cast<std::size_t>(a)]) {
      for (int pb : pred[static_cast<std::size_t>(b)]) {
        auto idx = static_cast<std::size_t>(pa) * static_cast<std::size_t>(n) + static_cast<std::size_t>(pb);
        if (!reaches_diag[idx]) {
          reaches_diag[idx] = 1;
          queue.emplace_back(pa, pb);
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    const auto& adj = g.successors()[static_cast<std::size_t>(a)];
    for (std::size_t i = 0; i < adj.size(); ++i) {
      for (std::size_t j = i + 1; j < adj.size(); ++j) {
        auto idx = static_cast<std::size_t>(adj[i]) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(adj[j]);
        if (reaches_diag[idx]) return false;
      }
    }
  }
  return true;
}

std::int64_t h_max(int n) {
  if (n < 1) throw std::invalid_argument("h_max requires n >= 1");
  std::int64_t m = n;
  return n % 2 == 1 ? (m + 1) * (m + 1) / 4 : m * (m + 2) / 4;
}

DiGraph extremal_path_unique_graph(int n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  // Block size a maximizes a(n - a + 1); ties at odd n resolve upward for
  // determinism.
  const int a = n % 2 == 1 ? (n + 1) / 2 : n / 2;
  DiGraph g(n);
  for (int u = 0; u < a; ++u) g.add_edge(u, u);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

std::int64_t minimal_label_count(int l, int q) {
  if (q < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (l == 1) return q - 1;
  if (l == 2) {
    if (q == 1) return 0;
    return static_cast<std::int64_t>(q) * q - h_max(q);
  }
  throw UnsupportedScope("minimal label count is known for lengths 1 and 2 only");
}

LabelSet complement_label_set(const DiGraph& g, const Alphabet& alphabet) {
  if (g.vertex_count() != alphabet.size()) {
    throw std::invalid_argument("graph order must equal the alphabet size");
  }
  std::vector<Label> labels;
  for (int x = 0; x < alphabet.size(); ++x) {
    for (int y = 0; y < alphabet.size(); ++y) {
      if (!g.has_edge(x, y)) {
        labels.push_back(Label({static_cast<Symbol>(x), static_cast<Symbol>(y)}, alphabet));
      }
    }
  }
  if (labels.empty()) {
    throw std::invalid_argument("complete graph leaves no labels; a label set must be nonempty");
  }
  return LabelSet(std::move(labels));
}

}  // namespace labelcap
