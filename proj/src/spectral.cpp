#include "labelcap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace labelcap {

double perron_root_by_determinant(const Eigen::MatrixXd& b, double tol) {
  const auto n = b.rows();
  double hi = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) hi = std::max(hi, b.row(i).sum());
  hi += 1.0;
  auto det_at = [&](double x) {
    Eigen::MatrixXd m = x * Eigen::MatrixXd::Identity(n, n) - b;
    return m.partialPivLu().determinant();
  };
  constexpr int kCells = 512;
  double upper = hi;
  double s_upper = det_at(upper);
  double lower = upper;
  bool found = false;
  for (int cell = 1; cell <= kCells; ++cell) {
    lower = hi - hi * cell / kCells;
    double s_lower = det_at(lower);
    if ((s_lower <= 0.0) != (s_upper <= 0.0)) {
      found = true;
      break;
    }
    upper = lower;
    s_upper = s_lower;
  }
  if (!found) throw std::runtime_error("no det sign change for Perron bisection");
  bool upper_pos = det_at(upper) > 0.0;
  while (upper - lower > tol) {
    double mid = lower + (upper - lower) / 2;
    if (mid <= lower || mid >= upper) break;
    if ((det_at(mid) > 0.0) == upper_pos) {
      upper = mid;
    } else {
      lower = mid;
    }
  }
  return lower + (upper - lower) / 2;
}

namespace {

double perron_irreducible(const Eigen::MatrixXd& b, double tol) {
  const auto n = b.rows();
  // Power iteration on B + I: the shift separates the Perron root from every
  // other eigenvalue in modulus, so the Collatz-Wielandt bounds close.
  Eigen::MatrixXd shifted = b + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  const int max_iters = 200 * static_cast<int>(n) + 20000;
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXd w = shifted * v;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      double ratio = w(i) / v(i);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo <= tol) return (lo + hi) / 2 - 1.0;
    v = w / w.maxCoeff();
  }
  return perron_root_by_determinant(b, tol);
}

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const Eigen::MatrixXi& adjacency) {
  const int n = static_cast<int>(adjacency.rows());
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (adjacency(u, v) != 0) succ[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  // Iterative Tarjan.
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;
  struct Frame {
    int vertex;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> work{{root, 0}};
    while (!work.empty()) {
      Frame& top = work.back();
      int v = top.vertex;
      if (top.child == 0) {
        index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
        stack.push_back(v);
        on_stack[static_cast<std::size_t>(v)] = true;
      }
      bool descended = false;
      auto& edges = succ[static_cast<std::size_t>(v)];
      while (top.child < edges.size()) {
        int w = edges[top.child++];
        if (index[static_cast<std::size_t>(w)] == -1) {
          work.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
      }
      if (descended) continue;
      if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
        std::vector<int> comp;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp.push_back(w);
          if (w == v) break;
        }
        components.push_back(std::move(comp));
      }
      work.pop_back();
      if (!work.empty()) {
        int parent = work.back().vertex;
        low[static_cast<std::size_t>(parent)] =
            std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
      }
    }
  }
  return components;
}

double spectral_radius(const Eigen::MatrixXi& adjacency, double tol) {
  if (adjacency.rows() != adjacency.cols()) {
    throw std::invalid_argument("adjacency matrix must be square");
  }
  if (adjacency.rows() == 0) return 0.0;
  if (adjacency.minCoeff() < 0) {
    throw std::invalid_argument("adjacency matrix must be nonnegative");
  }
  double best = 0.0;
  for (const auto& comp : strongly_connected_components(adjacency)) {
    if (comp.size() == 1) {
      // Trivial component: its only possible cycle is the self-loop.
      best = std::max(best, static_cast<double>(adjacency(comp[0], comp[0])));
      continue;
    }
    Eigen::MatrixXd sub(comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = 0; j < comp.size(); ++j) {
        sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            adjacency(comp[i], comp[j]);
      }
    }
    best = std::max(best, perron_irreducible(sub, tol));
  }
  return best;
}

}  // namespace labelcap
