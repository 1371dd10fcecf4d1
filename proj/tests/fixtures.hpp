#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "metricgeo/finite_space.hpp"
#include "metricgeo/random.hpp"

namespace fixtures {

using metricgeo::DistanceTable;
using metricgeo::FiniteMetricSpace;
using metricgeo::Index;

inline FiniteMetricSpace line(const std::vector<double>& xs) {
  Eigen::MatrixXd p(static_cast<Index>(xs.size()), 1);
  for (std::size_t i = 0; i < xs.size(); ++i) p(static_cast<Index>(i), 0) = xs[i];
  return FiniteMetricSpace::from_table(metricgeo::euclidean_table(p));
}

inline Eigen::MatrixXd random_points(Index n, Index dim, std::uint64_t seed, double box = 1.0) {
  metricgeo::Rng rng(seed);
  Eigen::MatrixXd p(n, dim);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < dim; ++k) p(i, k) = metricgeo::uniform_real(rng, -box, box);
  return p;
}

/// Integer lattice points, so distances and their products stay exact.
inline Eigen::MatrixXd integer_points(Index n, Index dim, std::uint64_t seed, int box = 50) {
  metricgeo::Rng rng(seed);
  Eigen::MatrixXd p(n, dim);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < dim; ++k)
      p(i, k) = static_cast<double>(metricgeo::uniform_index(rng, 2 * box + 1)) - box;
  return p;
}

inline FiniteMetricSpace plane(Index n, std::uint64_t seed) {
  return FiniteMetricSpace::from_table(metricgeo::euclidean_table(random_points(n, 2, seed)));
}

/// Path metric of the 4-cycle a-b-c-d-a.
inline FiniteMetricSpace square_cycle() {
  DistanceTable t(4, 4);
  t << 0, 1, 2, 1,
       1, 0, 1, 2,
       2, 1, 0, 1,
       1, 2, 1, 0;
  return FiniteMetricSpace({"a", "b", "c", "d"}, t);
}

/// Chordal distances of the regular n-gon on the unit circle, in order.
inline FiniteMetricSpace polygon(int n) {
  return FiniteMetricSpace::from_table(metricgeo::tabulate(n, [&](Index i, Index j) {
    return 2.0 * std::abs(std::sin(std::numbers::pi * static_cast<double>(j - i) / n));
  }));
}

/// Random weighted tree on `leaves` leaves with integer edge weights; returns
/// the leaf-to-leaf path metric.
inline FiniteMetricSpace random_tree(int leaves, std::uint64_t seed) {
  metricgeo::Rng rng(seed);
  const int nodes = 2 * leaves - 1;
  std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
  std::vector<double> weight(static_cast<std::size_t>(nodes), 0);
  for (int v = 1; v < nodes; ++v) {
    parent[v] = static_cast<int>(metricgeo::uniform_index(rng, static_cast<std::size_t>(v)));
    weight[v] = 1.0 + static_cast<double>(metricgeo::uniform_index(rng, 9));
  }
  std::vector<double> depth(static_cast<std::size_t>(nodes), 0);
  for (int v = 1; v < nodes; ++v) depth[v] = depth[parent[v]] + weight[v];
  auto lca = [&](int a, int b) {
    std::vector<int> up;
    for (int v = a; v >= 0; v = parent[v]) up.push_back(v);
    for (int v = b; v >= 0; v = parent[v])
      if (std::find(up.begin(), up.end(), v) != up.end()) return v;
    return 0;
  };
  const int first = nodes - leaves;
  return FiniteMetricSpace::from_table(metricgeo::tabulate(leaves, [&](Index i, Index j) {
    const int a = first + static_cast<int>(i), b = first + static_cast<int>(j);
    return depth[a] + depth[b] - 2 * depth[lca(a, b)];
  }));
}

}  // namespace fixtures
