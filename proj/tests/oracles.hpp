#pragma once

// Brute-force reference implementations. Each one follows the textbook
// definition directly and shares no code with the library beyond table access.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <vector>

#include "metricgeo/finite_space.hpp"

namespace oracle {

using metricgeo::DistanceTable;
using metricgeo::Index;

inline double quasi_triangle(const DistanceTable& d) {
  double best = 0;
  const Index n = d.rows();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        best = std::max(best, d(x, y) / (d(x, z) + d(z, y)));
      }
  return best;
}

/// All 24 orderings of every 4-subset.
inline double ptolemy(const DistanceTable& d) {
  double best = 0;
  const Index n = d.rows();
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      for (Index c = b + 1; c < n; ++c)
        for (Index e = c + 1; e < n; ++e) {
          std::vector<Index> q{a, b, c, e};
          do {
            const double v = d(q[0], q[1]) * d(q[2], q[3]) /
                             (d(q[0], q[2]) * d(q[1], q[3]) + d(q[0], q[3]) * d(q[1], q[2]));
            best = std::max(best, v);
          } while (std::next_permutation(q.begin(), q.end()));
        }
  return best;
}

inline double ultrametric(const DistanceTable& d) {
  double best = 0;
  const Index n = d.rows();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        best = std::max(best, d(x, z) / std::max(d(x, y), d(y, z)));
      }
  return best;
}

/// Smallest candidate C (1 or a ratio of achieved distances) such that every
/// proper closed ball B(x;r), r achieved and at least the nearest-neighbour
/// distance of x, contains a point y with r/C <= d(x,y), y != x.
inline double perfectness(const DistanceTable& d) {
  const Index n = d.rows();
  std::set<double> radii;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) radii.insert(d(i, j));
  std::set<double> candidates{1.0};
  for (double r : radii)
    for (double s : radii)
      if (r >= s) candidates.insert(r / s);
  for (double C : candidates) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) {
      double nn = std::numeric_limits<double>::infinity();
      for (Index y = 0; y < n; ++y)
        if (y != x) nn = std::min(nn, d(x, y));
      for (double r : radii) {
        if (r < nn) continue;
        Index inside = 0;
        bool annulus = false;
        for (Index y = 0; y < n; ++y) {
          if (d(x, y) > r) continue;
          ++inside;
          if (y != x && d(x, y) * C >= r) annulus = true;
        }
        if (inside == n) continue;
        if (!annulus) { ok = false; break; }
      }
    }
    if (ok) return C;
  }
  return std::numeric_limits<double>::infinity();
}

/// Smallest alpha for which some pair x != y is joined by a chain of at
/// least two steps, each of length <= alpha d(x,y); capped at 1. Uses a BFS
/// per pair and candidate alpha, leaving out the direct edge.
inline double disconnectedness(const DistanceTable& d) {
  const Index n = d.rows();
  double best = 1.0;
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) {
      std::set<double> cands;
      for (Index u = 0; u < n; ++u)
        for (Index v = u + 1; v < n; ++v) cands.insert(d(u, v) / d(x, y));
      for (double a : cands) {
        if (a >= best) break;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::queue<Index> q;
        q.push(x);
        seen[x] = 1;
        while (!q.empty()) {
          const Index u = q.front();
          q.pop();
          for (Index v = 0; v < n; ++v) {
            if (seen[v] || v == u) continue;
            if ((u == x && v == y) || (u == y && v == x)) continue;
            if (d(u, v) <= a * d(x, y)) seen[v] = 1, q.push(v);
          }
        }
        if (seen[y]) { best = a; break; }
      }
    }
  return best;
}

/// Dijkstra from every source on the complete graph.
inline DistanceTable shortest_paths(const DistanceTable& w) {
  const Index n = w.rows();
  DistanceTable out(n, n);
  for (Index s = 0; s < n; ++s) {
    std::vector<double> dist(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    dist[s] = 0;
    for (Index it = 0; it < n; ++it) {
      Index u = -1;
      for (Index v = 0; v < n; ++v)
        if (!done[v] && (u < 0 || dist[v] < dist[u])) u = v;
      done[u] = 1;
      for (Index v = 0; v < n; ++v)
        if (!done[v]) dist[v] = std::min(dist[v], dist[u] + w(u, v));
    }
    for (Index v = 0; v < n; ++v) out(s, v) = dist[v];
  }
  return out;
}

inline std::size_t component_count(const DistanceTable& d, double delta) {
  const Index n = d.rows();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::size_t count = 0;
  for (Index s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Index> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const Index u = stack.back();
      stack.pop_back();
      for (Index v = 0; v < n; ++v)
        if (!seen[v] && d(u, v) < delta) seen[v] = 1, stack.push_back(v);
    }
  }
  return count;
}

/// Dense digit array over [lo, hi]; indices outside read as 1.
struct Digits {
  int lo, hi;
  std::vector<int> d;
  int at(int i) const { return i < lo || i > hi ? 1 : d[static_cast<std::size_t>(i - lo)]; }
};

/// First differing index minus one, scanning the union of both ranges.
inline int agreement(const Digits& x, const Digits& y) {
  const int lo = std::min(x.lo, y.lo), hi = std::max(x.hi, y.hi);
  for (int i = lo; i <= hi; ++i)
    if (x.at(i) != y.at(i)) return i - 1;
  return std::numeric_limits<int>::max();
}

}  // namespace oracle
