#include "metricgeo/detectors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "metricgeo/errors.hpp"
#include "metricgeo/random.hpp"

namespace metricgeo {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::uint64_t choose4(std::uint64_t n) {
  if (n < 4) return 0;
  // n(n-1)(n-2)(n-3)/24 without overflow for any realistic n.
  unsigned __int128 v = static_cast<unsigned __int128>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
  return v > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(v);
}

// Union-find over [0, n) with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PropertyReport validate_metric(const FiniteMetricSpace& space, double tolerance) {
  const auto pts = space.finite_indices();
  const std::size_t n = pts.size();
  PropertyReport r;
  r.property = "metric";
  r.tolerance = tolerance;
  double best = kNegInf;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        const Index x = pts[a], y = pts[b], z = pts[c];
        const double ratio = space(x, y) / (space(x, z) + space(z, y));
        ++r.enumerated;
        if (ratio > best) {
          best = ratio;
          r.witness = {x, z, y};
        }
      }
  if (best < 1.0 && n >= 2) {
    // The degenerate path [x, x, y] realizes exactly 1.
    best = 1.0;
    r.witness = {pts[0], pts[0], pts[1]};
  }
  r.constant = n >= 2 ? best : 1.0;
  r.holds = r.constant <= 1.0 + tolerance;
  return r;
}

PropertyReport ptolemy_constant(const FiniteMetricSpace& space, QuadrupleOptions options,
                                double tolerance) {
  const auto pts = space.finite_indices();
  const std::size_t n = pts.size();
  if (n < 4) throw InputError("Ptolemy constant needs at least 4 points, got " + std::to_string(n));

  PropertyReport r;

  r.property = "ptolemy";

  r.tolerance = tolerance;
  double best = kNegInf;
  auto visit = [&](Index i, Index j, Index k, Index l) {
    const double p1 = space(i, j) * space(k, l);
    const double p2 = space(i, k) * space(j, l);
    const double p3 = space(i, l) * space(j, k);
    const double r1 = p1 / (p2 + p3), r2 = p2 / (p1 + p3), r3 = p3 / (p1 + p2);
    if (r1 > best) { best = r1; r.witness = {i, j, k, l}; }
    if (r2 > best) { best = r2; r.witness = {i, k, j, l}; }
    if (r3 > best) { best = r3; r.witness = {i, l, j, k}; }
    ++r.enumerated;
  };

  const std::uint64_t total = choose4(n);
  if (total <= options.cap) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d) visit(pts[a], pts[b], pts[c], pts[d]);
  } else {
    r.capped = true;
    r.seed = options.seed;
    Rng rng(options.seed);
    std::array<std::size_t, 4> q{};
    for (std::uint64_t s = 0; s < options.cap; ++s) {
      for (std::size_t t = 0; t < 4; ++t) {
        bool fresh;
        do {
          q[t] = uniform_index(rng, n);
          fresh = std::find(q.begin(), q.begin() + static_cast<long>(t), q[t]) ==
                  q.begin() + static_cast<long>(t);
        } while (!fresh);
      }
      std::sort(q.begin(), q.end());
      visit(pts[q[0]], pts[q[1]], pts[q[2]], pts[q[3]]);
    }
  }
  r.constant = best;
  r.holds = best <= 1.0 + tolerance;
  return r;
}

PropertyReport ultrametric_check(const FiniteMetricSpace& space, double tolerance) {
  const auto pts = space.finite_indices();
  const std::size_t n = pts.size();
  PropertyReport r;
  r.property = "ultrametric";
  r.tolerance = tolerance;
  double best = kNegInf;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a || b == c) continue;
        const Index x = pts[a], y = pts[b], z = pts[c];
        const double ratio = space(x, z) / std::max(space(x, y), space(y, z));
        ++r.enumerated;
        if (ratio > best) {
          best = ratio;
          r.witness = {x, y, z};
        }
      }
  if (best < 1.0 && n >= 2) {
    best = 1.0;
    r.witness = {pts[0], pts[0], pts[1]};
  }
  r.constant = n >= 2 ? best : 1.0;
  r.holds = r.constant <= 1.0 + tolerance;
  return r;
}

PropertyReport uniform_perfectness_constant(const FiniteMetricSpace& space, double tolerance) {
  const auto pts = space.finite_indices();
  const std::size_t n = pts.size();
  if (n < 2)
    throw InputError("uniform perfectness needs at least 2 points, got " + std::to_string(n));

  struct Radius {
    double r;
    Index u, v;
  };
  std::vector<Radius> radii;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) radii.push_back({space(pts[a], pts[b]), pts[a], pts[b]});
  std::sort(radii.begin(), radii.end(), [](const Radius& p, const Radius& q) {
    return std::tie(p.r, p.u, p.v) < std::tie(q.r, q.u, q.v);
  });
  radii.erase(std::unique(radii.begin(), radii.end(),
                          [](const Radius& p, const Radius& q) { return p.r == q.r; }),
              radii.end());

  PropertyReport r;

  r.property = "uniform_perfectness";

  r.tolerance = tolerance;
  r.constant = 1.0;
  std::vector<std::pair<double, Index>> around;
  for (std::size_t a = 0; a < n; ++a) {
    const Index x = pts[a];
    around.clear();
    for (std::size_t b = 0; b < n; ++b)
      if (b != a) around.emplace_back(space(x, pts[b]), pts[b]);
    std::sort(around.begin(), around.end());
    const double nearest = around.front().first, farthest = around.back().first;
    for (const auto& rad : radii) {
      if (rad.r < nearest) continue;  // ball is {x}; carries no scale information
      if (rad.r >= farthest) break;   // ball is the whole space
      auto it = std::upper_bound(around.begin(), around.end(),
                                 std::make_pair(rad.r, std::numeric_limits<Index>::max()));
      const auto& inner = *std::prev(it);
      const double ratio = rad.r / inner.first;
      ++r.enumerated;
      if (ratio > r.constant) {
        r.constant = ratio;
        r.witness = {x, inner.second, rad.u, rad.v};
      }
    }
  }
  r.holds = std::isfinite(r.constant);
  return r;
}

PropertyReport uniform_disconnectedness(const FiniteMetricSpace& space, double threshold,
                                        double tolerance) {
  const auto pts = space.finite_indices();
  const auto n = static_cast<Index>(pts.size());
  if (n < 2) throw InputError("uniform disconnectedness needs at least 2 points");

  // Minimax (bottleneck) closure with next-hop matrix for chain recovery.
  Eigen::MatrixXd bottleneck(n, n);
  Eigen::MatrixX<Index> next(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      bottleneck(i, j) = space(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
      next(i, j) = j;
    }
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const double via = std::max(bottleneck(i, k), bottleneck(k, j));
        if (via < bottleneck(i, j)) {
          bottleneck(i, j) = via;
          next(i, j) = next(i, k);
        }
      }

  PropertyReport r;

  r.property = "uniform_disconnectedness";

  r.tolerance = tolerance;
  r.details["threshold"] = threshold;
  double best = std::numeric_limits<double>::infinity();
  Index bx = -1, by = -1, bz = -1;
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) {
      const double span =
          space(pts[static_cast<std::size_t>(x)], pts[static_cast<std::size_t>(y)]);
      for (Index z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const double ratio = std::max(bottleneck(x, z), bottleneck(z, y)) / span;
        ++r.enumerated;
        if (ratio < best) {
          best = ratio;
          bx = x;
          by = y;
          bz = z;
        }
      }
    }

  if (best < 1.0) {
    r.constant = best;
    auto walk = [&](Index from, Index to) {
      std::vector<Index> path{pts[static_cast<std::size_t>(from)]};
      while (from != to) {
        from = next(from, to);
        path.push_back(pts[static_cast<std::size_t>(from)]);
      }
      return path;
    };
    r.witness = walk(bx, bz);
    const auto tail = walk(bz, by);
    r.witness.insert(r.witness.end(), tail.begin() + 1, tail.end());
  } else {
    r.constant = 1.0;
  }
  r.holds = r.constant >= threshold;
  return r;
}

std::vector<std::vector<Index>> delta_components(const FiniteMetricSpace& space, double delta) {
  if (!(delta > 0.0)) throw InputError("delta must be positive");
  const auto pts = space.finite_indices();
  const std::size_t n = pts.size();
  DisjointSets sets(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (space(pts[a], pts[b]) < delta) sets.unite(a, b);
  std::vector<std::vector<Index>> groups(n);
  for (std::size_t a = 0; a < n; ++a) groups[sets.find(a)].push_back(pts[a]);
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return groups;
}

FiniteMetricSpace bourdon_visual(const FiniteMetricSpace& space, Index o) {
  if (o < 0 || o >= space.size()) throw InputError("base point index out of range");
  if (space.has_ideal_infinity())
    throw InputError("Gromov products are undefined at an ideal point");
  auto t = tabulate(space.size(), [&](Index x, Index y) {
    const double product = 0.5 * (space(x, o) + space(y, o) - space(x, y));
    return std::exp(-product);
  });
  nlohmann::json meta = space.metadata();
  meta["history"].push_back({{"transform", "bourdon_visual"}, {"base", space.label(o)}});
  return FiniteMetricSpace(space.labels(), std::move(t), std::nullopt, std::move(meta));
}

}  // namespace metricgeo
