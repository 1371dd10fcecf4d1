#include "metricgeo/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace metricgeo {

namespace {

struct Layout {
  std::vector<Index> kept;  // source indices of the finite output points
  std::vector<std::string> labels;
  Index infinity = 0;       // output index of ∞
};

// Finite points of `space` other than `skip`, followed by ∞.
Layout layout_without(const FiniteMetricSpace& space, std::optional<Index> skip) {
  Layout l;
  for (Index i : space.finite_indices())
    if (!skip || i != *skip) {
      l.kept.push_back(i);
      l.labels.push_back(space.label(i));
    }
  l.infinity = static_cast<Index>(l.kept.size());
  l.labels.push_back(space.has_ideal_infinity() ? space.label(*space.infinity()) : kInfinityLabel);
  return l;
}

nlohmann::json with_history(const FiniteMetricSpace& space, nlohmann::json step) {
  nlohmann::json meta = space.metadata();
  if (!meta.is_object()) meta = nlohmann::json::object();
  meta["history"].push_back(std::move(step));
  return meta;
}

void check_base(const FiniteMetricSpace& space, Index p) {
  if (p < 0 || p >= space.size()) throw InputError("base point index out of range");
  if (space.has_ideal_infinity() && p == *space.infinity())
    throw InputError("base point must be a finite point");
}

}  // namespace

PointedQuasiSpace invert_quasi(const FiniteMetricSpace& space, Index p) {
  check_base(space, p);
  if (space.finite_indices().size() < 2) throw InputError("inversion needs at least 2 points");
  const auto l = layout_without(space, p);
  const auto m = static_cast<Index>(l.labels.size());
  DistanceTable t = DistanceTable::Zero(m, m);
  for (Index a = 0; a < l.infinity; ++a) {
    const Index x = l.kept[static_cast<std::size_t>(a)];
    for (Index b = a + 1; b < l.infinity; ++b) {
      const Index y = l.kept[static_cast<std::size_t>(b)];
      t(a, b) = t(b, a) = space(x, y) / (space(x, p) * space(y, p));
    }
    t(a, l.infinity) = t(l.infinity, a) = 1.0 / space(x, p);
  }
  auto meta = with_history(space, {{"transform", "invert"}, {"base", space.label(p)}});
  return {FiniteMetricSpace(l.labels, std::move(t), l.infinity, std::move(meta)), space.label(p),
          QuasiKind::inverted};
}

PointedQuasiSpace sphericalize_quasi(const FiniteMetricSpace& space, Index p) {
  check_base(space, p);
  const auto l = layout_without(space, std::nullopt);
  const auto m = static_cast<Index>(l.labels.size());
  DistanceTable t = DistanceTable::Zero(m, m);
  for (Index a = 0; a < l.infinity; ++a) {
    const Index x = l.kept[static_cast<std::size_t>(a)];
    for (Index b = a + 1; b < l.infinity; ++b) {
      const Index y = l.kept[static_cast<std::size_t>(b)];
      t(a, b) = t(b, a) = space(x, y) / ((1.0 + space(x, p)) * (1.0 + space(y, p)));
    }
    t(a, l.infinity) = t(l.infinity, a) = 1.0 / (1.0 + space(x, p));
  }
  auto meta = with_history(space, {{"transform", "sphericalize"}, {"base", space.label(p)}});
  return {FiniteMetricSpace(l.labels, std::move(t), l.infinity, std::move(meta)), space.label(p),
          QuasiKind::sphericalized};
}

FiniteMetricSpace chain_metrize(const FiniteMetricSpace& quasi) {
  if (quasi.has_ideal_infinity())
    throw InputError("chain metrization needs finite distances to every point");
  DistanceTable d = quasi.table();
  const Index n = d.rows();
  // Floyd-Warshall, then full relaxation sweeps until a fixed point: in
  // floating point a single pass can leave last-ulp triangle violations.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index k = 0; k < n; ++k)
      for (Index i = 0; i < n; ++i) {
        if (i == k) continue;
        const double dik = d(i, k);
        for (Index j = i + 1; j < n; ++j) {
          const double via = dik + d(k, j);
          if (via < d(i, j)) {
            d(i, j) = d(j, i) = via;
            changed = true;
          }
        }
      }
  }
  auto meta = with_history(quasi, {{"transform", "flatten"}});
  return FiniteMetricSpace(quasi.labels(), std::move(d), quasi.infinity(), std::move(meta));
}

FiniteMetricSpace snowflake(const FiniteMetricSpace& space, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("snowflake exponent must lie in (0, 1]");
  DistanceTable t = space.table();
  if (alpha != 1.0) t = t.array().pow(alpha).matrix();
  auto meta = with_history(space, {{"transform", "snowflake"}, {"alpha", alpha}});
  return FiniteMetricSpace(space.labels(), std::move(t), space.infinity(), std::move(meta));
}

PropertyReport invertibility_profile(const FiniteMetricSpace& space, Index p,
                                     const PointCorrespondence& map, double tolerance) {
  check_base(space, p);
  std::vector<Index> rest;
  for (Index i : space.finite_indices())
    if (i != p) rest.push_back(i);
  const auto& src = map.source();
  bool same = src.size() == static_cast<Index>(rest.size());
  for (std::size_t a = 0; same && a < rest.size(); ++a)
    same = src.label(static_cast<Index>(a)) == space.label(rest[a]);
  if (!same) throw InputError("map is not defined on X minus the base point");

  PropertyReport r;

  r.property = "invertibility";

  r.tolerance = tolerance;
  r.constant = 1.0;
  const auto& dst = map.target();
  for (std::size_t a = 0; a < rest.size(); ++a)
    for (std::size_t b = a + 1; b < rest.size(); ++b) {
      const Index x = rest[a], y = rest[b];
      const double inverted = space(x, y) / (space(x, p) * space(y, p));
      const double image =
          dst(map.image(static_cast<Index>(a)), map.image(static_cast<Index>(b)));
      const double ratio = image / inverted;
      const double spread = std::max(ratio, 1.0 / ratio);
      ++r.enumerated;
      if (spread > r.constant) {
        r.constant = spread;
        r.witness = {x, y};
      }
    }
  r.holds = r.constant <= 1.0 + tolerance;
  return r;
}

DilationFit quasi_dilation_fit(const PointCorrespondence& map, Index q) {
  const auto& src = map.source();
  const auto& dst = map.target();
  if (q < 0 || q >= src.size()) throw InputError("fixed point index out of range");
  if (dst.label(map.image(q)) != src.label(q))
    throw InputError("map does not fix '" + src.label(q) + "'");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  const auto pts = src.finite_indices();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const Index x = pts[a], y = pts[b];
      const double ratio = dst(map.image(x), map.image(y)) / src(x, y);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  if (hi == 0.0) return {1.0, 1.0, q};
  if (lo == hi) return {lo, 1.0, q};
  const double lambda = std::sqrt(lo * hi);
  return {lambda, std::max(hi / lambda, lambda / lo), q};
}

}  // namespace metricgeo
