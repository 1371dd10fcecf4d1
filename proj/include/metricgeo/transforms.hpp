#pragma once

#include <functional>
#include <string>

#include "metricgeo/correspondence.hpp"
#include "metricgeo/errors.hpp"
#include "metricgeo/finite_space.hpp"

namespace metricgeo {

enum class QuasiKind { raw, inverted, sphericalized };

/// Quasi-distance table on X̂_p or X̂ with the ∞ row filled in.
struct PointedQuasiSpace {
  FiniteMetricSpace space;  // infinity() is always set
  std::string origin;       // label of the base point p
  QuasiKind kind = QuasiKind::raw;
};

inline constexpr const char* kInfinityLabel = "inf";

/// i_p(x,y) = d(x,y) / (d(x,p) d(y,p)), i_p(x,∞) = 1 / d(x,p) on
/// (X \ {p}) ∪ {∞}. An ideal ∞ already present in `space` is reused.
PointedQuasiSpace invert_quasi(const FiniteMetricSpace& space, Index p);

/// s_p(x,y) = d(x,y) / ((1 + d(x,p))(1 + d(y,p))), s_p(x,∞) = 1 / (1 + d(x,p)).
PointedQuasiSpace sphericalize_quasi(const FiniteMetricSpace& space, Index p);

/// Chain infimum of the quasi-distance: all-pairs shortest paths on the
/// complete graph. The result satisfies the triangle inequality exactly in
/// floating point (relaxation repeats until no entry changes).
FiniteMetricSpace chain_metrize(const FiniteMetricSpace& quasi);
inline FiniteMetricSpace chain_metrize(const PointedQuasiSpace& q) { return chain_metrize(q.space); }

/// Entrywise d^alpha, 0 < alpha <= 1.
FiniteMetricSpace snowflake(const FiniteMetricSpace& space, double alpha);

/// Minimal L with d(σx, σy) within a factor L of i_p(x,y). `map.source()`
/// must be X \ {p} with the labels of `space` in order; holds iff L <= 1 + tol.
PropertyReport invertibility_profile(const FiniteMetricSpace& space, Index p,
                                     const PointCorrespondence& map,
                                     double tolerance = kDefaultTolerance);

struct DilationFit {
  double lambda = 1.0;
  double L = 1.0;
  Index fixed_point = 0;
};

/// Fits (lambda, L) for a map fixing the source point q (matched by label).
/// lambda is the geometric midpoint sqrt(min * max) of the pair ratios, which
/// makes L = sqrt(max / min) the smallest constant over all lambda.
DilationFit quasi_dilation_fit(const PointCorrespondence& map, Index q);

template <class Point>
using PointMap = std::function<Point(const Point&)>;

/// g = f3 ∘ σ ∘ f2 ∘ σ ∘ f1 ∘ σ, the quasi-dilation at p built from a
/// (quasi-)inversion σ at p and maps anchored at x:
///   f1(p) = x,  f2(σ(x)) = p,  f3(σ(f2(p))) = p.
/// The returned map sends p to p and otherwise evaluates the composition.
template <class Point, class Equal>
PointMap<Point> compose_quasi_dilation(const Point& p, const Point& x, PointMap<Point> sigma,
                                       PointMap<Point> f1, PointMap<Point> f2,
                                       PointMap<Point> f3, Equal equal) {
  if (!equal(f1(p), x)) throw InputError("anchoring violated: f1(p) != x");
  if (!equal(f2(sigma(x)), p)) throw InputError("anchoring violated: f2(sigma(x)) != p");
  if (!equal(f3(sigma(f2(p))), p))
    throw InputError("anchoring violated: f3(sigma(f2(p))) != p");
  return [=](const Point& a) -> Point {
    if (equal(a, p)) return p;
    return f3(sigma(f2(sigma(f1(sigma(a))))));
  };
}

}  // namespace metricgeo
