#include "metricgeo/moebius.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "metricgeo/errors.hpp"
#include "metricgeo/random.hpp"

namespace metricgeo {

double cross_ratio(const FiniteMetricSpace& space, Index a, Index b, Index c, Index d) {
  const std::array<Index, 4> q{a, b, c, d};
  for (Index i : q)
    if (i < 0 || i >= space.size()) throw InputError("cross-ratio index out of range");
  if (std::set<Index>(q.begin(), q.end()).size() != 4)
    throw InputError("cross-ratio needs four distinct points");
  auto factor = [&](Index u, Index v) {
    const double x = space(u, v);
    return std::isinf(x) ? 1.0 : x;
  };
  const double den = factor(a, d) * factor(b, c);
  if (den == 0.0) throw InputError("cross-ratio denominator vanishes");
  return factor(a, c) * factor(b, d) / den;
}

void to_json(nlohmann::json& j, const DistortionReport& r) {
  j = nlohmann::json{{"moebius_log_deviation", r.moebius_log_deviation},
                     {"sqm_constant", r.sqm_constant},
                     {"bilip_constant", r.bilip_constant},
                     {"similarity", {{"lambda", r.similarity.lambda},
                                     {"deviation", r.similarity.deviation}}},
                     {"enumerated", r.enumerated},
                     {"pairs", r.pairs},
                     {"capped", r.capped},
                     {"quadruple_witness", r.quadruple_witness},
                     {"pair_witness", r.pair_witness}};
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
}

DistortionReport distortion_profile(const PointCorrespondence& map, QuadrupleOptions options) {
  const auto& src = map.source();
  const auto& dst = map.target();
  const auto& pairs = map.pairs();
  const std::size_t n = pairs.size();
  if (src.has_ideal_infinity() || dst.has_ideal_infinity())
    throw InputError("distortion estimation needs finite distances on both sides");

  DistortionReport r;

  // Pair statistics: bi-Lipschitz constant and best similarity.
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  std::vector<Index> lo_at, hi_at;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto [x, fx] = pairs[a];
      const auto [y, fy] = pairs[b];
      const double ratio = dst(fx, fy) / src(x, y);
      ++r.pairs;
      if (ratio < lo) { lo = ratio; lo_at = {x, y}; }
      if (ratio > hi) { hi = ratio; hi_at = {x, y}; }
    }
  if (r.pairs > 0) {
    r.bilip_constant = std::max(hi, 1.0 / lo);
    r.pair_witness = hi >= 1.0 / lo ? hi_at : lo_at;
    if (lo == hi) {
      r.similarity = {lo, 0.0};
    } else {
      const double lambda = std::sqrt(lo * hi);
      r.similarity = {lambda, std::max(std::log(hi / lambda), std::log(lambda / lo))};
    }
  }

  // Quadruple statistics over positions in the pair list.
  double worst = 1.0;
  auto visit = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    const auto [a, fa] = pairs[i];
    const auto [b, fb] = pairs[j];
    const auto [c, fc] = pairs[k];
    const auto [d, fd] = pairs[l];
    const std::array<double, 3> before{src(a, b) * src(c, d), src(a, c) * src(b, d),
                                       src(a, d) * src(b, c)};
    const std::array<double, 3> after{dst(fa, fb) * dst(fc, fd), dst(fa, fc) * dst(fb, fd),
                                      dst(fa, fd) * dst(fb, fc)};
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) {
        if (u == v) continue;
        const double ratio = (after[u] * before[v]) / (after[v] * before[u]);
        if (ratio > worst) {
          worst = ratio;
          r.quadruple_witness = {a, b, c, d};
        }
      }
    ++r.enumerated;
  };

  const std::uint64_t total =
      n < 4 ? 0
            : static_cast<std::uint64_t>(static_cast<unsigned __int128>(n) * (n - 1) * (n - 2) *
                                         (n - 3) / 24);
  if (total <= options.cap) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t l = k + 1; l < n; ++l) visit(i, j, k, l);
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
      visit(q[0], q[1], q[2], q[3]);
    }
  }
  r.sqm_constant = worst;
  r.moebius_log_deviation = std::log(worst);
  return r;
}

PropertyReport ptolemy_circle_check(const FiniteMetricSpace& space,
                                    const std::vector<Index>& cycle, double tolerance) {
  if (cycle.size() < 4)
    throw InputError("circle check needs at least 4 points, got " + std::to_string(cycle.size()));
  for (Index i : cycle)
    if (i < 0 || i >= space.size()) throw InputError("cycle index out of range");
  if (std::set<Index>(cycle.begin(), cycle.end()).size() != cycle.size())
    throw InputError("cycle repeats a point");

  PropertyReport r;

  r.property = "moebius_circle";

  r.tolerance = tolerance;
  r.constant = 0.0;
  const std::size_t n = cycle.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e) {
          const Index x = cycle[a], y = cycle[b], z = cycle[c], u = cycle[e];
          const double lhs = space(x, z) * space(y, u);
          const double rhs = space(x, y) * space(z, u) + space(x, u) * space(y, z);
          const double dev = std::abs(lhs / rhs - 1.0);
          ++r.enumerated;
          if (dev > r.constant || r.witness.empty()) {
            r.constant = dev;
            r.witness = {x, y, z, u};
          }
        }
  r.holds = r.constant <= tolerance;
  return r;
}

}  // namespace metricgeo
