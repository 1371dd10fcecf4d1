#include "metricgeo/suites.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "metricgeo/cantor.hpp"
#include "metricgeo/correspondence.hpp"
#include "metricgeo/errors.hpp"
#include "metricgeo/moebius.hpp"
#include "metricgeo/random.hpp"

namespace metricgeo {

namespace {

using HPoint = heisenberg::Point<double>;
using HAlgebra = heisenberg::Algebra<double>;

PropertyReport relative_report(std::string name, double worst, std::vector<Index> witness,
                               double tolerance, std::uint64_t count) {
  PropertyReport r;
  r.property = std::move(name);
  r.constant = worst;
  r.holds = worst <= tolerance;
  r.witness = std::move(witness);
  r.tolerance = tolerance;
  r.enumerated = count;
  return r;
}

PropertyReport exact_report(std::string name, std::uint64_t failures, std::vector<Index> witness,
                            std::uint64_t count) {
  PropertyReport r;
  r.property = std::move(name);
  r.constant = static_cast<double>(failures);
  r.holds = failures == 0;
  r.witness = std::move(witness);
  r.enumerated = count;
  return r;
}

PropertyReport distortion_as_property(std::string name, const DistortionReport& d,
                                      double tolerance) {
  PropertyReport r;
  r.property = std::move(name);
  r.constant = d.moebius_log_deviation;
  r.holds = d.moebius_log_deviation <= tolerance;
  r.witness = d.quadruple_witness;
  r.tolerance = tolerance;
  r.seed = d.seed;
  r.enumerated = d.enumerated;
  r.capped = d.capped;
  r.details = {{"sqm_constant", d.sqm_constant}};
  return r;
}

}  // namespace

std::vector<PropertyReport> verify_heisenberg(const HeisenbergSuite& suite) {
  if (suite.count < 4) throw InputError("verify-heisenberg needs at least 4 sample points");
  const auto alg = HAlgebra::build(suite.field, suite.n);
  const auto pts = heisenberg::sample(alg, suite.count, suite.seed, suite.box);
  const auto e = alg.identity();
  const auto n = static_cast<Index>(pts.size());
  auto rho = [&](const HPoint& p, const HPoint& q) { return heisenberg::koranyi_distance(alg, p, q); };
  auto at = [&](Index i) -> const HPoint& { return pts[static_cast<std::size_t>(i)]; };
  const auto table = FiniteMetricSpace::from_table(tabulate(n, [&](Index i, Index j) {
    return rho(at(i), at(j));
  }));
  const std::uint64_t pair_count = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const double tol = suite.tolerance;
  constexpr double kExactTol = 1e-12;
  std::vector<PropertyReport> out;

  auto tri = validate_metric(table, kExactTol);
  tri.property = "heisenberg.triangle";
  tri.seed = suite.seed;
  out.push_back(std::move(tri));

  std::vector<HPoint> sig;
  for (const auto& p : pts) sig.push_back(heisenberg::invert(alg, p));

  {
    double worst = 0;
    std::vector<Index> w;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        const double lhs = rho(sig[i], sig[j]) * rho(at(i), e) * rho(at(j), e);
        const double err = std::abs(lhs / table(i, j) - 1.0);
        if (err > worst) worst = err, w = {i, j};
      }
    out.push_back(relative_report("heisenberg.inversion_identity", worst, w, tol, pair_count));
  }
  {
    double invol = 0, recip = 0;
    std::vector<Index> wi, wr;
    for (Index i = 0; i < n; ++i) {
      const double g = heisenberg::gauge(at(i));
      // Coordinates, not ρ: the gauge's fourth root turns a 1e-16 slip in z
      // into a 1e-8 distance.
      const auto twice = heisenberg::invert(alg, sig[i]);
      const double scale = at(i).v.norm() + at(i).z.norm();
      const double back = ((twice.v - at(i).v).norm() + (twice.z - at(i).z).norm()) / scale;
      if (back > invol) invol = back, wi = {i};
      const double r = std::abs(heisenberg::gauge(sig[i]) * g - 1.0);
      if (r > recip) recip = r, wr = {i};
    }
    out.push_back(relative_report("heisenberg.involution", invol, wi, tol, pts.size()));
    out.push_back(relative_report("heisenberg.gauge_reciprocity", recip, wr, kExactTol, pts.size()));
  }
  {
    double worst = 0;
    std::vector<Index> w;
    for (Index i = 0; i < n && alg.dim_z() > 0; ++i) {
      const double d = alg.h_type_defect(at(i).z);
      if (d > worst) worst = d, w = {i};
    }
    auto r = relative_report("heisenberg.h_type", worst, w, kExactTol, pts.size());
    r.details = {{"construction_verified", alg.h_type_verified()}};
    out.push_back(std::move(r));
  }
  {
    double worst = 0;
    std::vector<Index> w;
    double worst_s = 0;
    for (double s : {0.5, 2.0, 7.0}) {
      std::vector<HPoint> dil;
      for (const auto& p : pts) dil.push_back(heisenberg::dilate(alg, s, p));
      for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
          const double err = std::abs(rho(dil[i], dil[j]) / (s * table(i, j)) - 1.0);
          if (err > worst) worst = err, w = {i, j}, worst_s = s;
        }
    }
    auto r = relative_report("heisenberg.dilation_scaling", worst, w, kExactTol, 3 * pair_count);
    r.details = {{"factors", {0.5, 2.0, 7.0}}, {"worst_factor", worst_s}};
    out.push_back(std::move(r));
  }

  const QuadrupleOptions q{suite.max_quadruples, suite.seed};
  out.push_back(ptolemy_constant(table, q, tol));
  out.back().property = "heisenberg.ptolemy";

  auto sigma_map = correspondence_from_map(pts, [&](const HPoint& p) { return heisenberg::invert(alg, p); }, rho);
  out.push_back(distortion_as_property("heisenberg.sigma_moebius", distortion_profile(sigma_map, q), tol));

  // A translation by a sample-independent element and a dilation are similarities.
  Rng rng(suite.seed ^ 0x5bd1e995ULL);
  auto g = heisenberg::sample(alg, 1, rng(), suite.box).front();
  auto left = correspondence_from_map(pts, [&](const HPoint& p) { return heisenberg::translate(alg, g, p); }, rho);
  auto dl = distortion_profile(left, q);
  auto r = distortion_as_property("heisenberg.translation_similarity", dl, tol);
  r.constant = dl.sqm_constant - 1.0;
  r.holds = r.constant <= tol && dl.similarity.deviation <= tol;
  r.details["similarity_deviation"] = dl.similarity.deviation;
  out.push_back(std::move(r));

  auto dmap = correspondence_from_map(pts, [&](const HPoint& p) { return heisenberg::dilate(alg, 2.0, p); }, rho);
  auto dd = distortion_profile(dmap, q);
  auto rd = distortion_as_property("heisenberg.dilation_similarity", dd, tol);
  rd.constant = dd.sqm_constant - 1.0;
  rd.holds = rd.constant <= tol && dd.similarity.deviation <= tol;
  rd.details["similarity_lambda"] = dd.similarity.lambda;
  out.push_back(std::move(rd));

  for (auto& rep : out) rep.seed = suite.seed;
  return out;
}

std::vector<PropertyReport> verify_cantor(const CantorSuite& suite) {
  using namespace cantor;
  const CantorSpace space(suite.N, suite.M, suite.s, suite.depth);
  if (suite.depth < 2) throw InputError("verify-cantor needs depth >= 2 to reach index 0");
  const auto pts = enumerate(space);
  const auto n = static_cast<Index>(pts.size());
  const auto one = SymbolicPoint::one();
  auto at = [&](Index i) -> const SymbolicPoint& { return pts[static_cast<std::size_t>(i)]; };

  Eigen::MatrixXi m(n, n);
  m.setConstant(INT_MAX);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) m(i, j) = m(j, i) = distance(at(i), at(j)).exponent;

  std::vector<PropertyReport> out;
  {
    // exponent form of d(x,z) <= max(d(x,y), d(y,z))
    int worst = INT_MIN;
    std::vector<Index> w;
    std::uint64_t count = 0;
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        if (y == x) continue;
        for (Index z = x + 1; z < n; ++z) {
          if (z == y) continue;
          ++count;
          const int gap = std::min(m(x, y), m(y, z)) - m(x, z);
          if (gap > worst) worst = gap, w = {x, y, z};
        }
      }
    PropertyReport r;
    r.property = "cantor.ultrametric";
    r.holds = worst <= 0;
    r.constant = std::pow(space.s(), std::max(worst, 0));
    r.witness = w;
    r.enumerated = count;
    r.details = {{"worst_exponent_gap", worst}};
    out.push_back(std::move(r));
  }

  std::vector<Index> nonone;
  for (Index i = 0; i < n; ++i)
    if (at(i) != one) nonone.push_back(i);
  std::vector<SymbolicPoint> tau(pts.size());
  std::vector<int> m1(pts.size());
  for (Index i : nonone) {
    tau[i] = inversion_tau(at(i));
    m1[i] = distance(at(i), one).exponent;
  }
  {
    std::uint64_t bad = 0;
    std::vector<Index> w;
    for (Index i : nonone)
      if (inversion_tau(tau[i]) != at(i) && bad++ == 0) w = {i};
    out.push_back(exact_report("cantor.tau_involution", bad, w, nonone.size()));
  }
  {
    std::uint64_t bad = 0, case1 = 0, case2 = 0, count = 0;
    std::vector<Index> w;
    for (std::size_t a = 0; a < nonone.size(); ++a)
      for (std::size_t b = a + 1; b < nonone.size(); ++b) {
        const Index i = nonone[a], j = nonone[b];
        ++count;
        (m1[i] == m1[j] ? case1 : case2)++;
        const auto d = distance(tau[i], tau[j]);
        if ((d.bounded || d.exponent != m(i, j) - m1[i] - m1[j]) && bad++ == 0) w = {i, j};
      }
    auto r = exact_report("cantor.tau_inversion_identity", bad, w, count);
    r.details = {{"equal_level_pairs", case1}, {"distinct_level_pairs", case2}};
    out.push_back(std::move(r));
  }
  {
    // isometries between seeded pairs of window points, checked on every pair
    Rng rng(suite.seed);
    std::uint64_t bad = 0, count = 0;
    std::vector<Index> w;
    for (int trial = 0; trial < 8; ++trial) {
      const auto x = static_cast<Index>(uniform_index(rng, pts.size()));
      const auto y = static_cast<Index>(uniform_index(rng, pts.size()));
      const auto f = isometry_between(space, at(x), at(y));
      std::vector<SymbolicPoint> img;
      for (const auto& p : pts) img.push_back(f(p));
      bool ok = img[x] == at(y);
      for (Index i = 0; i < n && ok; ++i)
        for (Index j = i + 1; j < n && ok; ++j) {
          ++count;
          const auto d = distance(img[i], img[j]);
          ok = !d.bounded && d.exponent == m(i, j);
        }
      if (!ok && bad++ == 0) w = {x, y};
    }
    auto r = exact_report("cantor.isometry_between", bad, w, count);
    r.seed = suite.seed;
    out.push_back(std::move(r));
  }
  {
    Rng rng(suite.seed + 1);
    std::uint64_t bad = 0, count = 0;
    std::vector<Index> w;
    for (int trial = 0; trial < 64; ++trial) {
      const auto x = static_cast<Index>(uniform_index(rng, pts.size()));
      const auto y = static_cast<Index>(uniform_index(rng, pts.size()));
      const auto a = static_cast<Index>(uniform_index(rng, pts.size()));
      if (x == y) continue;
      std::vector<Index> same;
      for (Index b = 0; b < n; ++b)
        if (b != a && m(a, b) == m(x, y)) same.push_back(b);
      if (same.empty()) continue;
      const Index b = same[uniform_index(rng, same.size())];
      ++count;
      const auto maps = two_point_isometry(space, at(x), at(y), at(a), at(b));
      auto apply = [&](SymbolicPoint p) {
        for (const auto& f : maps) p = f(p);
        return p;
      };
      if ((apply(at(x)) != at(a) || apply(at(y)) != at(b)) && bad++ == 0) w = {x, y, a, b};
    }
    auto r = exact_report("cantor.two_point_isometry", bad, w, count);
    r.seed = suite.seed;
    out.push_back(std::move(r));
  }
  {
    const double s = space.s();
    const double delta_n = (1.0 + 1.0 / s) / 2.0, delta_m = (1.0 + s) / 2.0;
    const auto cn = delta_census(space, one, 0, delta_n);
    const auto cm = delta_census(space, one, -1, delta_m);
    PropertyReport r;
    r.property = "cantor.delta_census";
    r.holds = cn == static_cast<std::size_t>(space.N()) && cm == static_cast<std::size_t>(space.M());
    r.constant = static_cast<double>(cn);
    r.details = {{"sphere_1", {{"delta", delta_n}, {"components", cn}, {"expected", space.N()}}},
                 {"sphere_s", {{"delta", delta_m}, {"components", cm}, {"expected", space.M()}}}};
    out.push_back(std::move(r));
  }

  const auto table = to_metric_space(space, pts);
  auto ud = uniform_disconnectedness(table);
  ud.property = "cantor.disconnected";
  ud.holds = ud.holds && ud.constant >= 1.0;
  out.push_back(std::move(ud));
  auto pt = ptolemy_constant(table, {suite.max_quadruples, suite.seed});
  pt.property = "cantor.ptolemy";
  out.push_back(std::move(pt));

  if (space.N() == space.M()) {
    auto all = pts;
    all.push_back(SymbolicPoint::infinity());
    std::vector<SymbolicPoint> hat;
    for (const auto& p : all) hat.push_back(to_sphericalized(space, p));
    const bool injective = std::set<SymbolicPoint>(hat.begin(), hat.end()).size() == hat.size();
    const double s = space.s();
    auto radius = [&](const SymbolicPoint& p) {
      return p == one ? 0.0 : distance(p, one).value(s);
    };
    double lo = INFINITY, hi = 0;
    std::vector<Index> w;
    double worst = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        double sp;
        if (all[j].is_infinity()) sp = 1.0 / (1.0 + radius(all[i]));
        else sp = distance(all[i], all[j]).value(s) / ((1 + radius(all[i])) * (1 + radius(all[j])));
        const auto dh = distance(hat[i], hat[j]);
        const double ratio = dh.value(s) / sp;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        const double dev = std::max(ratio, 1.0 / ratio);
        if (dev > worst) worst = dev, w = {static_cast<Index>(i), static_cast<Index>(j)};
      }
    PropertyReport r;
    r.property = "cantor.sphericalized_comparability";
    r.constant = worst;
    r.holds = injective && std::isfinite(worst);
    r.witness = w;
    r.enumerated = all.size() * (all.size() - 1) / 2;
    r.details = {{"min_ratio", lo}, {"max_ratio", hi}, {"injective", injective}};
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace metricgeo
