#include <doctest.h>

#include "metricgeo/correspondence.hpp"
#include "metricgeo/detectors.hpp"
#include "metricgeo/errors.hpp"
#include "metricgeo/heisenberg.hpp"
#include "metricgeo/moebius.hpp"
#include "metricgeo/transforms.hpp"

using namespace metricgeo;
using namespace metricgeo::heisenberg;
using A = Algebra<double>;
using P = Point<double>;
using Vec = A::Vector;

namespace {

const std::vector<Field> kFields{Field::R, Field::C, Field::H, Field::O};

P point(const A& a, std::initializer_list<double> v, std::initializer_list<double> z) {
  P p = a.identity();
  Eigen::Index i = 0;
  for (double x : v) p.v(i++) = x;
  i = 0;
  for (double x : z) p.z(i++) = x;
  return p;
}

double coord_gap(const P& p, const P& q) {
  return std::max((p.v - q.v).cwiseAbs().maxCoeff(),
                  p.z.size() ? (p.z - q.z).cwiseAbs().maxCoeff() : 0.0);
}

}  // namespace

TEST_CASE("algebra construction") {
  SUBCASE("complex rank one") {
    auto a = A::build(Field::C, 1);
    CHECK(a.dim_v() == 2);
    CHECK(a.dim_z() == 1);
    A::Matrix expect(2, 2);
    expect << 0, 1, -1, 0;
    CHECK(a.structure(0) == expect);
  }
  SUBCASE("real case is abelian") {
    auto a = A::build(Field::R, 3);
    CHECK(a.dim_v() == 3);
    CHECK(a.dim_z() == 0);
    CHECK(a.bracket(Vec::Ones(3), Vec::LinSpaced(3, 1, 3)).size() == 0);
  }
  SUBCASE("dimensions") {
    CHECK(A::build(Field::C, 3).dim_v() == 6);
    CHECK(A::build(Field::H, 2).dim_v() == 8);
    CHECK(A::build(Field::H, 2).dim_z() == 3);
    CHECK(A::build(Field::O).dim_v() == 8);
    CHECK(A::build(Field::O).dim_z() == 7);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(A::build(Field::O, 2), InputError);
    CHECK_THROWS_AS(A::build(Field::C, 0), InputError);
    CHECK_THROWS_AS(parse_field("Q"), InputError);
    CHECK(parse_field("H") == Field::H);
    CHECK(to_string(Field::O) == "O");
  }
  SUBCASE("structure tensors are antisymmetric with entries in {-1, 0, 1}") {
    for (Field f : kFields) {
      auto a = A::build(f, f == Field::O ? 1 : 2);
      CHECK(a.h_type_verified());
      for (Eigen::Index k = 0; k < a.dim_z(); ++k) {
        const auto& c = a.structure(k);
        CHECK((c + c.transpose()).isZero());
        CHECK((c.array().abs() * (c.array().abs() - 1)).isZero());
      }
    }
  }
  SUBCASE("octonionic J maps X0 to X1 along Z1") {
    auto a = A::build(Field::O);
    CHECK((a.j_matrix(Vec::Unit(7, 0)) * Vec::Unit(8, 0)).isApprox(Vec::Unit(8, 1)));
  }
}

TEST_CASE("J operator") {
  auto c = A::build(Field::C);
  CHECK(c.j_matrix(Vec::Zero(1)).isZero());
  const double t = 1.7;
  const auto j = c.j_matrix(Vec::Constant(1, t));
  CHECK((j * Vec::Unit(2, 0)).isApprox(t * Vec::Unit(2, 1)));
  CHECK((j * Vec::Unit(2, 1)).isApprox(-t * Vec::Unit(2, 0)));
  CHECK_THROWS_AS(c.j_matrix(Vec::Zero(2)), InputError);

  for (Field f : {Field::C, Field::H, Field::O}) {
    auto a = A::build(f);
    for (const auto& p : sample(a, 100, 17, 1.0)) {
      const auto jz = a.j_matrix(p.z);
      CHECK((jz + jz.transpose()).isZero());
      CHECK(a.h_type_defect(p.z) <= 1e-12);
      // <J_z X, Y> = <z, [X, Y]>
      const Vec x = Vec::LinSpaced(a.dim_v(), -1, 1), y = Vec::Ones(a.dim_v());
      CHECK((jz * x).dot(y) == doctest::Approx(p.z.dot(a.bracket(x, y))).epsilon(1e-12));
    }
  }
}

TEST_CASE("group law") {
  for (Field f : kFields) {
    auto a = A::build(f);
    auto pts = sample(a, 30, 3);
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
      const auto &p = pts[i], &q = pts[i + 1], &r = pts[i + 2];
      CHECK(coord_gap(multiply(a, p, inverse(p)), a.identity()) <= 1e-15);
      CHECK(coord_gap(multiply(a, multiply(a, p, q), r), multiply(a, p, multiply(a, q, r))) <=
            1e-14);
      P v0{p.v, Vec::Zero(a.dim_z())};
      CHECK(coord_gap(multiply(a, v0, v0), P{2 * p.v, Vec::Zero(a.dim_z())}) == 0.0);
    }
  }
  auto c = A::build(Field::C);
  auto x = point(c, {1, 0}, {0}), y = point(c, {0, 1}, {0});
  auto xy = multiply(c, x, y), yx = multiply(c, y, x);
  CHECK((xy.z - yx.z)(0) == 1.0);
  CHECK_THROWS_AS(multiply(c, x, A::build(Field::H).identity()), InputError);
}

TEST_CASE("Koranyi distance") {
  auto c = A::build(Field::C);
  const auto e = c.identity();
  CHECK(koranyi_distance(c, e, point(c, {2, 0}, {0})) == 1.0);
  CHECK(koranyi_distance(c, e, point(c, {0, 0}, {1})) == 1.0);
  for (Field f : kFields) {
    auto a = A::build(f);
    auto pts = sample(a, 60, 5);
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
      const auto &g = pts[i], &p = pts[i + 1], &q = pts[i + 2];
      const double d = koranyi_distance(a, p, q);
      CHECK(d == doctest::Approx(koranyi_distance(a, q, p)).epsilon(1e-14));
      CHECK(koranyi_distance(a, multiply(a, g, p), multiply(a, g, q)) ==
            doctest::Approx(d).epsilon(1e-12));
      CHECK(koranyi_distance(a, p, p) == 0.0);
    }
  }
}

TEST_CASE("dilations") {
  for (Field f : kFields) {
    auto a = A::build(f);
    auto pts = sample(a, 40, 8);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const auto &p = pts[i], &q = pts[i + 1];
      CHECK(coord_gap(dilate(a, 1.0, p), p) == 0.0);
      CHECK(gauge(dilate(a, 2.0, p)) == doctest::Approx(2 * gauge(p)).epsilon(1e-14));
      CHECK(coord_gap(dilate(a, 3.0, dilate(a, 0.5, p)), dilate(a, 1.5, p)) <= 1e-14);
      CHECK(coord_gap(dilate(a, 7.0, multiply(a, p, q)),
                      multiply(a, dilate(a, 7.0, p), dilate(a, 7.0, q))) <= 1e-13);
      for (double s : {0.5, 2.0, 7.0})
        CHECK(koranyi_distance(a, dilate(a, s, p), dilate(a, s, q)) ==
              doctest::Approx(s * koranyi_distance(a, p, q)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(dilate(a, 0.0, pts[0]), InputError);
    CHECK_THROWS_AS(dilate(a, -1.0, pts[0]), InputError);
  }
  auto c = A::build(Field::C);
  auto unit = point(c, {1, 0}, {1});
  CHECK(gauge(dilate(c, 2.0, unit)) == doctest::Approx(2 * gauge(unit)).epsilon(1e-15));
}

TEST_CASE("inversion") {
  auto c = A::build(Field::C);
  SUBCASE("closed forms on the axes") {
    auto s = invert(c, point(c, {0, 0}, {2}));
    CHECK(coord_gap(s, point(c, {0, 0}, {-0.5})) == 0.0);
    auto t = invert(c, point(c, {2, 0}, {0}));
    CHECK(coord_gap(t, point(c, {-2, 0}, {0})) == 0.0);
    auto r = A::build(Field::R, 2);
    CHECK(coord_gap(invert(r, point(r, {0, 4}, {})), point(r, {0, -1}, {})) == 0.0);
  }
  SUBCASE("the identity has no image") {
    for (Field f : kFields) CHECK_THROWS_AS(invert(A::build(f), A::build(f).identity()), DomainError);
  }
  SUBCASE("identity, involution and reciprocity on samples") {
    for (Field f : kFields) {
      auto a = A::build(f);
      const auto e = a.identity();
      auto pts = sample(a, 200, 11);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto &p = pts[i], &q = pts[i + 1];
        const auto sp = invert(a, p), sq = invert(a, q);
        const double lhs = koranyi_distance(a, sp, sq) * koranyi_distance(a, p, e) *
                           koranyi_distance(a, q, e);
        CHECK(lhs == doctest::Approx(koranyi_distance(a, p, q)).epsilon(1e-9));
        CHECK(coord_gap(invert(a, sp), p) <= 1e-12);
        CHECK(gauge(sp) * gauge(p) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
  SUBCASE("higher rank") {
    for (auto [f, n] : {std::pair{Field::C, 3}, std::pair{Field::H, 2}}) {
      auto a = A::build(f, n);
      auto pts = sample(a, 50, 2);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto e = a.identity();
        const double lhs = koranyi_distance(a, invert(a, pts[i]), invert(a, pts[i + 1])) *
                           gauge(pts[i]) * gauge(pts[i + 1]);
        CHECK(lhs == doctest::Approx(koranyi_distance(a, pts[i], pts[i + 1])).epsilon(1e-9));
        CHECK(gauge(pts[i]) == koranyi_distance(a, pts[i], e));
      }
    }
  }
}

TEST_CASE("metric properties of the gauge distance") {
  for (Field f : kFields) {
    auto a = A::build(f);
    auto pts = sample(a, 40, 21);
    auto t = FiniteMetricSpace::from_table(tabulate(40, [&](Index i, Index j) {
      return koranyi_distance(a, pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
    }));
    CHECK(validate_metric(t, 1e-12).holds);
    CHECK(ptolemy_constant(t).constant <= 1 + 1e-9);
  }
}

TEST_CASE("sigma, translations and dilations are Moebius") {
  auto a = A::build(Field::H);
  auto pts = sample(a, 30, 4);
  auto rho = [&](const P& p, const P& q) { return koranyi_distance(a, p, q); };
  auto sig = correspondence_from_map(pts, [&](const P& p) { return invert(a, p); }, rho);
  CHECK(distortion_profile(sig).moebius_log_deviation <= 1e-9);
  const auto g = sample(a, 1, 99).front();
  auto tr = distortion_profile(
      correspondence_from_map(pts, [&](const P& p) { return translate(a, g, p); }, rho));
  CHECK(tr.sqm_constant <= 1 + 1e-9);
  CHECK(tr.bilip_constant <= 1 + 1e-9);
  auto dl = distortion_profile(
      correspondence_from_map(pts, [&](const P& p) { return dilate(a, 3.0, p); }, rho));
  CHECK(dl.sqm_constant <= 1 + 1e-9);
  CHECK(dl.similarity.lambda == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("composed dilation from translations and sigma") {
  auto a = A::build(Field::C);
  const auto e = a.identity();
  const auto x = point(a, {0.6, -0.3}, {0.4});
  PointMap<P> sigma = [&](const P& p) { return invert(a, p); };
  PointMap<P> f1 = [&](const P& p) { return translate(a, x, p); };
  const auto sx_inv = inverse(invert(a, x));
  PointMap<P> f2 = [&](const P& p) { return translate(a, sx_inv, p); };
  const auto back = inverse(invert(a, f2(e)));
  PointMap<P> f3 = [&](const P& p) { return translate(a, back, p); };
  auto near = [](const P& p, const P& q) { return coord_gap(p, q) <= 1e-12; };
  auto g = compose_quasi_dilation<P>(e, x, sigma, f1, f2, f3, near);

  auto pts = sample(a, 40, 6, 2.0);
  pts.push_back(e);
  auto map = correspondence_from_map(pts, g, [&](const P& p, const P& q) {
    return koranyi_distance(a, p, q);
  });
  auto fit = quasi_dilation_fit(map, 40);
  const double r = gauge(x);
  CHECK(fit.lambda == doctest::Approx(r * r).epsilon(1e-9));
  CHECK(fit.L == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("extended precision instantiation") {
  using AL = Algebra<long double>;
  auto a = AL::build(Field::H);
  auto pts = sample(a, 20, 3);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const long double lhs = koranyi_distance(a, invert(a, pts[i]), invert(a, pts[i + 1])) *
                            gauge(pts[i]) * gauge(pts[i + 1]);
    CHECK(static_cast<double>(lhs / koranyi_distance(a, pts[i], pts[i + 1])) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
}
