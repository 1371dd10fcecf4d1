#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "metricgeo/errors.hpp"
#include "metricgeo/random.hpp"

namespace metricgeo::heisenberg {

enum class Field { R, C, H, O };

inline std::string to_string(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
    case Field::O: return "O";
  }
  return "?";
}

inline Field parse_field(const std::string& s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  if (s == "H") return Field::H;
  if (s == "O") return Field::O;
  throw InputError("unknown field tag '" + s + "' (expected R, C, H or O)");
}

/// Exponential coordinates (v, z) = exp(V + Z) of a point.
template <class Scalar = double>
struct Point {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Vector v;
  Vector z;
};

/// Step-two algebra n = v ⊕ z with orthonormal basis and structure tensor
/// [e_i, e_j] = Σ_k c_ijk f_k, stored as one antisymmetric matrix per
/// central direction.
///
/// Basis order on v: (X_1, Y_1, ..., X_n, Y_n) for C, blocks
/// (X_i, Y_i, V_i, W_i) for H, and (X_0, ..., X_7) for O.
template <class Scalar = double>
class Algebra {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  static Algebra build(Field field, int n = 1);

  Field field() const { return field_; }
  int n() const { return n_; }
  Eigen::Index dim_v() const { return dim_v_; }
  Eigen::Index dim_z() const { return dim_z_; }

  /// c_ijk, i.e. the k-th coordinate of [e_i, e_j].
  const Matrix& structure(Eigen::Index k) const { return structure_[static_cast<std::size_t>(k)]; }

  /// Summed over i < j as c_ijk (x_i y_j - x_j y_i), so [x, x] is exactly 0.
  Vector bracket(const Vector& x, const Vector& y) const {
    Vector out = Vector::Zero(dim_z_);
    for (Eigen::Index k = 0; k < dim_z_; ++k) {
      const Matrix& c = structure(k);
      for (Eigen::Index i = 0; i < dim_v_; ++i)
        for (Eigen::Index j = i + 1; j < dim_v_; ++j)
          if (c(i, j) != Scalar(0)) out(k) += c(i, j) * (x(i) * y(j) - x(j) * y(i));
    }
    return out;
  }

  /// J_z defined by <J_z X, Y> = <z, [X, Y]>, i.e. J_z = -Σ_k z_k c_k.
  Matrix j_matrix(const Vector& z) const {
    if (z.size() != dim_z_)
      throw InputError("J operator: central vector has length " + std::to_string(z.size()) +
                       ", expected " + std::to_string(dim_z_));
    Matrix j = Matrix::Zero(dim_v_, dim_v_);
    for (Eigen::Index k = 0; k < dim_z_; ++k) j -= z(k) * structure(k);
    return j;
  }

  /// max |J_z² + |z|² Id| entry.
  Scalar h_type_defect(const Vector& z) const {
    const Matrix j = j_matrix(z);
    return (j * j + z.squaredNorm() * Matrix::Identity(dim_v_, dim_v_)).cwiseAbs().maxCoeff();
  }

  bool h_type_verified() const { return h_type_verified_; }

  void check(const Point<Scalar>& p) const {
    if (p.v.size() != dim_v_ || p.z.size() != dim_z_)
      throw InputError("point has dimensions (" + std::to_string(p.v.size()) + "," +
                       std::to_string(p.z.size()) + "), algebra expects (" +
                       std::to_string(dim_v_) + "," + std::to_string(dim_z_) + ")");
  }

  Point<Scalar> identity() const { return {Vector::Zero(dim_v_), Vector::Zero(dim_z_)}; }

 private:
  void set(Eigen::Index i, Eigen::Index j, Eigen::Index k, Scalar value) {
    structure_[static_cast<std::size_t>(k)](i, j) = value;
    structure_[static_cast<std::size_t>(k)](j, i) = -value;
  }

  Field field_ = Field::R;
  int n_ = 1;
  Eigen::Index dim_v_ = 0, dim_z_ = 0;
  std::vector<Matrix> structure_;
  bool h_type_verified_ = true;
};

template <class Scalar>
Algebra<Scalar> Algebra<Scalar>::build(Field field, int n) {
  if (n < 1) throw InputError("Heisenberg rank n must be positive");
  if (field == Field::O && n != 1) throw InputError("the octonionic Heisenberg group has n = 1");
  Algebra a;
  a.field_ = field;
  a.n_ = n;
  switch (field) {
    case Field::R: a.dim_v_ = n; a.dim_z_ = 0; break;
    case Field::C: a.dim_v_ = 2 * n; a.dim_z_ = 1; break;
    case Field::H: a.dim_v_ = 4 * n; a.dim_z_ = 3; break;
    case Field::O: a.dim_v_ = 8; a.dim_z_ = 7; break;
  }
  a.structure_.assign(static_cast<std::size_t>(a.dim_z_), Matrix::Zero(a.dim_v_, a.dim_v_));

  if (field == Field::C) {
    for (int i = 0; i < n; ++i) a.set(2 * i, 2 * i + 1, 0, 1);  // [X_i, Y_i] = Z
  } else if (field == Field::H) {
    for (int i = 0; i < n; ++i) {
      const Eigen::Index x = 4 * i, y = x + 1, v = x + 2, w = x + 3;
      a.set(x, y, 0, 1);  // [X,Y] = Z_1 = [V,W]
      a.set(v, w, 0, 1);
      a.set(x, v, 1, 1);  // [X,V] = Z_2 = [W,Y]
      a.set(w, y, 1, 1);
      a.set(x, w, 2, 1);  // [X,W] = Z_3 = [Y,V]
      a.set(y, v, 2, 1);
    }
  } else if (field == Field::O) {
    for (Eigen::Index k = 1; k <= 7; ++k) a.set(0, k, k - 1, 1);  // [X_0, X_k] = Z_k
    // ε_ijk = +1 on these triples; cyclic rotations keep the sign, and
    // set() supplies the transposed entries.
    constexpr std::array<std::array<int, 3>, 7> kTriples{
        {{1, 2, 4}, {1, 3, 7}, {1, 5, 6}, {2, 3, 5}, {2, 6, 7}, {3, 4, 6}, {4, 5, 7}}};
    for (const auto& t : kTriples)
      for (int r = 0; r < 3; ++r) {
        const int i = t[r], j = t[(r + 1) % 3], k = t[(r + 2) % 3];
        a.set(i, j, k - 1, 1);
      }
  }

  // H-type check on the basis directions and a fixed mixed direction.
  if (a.dim_z_ > 0) {
    const Scalar tol = Scalar(1e-12);
    for (Eigen::Index k = 0; k < a.dim_z_; ++k)
      if (a.h_type_defect(Vector::Unit(a.dim_z_, k)) > tol) a.h_type_verified_ = false;
    Vector mixed = Vector::LinSpaced(a.dim_z_, Scalar(1), Scalar(a.dim_z_));
    if (a.h_type_defect(mixed) > tol * mixed.squaredNorm()) a.h_type_verified_ = false;
  }
  return a;
}

template <class Scalar>
Point<Scalar> multiply(const Algebra<Scalar>& a, const Point<Scalar>& p, const Point<Scalar>& q) {
  a.check(p);
  a.check(q);
  return {p.v + q.v, p.z + q.z + Scalar(0.5) * a.bracket(p.v, q.v)};
}

template <class Scalar>
Point<Scalar> inverse(const Point<Scalar>& p) {
  return {-p.v, -p.z};
}

/// Korányi gauge (|v|⁴/16 + |z|²)^{1/4}.
template <class Scalar>
Scalar gauge(const Point<Scalar>& p) {
  using std::sqrt;
  const Scalar v2 = p.v.squaredNorm();
  return sqrt(sqrt(v2 * v2 / Scalar(16) + p.z.squaredNorm()));
}

/// ρ(p, q) = ‖q⁻¹ p‖.
template <class Scalar>
Scalar koranyi_distance(const Algebra<Scalar>& a, const Point<Scalar>& p, const Point<Scalar>& q) {
  a.check(p);
  a.check(q);
  // q⁻¹ p = (v_p - v_q, z_p - z_q - ½[v_q, v_p])
  Point<Scalar> diff{p.v - q.v, p.z - q.z - Scalar(0.5) * a.bracket(q.v, p.v)};
  return gauge(diff);
}

/// δ_s(v, z) = (s v, s² z).
template <class Scalar>
Point<Scalar> dilate(const Algebra<Scalar>& a, Scalar s, const Point<Scalar>& p) {
  a.check(p);
  if (!(s > Scalar(0))) throw InputError("dilation factor must be positive");
  return {s * p.v, s * s * p.z};
}

/// σ(v, z) = -(|v|²/4 + J_z)⁻¹ v - (|v|⁴/16 + |z|²)⁻¹ z.
///
/// Uses (c Id + J_z)⁻¹ = (c Id - J_z) / (c² + |z|²), valid when J_z² = -|z|² Id;
/// falls back to a dense solve if the algebra failed that check.
template <class Scalar>
Point<Scalar> invert(const Algebra<Scalar>& a, const Point<Scalar>& p) {
  a.check(p);
  const Scalar v2 = p.v.squaredNorm();
  const Scalar z2 = p.z.squaredNorm();
  const Scalar g4 = v2 * v2 / Scalar(16) + z2;
  if (!(g4 > Scalar(0))) throw DomainError("the inversion sends the identity to infinity");
  const Scalar c = v2 / Scalar(4);
  typename Point<Scalar>::Vector v;
  if (a.dim_z() == 0) {
    v = -p.v / c;
  } else {
    const auto j = a.j_matrix(p.z);
    if (a.h_type_verified()) {
      v = -(c * p.v - j * p.v) / (c * c + z2);
    } else {
      typename Algebra<Scalar>::Matrix m =
          c * Algebra<Scalar>::Matrix::Identity(a.dim_v(), a.dim_v()) + j;
      v = -m.fullPivLu().solve(p.v);
    }
  }
  return {v, -p.z / g4};
}

/// Left translation by g.
template <class Scalar>
Point<Scalar> translate(const Algebra<Scalar>& a, const Point<Scalar>& g, const Point<Scalar>& p) {
  return multiply(a, g, p);
}

/// Points with every coordinate uniform in [-box, box).
template <class Scalar>
std::vector<Point<Scalar>> sample(const Algebra<Scalar>& a, std::size_t count, std::uint64_t seed,
                                  double box = 1.0) {
  Rng rng(seed);
  std::vector<Point<Scalar>> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    Point<Scalar> p{typename Point<Scalar>::Vector(a.dim_v()),
                    typename Point<Scalar>::Vector(a.dim_z())};
    for (Eigen::Index i = 0; i < a.dim_v(); ++i) p.v(i) = Scalar(uniform_real(rng, -box, box));
    for (Eigen::Index i = 0; i < a.dim_z(); ++i) p.z(i) = Scalar(uniform_real(rng, -box, box));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace metricgeo::heisenberg
