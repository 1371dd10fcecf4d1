#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metricgeo/finite_space.hpp"

namespace metricgeo::cantor {

/// C_{N|M} with base s: digits in {1..N} at odd indices and {1..M} at even
/// indices, all digits 1 far enough to the left. M == N gives C_N.
///
/// The truncation depth D selects the window of D consecutive indices
/// [1 - D/2, D - D/2] used for enumeration; it always contains indices 0
/// and 1 once D >= 2.
class CantorSpace {
 public:
  CantorSpace(int N, int M, double s, int depth);

  int N() const { return N_; }
  int M() const { return M_; }
  double s() const { return s_; }
  int depth() const { return depth_; }
  int window_lo() const { return lo_; }
  int window_hi() const { return hi_; }
  int alphabet(int index) const { return index % 2 != 0 ? N_ : M_; }

 private:
  int N_, M_;
  double s_;
  int depth_;
  int lo_, hi_;
};

/// A symbolic sequence (ξ_i), i ∈ ℤ.
///
/// Stored as the sorted list of non-1 digits. Digits at indices above
/// last() are undetermined; exact points (finitely many non-1 digits, the
/// rest 1) have last() == kExact. The point at infinity is a separate marker.
class SymbolicPoint {
 public:
  static constexpr int kExact = INT_MAX;

  /// The constant sequence 𝟏.
  static SymbolicPoint one() { return SymbolicPoint(); }
  static SymbolicPoint infinity();
  /// Digits word[0..] at indices start, start+1, ...; 1 elsewhere. With
  /// `last` below kExact, digits after `last` are undetermined.
  static SymbolicPoint from_word(int start, const std::vector<int>& word, int last = kExact);

  bool is_infinity() const { return infinity_; }
  bool is_exact() const { return last_ == kExact; }
  int last() const { return last_; }
  /// Index of the first non-1 digit, if one is determined.
  std::optional<int> leading() const;
  /// Digit at `index`, or nullopt above last().
  std::optional<int> digit(int index) const;
  const std::vector<std::pair<int, int>>& entries() const { return entries_; }

  /// Canonical start (first non-1 index) and the digit word through the last
  /// non-1 digit; the empty word stands for 𝟏.
  int start() const;
  std::vector<int> word() const;

  SymbolicPoint truncated(int last) const;
  /// Reindexes digits: the digit at index j moves to j - k.
  SymbolicPoint shifted(int k) const;

  /// "1", "inf", or "start:d.d.d" with "~last" appended when truncated.
  std::string label() const;

  friend bool operator==(const SymbolicPoint&, const SymbolicPoint&) = default;
  friend auto operator<=>(const SymbolicPoint&, const SymbolicPoint&) = default;

 private:
  std::vector<std::pair<int, int>> entries_;  // (index, digit != 1), ascending
  int last_ = kExact;
  bool infinity_ = false;
};

/// Parity-alphabet check; throws InputError naming the offending index.
void validate(const CantorSpace& space, const SymbolicPoint& p);

/// ρ_s = s^{-exponent}. When `bounded`, the points agree through the last
/// determined index and only ρ_s <= s^{-exponent} is known.
struct ExactDistance {
  int exponent = 0;
  bool bounded = false;
  double value(double s) const;
  friend bool operator==(const ExactDistance&, const ExactDistance&) = default;
};

/// m(x, y) = sup{m : x_i = y_i for all i <= m}, or nullopt when the points
/// agree on every determined index.
std::optional<int> agreement(const SymbolicPoint& x, const SymbolicPoint& y);

ExactDistance distance(const SymbolicPoint& x, const SymbolicPoint& y);

/// T^k: (T^k ξ)_i = ξ_{i+k}, so agreement indices drop by k and distances
/// scale by s^k. Odd k is rejected when N != M.
SymbolicPoint shift(const CantorSpace& space, const SymbolicPoint& x, int k);

/// τ(ξ) = T^{2m}(ξ) with m = m(ξ, 𝟏); an involution of C_{N|M} \ {𝟏}.
SymbolicPoint inversion_tau(const SymbolicPoint& x);

/// τ extended to the sphericalization: 𝟏 <-> ∞.
SymbolicPoint inversion_tau_extended(const SymbolicPoint& x);

/// Isometry built from per-index transpositions ι_i. When restricted to a
/// sphere S(center; s^{-k}) it acts only on that sphere and is the identity
/// elsewhere; the transposition at index k+1 then fixes center's digit.
class DigitIsometry {
 public:
  struct Sphere {
    SymbolicPoint center;
    int exponent;
  };

  DigitIsometry() = default;
  DigitIsometry(std::map<int, std::pair<int, int>> swaps, std::optional<Sphere> sphere)
      : swaps_(std::move(swaps)), sphere_(std::move(sphere)) {}

  SymbolicPoint operator()(const SymbolicPoint& w) const;
  const std::map<int, std::pair<int, int>>& swaps() const { return swaps_; }
  const std::optional<Sphere>& sphere() const { return sphere_; }

 private:
  std::map<int, std::pair<int, int>> swaps_;
  std::optional<Sphere> sphere_;
};

/// Isometry sending x to y (transpose x_i and y_i wherever they differ).
DigitIsometry isometry_between(const CantorSpace& space, const SymbolicPoint& x,
                               const SymbolicPoint& y);

/// Isometry fixing `center` and sending y to b, where y and b lie on the
/// same sphere about center.
DigitIsometry isometry_fixing(const CantorSpace& space, const SymbolicPoint& center,
                              const SymbolicPoint& y, const SymbolicPoint& b);

/// Two-point isometry: x -> a, y -> b whenever ρ(x,y) = ρ(a,b).
std::vector<DigitIsometry> two_point_isometry(const CantorSpace& space, const SymbolicPoint& x,
                                              const SymbolicPoint& y, const SymbolicPoint& a,
                                              const SymbolicPoint& b);

/// Bijection C_N ∪ {∞} -> Ĉ_N (indices >= 1, ξ̂_2 ∈ {1..N+1}).
SymbolicPoint to_sphericalized(const CantorSpace& space, const SymbolicPoint& x);

/// Exact representatives (1 outside the window) of every window word, in
/// lexicographic order.
std::vector<SymbolicPoint> enumerate(const CantorSpace& space);

/// Window points at exact distance s^{-k} from center.
std::vector<SymbolicPoint> enumerate_sphere(const CantorSpace& space, const SymbolicPoint& center,
                                            int k);

/// Window points within distance s^{-k} of center.
std::vector<SymbolicPoint> enumerate_ball(const CantorSpace& space, const SymbolicPoint& center,
                                          int k);

/// Floating-point distance table; throws if any distance is only bounded.
FiniteMetricSpace to_metric_space(const CantorSpace& space, const std::vector<SymbolicPoint>& pts);

/// Number of delta-components of the closed ball of radius s^{-k} about center.
std::size_t delta_census(const CantorSpace& space, const SymbolicPoint& center, int k,
                         double delta);

}  // namespace metricgeo::cantor
