#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace metricgeo {

using Index = Eigen::Index;
using DistanceTable = Eigen::MatrixXd;

/// Labeled point set with a symmetric distance (or quasi-distance) table.
///
/// The optional infinity index marks the point playing the role of ∞. Its
/// row either holds finite values (inverted and sphericalized spaces, where
/// ∞ is an ordinary point) or +inf throughout, in which case it is an ideal
/// point: detectors skip it and cross-ratios use the dropped-factor limit.
///
/// Construction checks the table shape only: square, symmetric, zero
/// diagonal, positive off-diagonal. The triangle inequality is a property
/// measured by validate_metric, not an invariant of this type.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> labels, DistanceTable dist,
                    std::optional<Index> infinity = std::nullopt,
                    nlohmann::json metadata = nlohmann::json::object());

  /// Labels "0", "1", ... for an unlabeled table.
  static FiniteMetricSpace from_table(DistanceTable dist);

  Index size() const { return dist_.rows(); }
  double operator()(Index i, Index j) const { return dist_(i, j); }
  const DistanceTable& table() const { return dist_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }
  std::optional<Index> infinity() const { return infinity_; }
  const nlohmann::json& metadata() const { return metadata_; }
  nlohmann::json& metadata() { return metadata_; }

  bool has_ideal_infinity() const;
  /// Indices of every point except an ideal ∞.
  std::vector<Index> finite_indices() const;
  std::optional<Index> find(const std::string& label) const;
  Index index_of(const std::string& label) const;

  /// Sub-space on the given indices, in the given order.
  FiniteMetricSpace restrict_to(const std::vector<Index>& indices) const;

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.labels_ == b.labels_ && a.infinity_ == b.infinity_ &&
           a.dist_.rows() == b.dist_.rows() && a.dist_ == b.dist_;
  }

 private:
  std::vector<std::string> labels_;
  DistanceTable dist_;
  std::optional<Index> infinity_;
  nlohmann::json metadata_ = nlohmann::json::object();
};

/// Builds a table by evaluating dist(i, j) on the upper triangle and mirroring.
template <class Distance>
DistanceTable tabulate(Index n, Distance&& dist) {
  DistanceTable t = DistanceTable::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) t(i, j) = t(j, i) = dist(i, j);
  return t;
}

/// Euclidean distance table of the rows of `points`.
DistanceTable euclidean_table(const Eigen::MatrixXd& points);

/// Outcome of a property detector.
struct PropertyReport {
  std::string property;
  bool holds = false;
  double constant = 0.0;
  std::vector<Index> witness;
  double tolerance = 0.0;
  std::optional<std::uint64_t> seed;
  std::uint64_t enumerated = 0;
  bool capped = false;
  /// Extra named values (e.g. census counts); serialized verbatim.
  nlohmann::json details = nlohmann::json::object();
};

void to_json(nlohmann::json& j, const PropertyReport& r);

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultQuadrupleCap = 50'000'000;
inline constexpr std::uint64_t kDefaultSeed = 42;

}  // namespace metricgeo
