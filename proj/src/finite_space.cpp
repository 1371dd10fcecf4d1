#include "metricgeo/finite_space.hpp"

#include <cmath>
#include <string>

#include "metricgeo/detectors.hpp"
#include "metricgeo/errors.hpp"

namespace metricgeo {

namespace {

bool ideal_row(const DistanceTable& t, Index r) {
  for (Index j = 0; j < t.cols(); ++j)
    if (j != r && !std::isinf(t(r, j))) return false;
  return t.rows() > 1;
}

}  // namespace

void check_table_shape(const DistanceTable& t) {
  if (t.rows() != t.cols())
    throw InputError("distance table is " + std::to_string(t.rows()) + "x" +
                     std::to_string(t.cols()) + ", expected square");
  for (Index i = 0; i < t.rows(); ++i) {
    if (t(i, i) != 0.0)
      throw InputError("nonzero diagonal entry at (" + std::to_string(i) + "," +
                       std::to_string(i) + ")");
    for (Index j = i + 1; j < t.cols(); ++j) {
      const double a = t(i, j), b = t(j, i);
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (std::isnan(a) || std::isnan(b)) throw InputError("NaN entry at " + at);
      if (a != b) throw InputError("asymmetric entries at " + at);
      if (a < 0.0) throw InputError("negative entry at " + at);
      if (a == 0.0) throw InputError("zero distance between distinct points at " + at);
    }
  }
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, DistanceTable dist,
                                     std::optional<Index> infinity, nlohmann::json metadata)
    : labels_(std::move(labels)),
      dist_(std::move(dist)),
      infinity_(infinity),
      metadata_(std::move(metadata)) {
  check_table_shape(dist_);
  if (static_cast<Index>(labels_.size()) != dist_.rows())
    throw InputError("label count " + std::to_string(labels_.size()) +
                     " does not match table size " + std::to_string(dist_.rows()));
  if (infinity_ && (*infinity_ < 0 || *infinity_ >= dist_.rows()))
    throw InputError("infinity index out of range");
  for (Index i = 0; i < dist_.rows(); ++i) {
    if (infinity_ && i == *infinity_) continue;
    for (Index j = 0; j < dist_.cols(); ++j) {
      if (infinity_ && j == *infinity_) continue;
      if (std::isinf(dist_(i, j)))
        throw InputError("infinite distance between finite points (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
    }
  }
  if (infinity_ && !ideal_row(dist_, *infinity_)) {
    for (Index j = 0; j < dist_.cols(); ++j)
      if (std::isinf(dist_(*infinity_, j)))
        throw InputError("row of infinity mixes finite and infinite entries");
  }
}

FiniteMetricSpace FiniteMetricSpace::from_table(DistanceTable dist) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(dist.rows()));
  for (Index i = 0; i < dist.rows(); ++i) labels.push_back(std::to_string(i));
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

bool FiniteMetricSpace::has_ideal_infinity() const {
  return infinity_ && ideal_row(dist_, *infinity_);
}

std::vector<Index> FiniteMetricSpace::finite_indices() const {
  std::vector<Index> out;
  const bool skip = has_ideal_infinity();
  for (Index i = 0; i < size(); ++i)
    if (!skip || i != *infinity_) out.push_back(i);
  return out;
}

std::optional<Index> FiniteMetricSpace::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Index>(i);
  return std::nullopt;
}

Index FiniteMetricSpace::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown point label '" + label + "'");
}

FiniteMetricSpace FiniteMetricSpace::restrict_to(const std::vector<Index>& indices) const {
  const auto m = static_cast<Index>(indices.size());
  DistanceTable t(m, m);
  std::vector<std::string> labels;
  std::optional<Index> inf;
  for (Index a = 0; a < m; ++a) {
    const Index i = indices[static_cast<std::size_t>(a)];
    if (i < 0 || i >= size()) throw InputError("restriction index out of range");
    labels.push_back(label(i));
    if (infinity_ && i == *infinity_) inf = a;
    for (Index b = 0; b < m; ++b) t(a, b) = dist_(i, indices[static_cast<std::size_t>(b)]);
  }
  return FiniteMetricSpace(std::move(labels), std::move(t), inf, metadata_);
}

DistanceTable euclidean_table(const Eigen::MatrixXd& points) {
  return tabulate(points.rows(), [&](Index i, Index j) {
    return (points.row(i) - points.row(j)).norm();
  });
}

void to_json(nlohmann::json& j, const PropertyReport& r) {
  j = nlohmann::json{{"property", r.property},
                     {"holds", r.holds},
                     {"constant", r.constant},
                     {"witness", r.witness},
                     {"tolerance", r.tolerance},
                     {"enumerated", r.enumerated},
                     {"capped", r.capped}};
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  if (!r.details.empty()) j["details"] = r.details;
}

}  // namespace metricgeo
