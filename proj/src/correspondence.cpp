#include "metricgeo/correspondence.hpp"

#include <string>

#include "metricgeo/errors.hpp"

namespace metricgeo {

PointCorrespondence::PointCorrespondence(FiniteMetricSpace source, FiniteMetricSpace target,
                                         std::vector<Pair> pairs)
    : source_(std::move(source)), target_(std::move(target)), pairs_(std::move(pairs)) {
  const Index n = source_.size();
  if (target_.size() != n || static_cast<Index>(pairs_.size()) != n)
    throw InputError("correspondence is not a bijection: " + std::to_string(source_.size()) +
                     " source points, " + std::to_string(target_.size()) + " target points, " +
                     std::to_string(pairs_.size()) + " pairs");
  image_.assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const auto& [s, t] : pairs_) {
    if (s < 0 || s >= n || t < 0 || t >= n)
      throw InputError("correspondence pair (" + std::to_string(s) + "," + std::to_string(t) +
                       ") out of range");
    auto& img = image_[static_cast<std::size_t>(s)];
    if (img != -1) throw InputError("source point " + std::to_string(s) + " paired twice");
    if (hit[static_cast<std::size_t>(t)])
      throw InputError("target point " + std::to_string(t) + " paired twice");
    img = t;
    hit[static_cast<std::size_t>(t)] = true;
  }
}

PointCorrespondence PointCorrespondence::identity(const FiniteMetricSpace& space) {
  std::vector<Pair> pairs;
  for (Index i = 0; i < space.size(); ++i) pairs.emplace_back(i, i);
  return PointCorrespondence(space, space, std::move(pairs));
}

PointCorrespondence PointCorrespondence::inverse() const {
  std::vector<Pair> flipped;
  flipped.reserve(pairs_.size());
  for (const auto& [s, t] : pairs_) flipped.emplace_back(t, s);
  return PointCorrespondence(target_, source_, std::move(flipped));
}

PointCorrespondence PointCorrespondence::then(const PointCorrespondence& next) const {
  if (next.source().labels() != target_.labels())
    throw InputError("cannot compose: intermediate spaces carry different labels");
  std::vector<Pair> composed;
  composed.reserve(pairs_.size());
  for (const auto& [s, t] : pairs_) composed.emplace_back(s, next.image(t));
  return PointCorrespondence(source_, next.target(), std::move(composed));
}

}  // namespace metricgeo
