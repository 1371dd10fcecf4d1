#pragma once

#include <utility>
#include <vector>

#include "metricgeo/finite_space.hpp"

namespace metricgeo {

/// A bijection between the points of two finite spaces.
///
/// Pairs are kept in construction order; quadruple sampling in the
/// distortion estimators draws positions in this list, so a correspondence
/// and its inverse see mirrored configuration sets.
class PointCorrespondence {
 public:
  using Pair = std::pair<Index, Index>;

  PointCorrespondence(FiniteMetricSpace source, FiniteMetricSpace target, std::vector<Pair> pairs);

  static PointCorrespondence identity(const FiniteMetricSpace& space);

  const FiniteMetricSpace& source() const { return source_; }
  const FiniteMetricSpace& target() const { return target_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  Index size() const { return static_cast<Index>(pairs_.size()); }

  /// Target index of a source index.
  Index image(Index source_index) const { return image_[static_cast<std::size_t>(source_index)]; }

  PointCorrespondence inverse() const;

  /// `next` after `*this`; next.source() must carry the labels of target().
  PointCorrespondence then(const PointCorrespondence& next) const;

 private:
  FiniteMetricSpace source_;
  FiniteMetricSpace target_;
  std::vector<Pair> pairs_;
  std::vector<Index> image_;
};

/// Correspondence sample[i] -> map(sample[i]) with tables from `dist`.
/// Labels default to positional indices on both sides.
template <class Point, class Map, class Dist>
PointCorrespondence correspondence_from_map(const std::vector<Point>& sample, Map&& map,
                                            Dist&& dist) {
  std::vector<Point> images;
  images.reserve(sample.size());
  for (const auto& p : sample) images.push_back(map(p));
  const auto n = static_cast<Index>(sample.size());
  auto src = tabulate(n, [&](Index i, Index j) {
    return dist(sample[static_cast<std::size_t>(i)], sample[static_cast<std::size_t>(j)]);
  });
  auto dst = tabulate(n, [&](Index i, Index j) {
    return dist(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
  });
  std::vector<PointCorrespondence::Pair> pairs;
  for (Index i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return PointCorrespondence(FiniteMetricSpace::from_table(std::move(src)),
                             FiniteMetricSpace::from_table(std::move(dst)), std::move(pairs));
}

}  // namespace metricgeo
