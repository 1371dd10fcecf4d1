#pragma once

#include <cstdint>
#include <vector>

#include "metricgeo/finite_space.hpp"

namespace metricgeo {

/// Best quasi-triangle constant max d(x,y) / (d(x,z) + d(z,y)).
/// Witness is the path [x, z, y]. Holds iff the constant is <= 1 + tolerance.
PropertyReport validate_metric(const FiniteMetricSpace& space,
                               double tolerance = kDefaultTolerance);

/// Throws InputError naming the first asymmetric, negative or nonzero-diagonal
/// entry. FiniteMetricSpace already enforces this; exposed for raw tables.
void check_table_shape(const DistanceTable& table);

struct QuadrupleOptions {
  std::uint64_t cap = kDefaultQuadrupleCap;
  std::uint64_t seed = kDefaultSeed;
};

/// Largest ratio of one pairing product to the sum of the other two, over
/// 4-subsets of distinct points. Exhaustive when C(n,4) <= cap, otherwise
/// `cap` subsets drawn with the recorded seed.
PropertyReport ptolemy_constant(const FiniteMetricSpace& space,
                                QuadrupleOptions options = {},
                                double tolerance = kDefaultTolerance);

/// max d(x,z) / max(d(x,y), d(y,z)); witness [x, y, z].
PropertyReport ultrametric_check(const FiniteMetricSpace& space,
                                 double tolerance = kDefaultTolerance);

/// Smallest C such that every proper closed ball B(x;r), r an achieved
/// distance at least the nearest-neighbour distance of x, meets the annulus
/// B(x;r) \ B(x;r/C). Reported as the infimum r / max{d(x,y) <= r}.
/// Witness [x, y, u, v]: centre, annulus point, pair realizing r.
PropertyReport uniform_perfectness_constant(const FiniteMetricSpace& space,
                                            double tolerance = kDefaultTolerance);

inline constexpr double kDefaultDisconnectednessThreshold = 0.5;

/// Largest alpha in (0,1] such that no alpha-chain with at least two steps
/// exists; the witness is a chain realizing the infimum. Holds iff
/// alpha >= threshold.
PropertyReport uniform_disconnectedness(
    const FiniteMetricSpace& space,
    double threshold = kDefaultDisconnectednessThreshold,
    double tolerance = kDefaultTolerance);

/// Partition into maximal delta-connected subsets (hops strictly < delta).
/// Components are sorted internally and ordered by smallest member.
std::vector<std::vector<Index>> delta_components(const FiniteMetricSpace& space,
                                                 double delta);

/// Quasi-distance table exp(-<x,y>_o) with the Gromov product
/// <x,y>_o = (d(x,o) + d(y,o) - d(x,y)) / 2 and zero diagonal.
FiniteMetricSpace bourdon_visual(const FiniteMetricSpace& space, Index o);

}  // namespace metricgeo
