#pragma once

#include <cstdint>
#include <vector>

#include "metricgeo/correspondence.hpp"
#include "metricgeo/detectors.hpp"

namespace metricgeo {

/// d(a,c) d(b,d) / (d(a,d) d(b,c)) for four distinct points. Factors that
/// involve an ideal ∞ are dropped (the pointwise limit of the formula).
double cross_ratio(const FiniteMetricSpace& space, Index a, Index b, Index c, Index d);

struct SimilarityFit {
  double lambda = 1.0;
  double deviation = 0.0;  // max |log(d'/d) - log lambda|
};

struct DistortionReport {
  double moebius_log_deviation = 0.0;
  double sqm_constant = 1.0;
  double bilip_constant = 1.0;
  SimilarityFit similarity;
  std::uint64_t enumerated = 0;  // quadruples
  std::uint64_t pairs = 0;
  std::optional<std::uint64_t> seed;
  bool capped = false;
  std::vector<Index> quadruple_witness;  // source indices
  std::vector<Index> pair_witness;
};

void to_json(nlohmann::json& j, const DistortionReport& r);

/// Cross-ratio and pair-distance distortion of a correspondence.
///
/// For every enumerated 4-subset the three pairing products P1, P2, P3 are
/// compared with their images; sqm_constant is the largest
/// (P'_i P_j) / (P'_j P_i), which covers every ordering of the four points and
/// both directions of the strongly quasi-Möbius inequality. Sampling (when
/// C(n,4) exceeds the cap) draws positions in the pair list.
DistortionReport distortion_profile(const PointCorrespondence& map,
                                    QuadrupleOptions options = {});

/// Ptolemy equality along a claimed circular order: the largest
/// |d(x,z) d(y,u) / (d(x,y) d(z,u) + d(x,u) d(y,z)) - 1| over order-respecting
/// quadruples x < y < z < u of the cycle.
PropertyReport ptolemy_circle_check(const FiniteMetricSpace& space,
                                    const std::vector<Index>& cycle,
                                    double tolerance = kDefaultTolerance);

}  // namespace metricgeo
