#pragma once

#include <cstdint>
#include <vector>

#include "metricgeo/detectors.hpp"
#include "metricgeo/heisenberg.hpp"

namespace metricgeo {

struct HeisenbergSuite {
  heisenberg::Field field = heisenberg::Field::C;
  int n = 1;
  std::size_t count = 200;
  std::uint64_t seed = kDefaultSeed;
  double box = 1.0;
  double tolerance = 1e-9;
  std::uint64_t max_quadruples = 100'000;
};

/// Triangle inequality, inversion identity, involution, gauge reciprocity,
/// H-type identity, dilation scaling, Ptolemy, and Möbius distortion of σ,
/// translations and dilations on one seeded sample.
std::vector<PropertyReport> verify_heisenberg(const HeisenbergSuite& suite);

struct CantorSuite {
  int N = 3;
  int M = 2;
  double s = 2.0;
  int depth = 6;
  std::uint64_t max_quadruples = 100'000;
  std::uint64_t seed = kDefaultSeed;
};

/// Exact ultrametricity, τ involution and inversion identity, isometry
/// checks, δ-component census of S(𝟏;1) and S(𝟏;s), detector checks on the
/// exported table, and the sphericalization comparability constant (C_N only).
std::vector<PropertyReport> verify_cantor(const CantorSuite& suite);

}  // namespace metricgeo
