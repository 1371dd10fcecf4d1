#include "metricgeo/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metricgeo/detectors.hpp"
#include "metricgeo/errors.hpp"

namespace metricgeo::cantor {

CantorSpace::CantorSpace(int N, int M, double s, int depth)
    : N_(N), M_(M), s_(s), depth_(depth), lo_(1 - depth / 2), hi_(depth - depth / 2) {
  if (M < 2 || N < M)
    throw InputError("alphabet sizes must satisfy N >= M >= 2 (got N=" + std::to_string(N) +
                     ", M=" + std::to_string(M) + ")");
  if (!(s > 1.0)) throw InputError("base s must exceed 1");
  if (depth < 1) throw InputError("depth must be at least 1");
}

SymbolicPoint SymbolicPoint::infinity() {
  SymbolicPoint p;
  p.infinity_ = true;
  return p;
}

SymbolicPoint SymbolicPoint::from_word(int start, const std::vector<int>& word, int last) {
  SymbolicPoint p;
  p.last_ = last;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int index = start + static_cast<int>(i);
    if (index > last) break;
    if (word[i] < 1) throw InputError("digits start at 1 (index " + std::to_string(index) + ")");
    if (word[i] != 1) p.entries_.emplace_back(index, word[i]);
  }
  return p;
}

std::optional<int> SymbolicPoint::leading() const {
  if (infinity_ || entries_.empty()) return std::nullopt;
  return entries_.front().first;
}

std::optional<int> SymbolicPoint::digit(int index) const {
  if (infinity_) throw InputError("the point at infinity has no digits");
  if (index > last_) return std::nullopt;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(index, 0));
  return it != entries_.end() && it->first == index ? it->second : 1;
}

int SymbolicPoint::start() const { return entries_.empty() ? 0 : entries_.front().first; }

std::vector<int> SymbolicPoint::word() const {
  std::vector<int> w;
  if (entries_.empty()) return w;
  const int first = entries_.front().first;
  w.assign(static_cast<std::size_t>(entries_.back().first - first + 1), 1);
  for (const auto& [i, d] : entries_) w[static_cast<std::size_t>(i - first)] = d;
  return w;
}

SymbolicPoint SymbolicPoint::truncated(int last) const {
  SymbolicPoint p = *this;
  if (infinity_ || last >= last_) return p;
  p.last_ = last;
  std::erase_if(p.entries_, [&](const auto& e) { return e.first > last; });
  return p;
}

SymbolicPoint SymbolicPoint::shifted(int k) const {
  SymbolicPoint p = *this;
  if (infinity_) return p;
  for (auto& e : p.entries_) e.first -= k;
  if (last_ != kExact) p.last_ = last_ - k;
  return p;
}

std::string SymbolicPoint::label() const {
  if (infinity_) return "inf";
  std::string out;
  if (entries_.empty()) {
    out = "1";
  } else {
    out = std::to_string(start()) + ":";
    const auto w = word();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(w[i]);
    }
  }
  if (last_ != kExact) out += "~" + std::to_string(last_);
  return out;
}

void validate(const CantorSpace& space, const SymbolicPoint& p) {
  if (p.is_infinity()) return;
  for (const auto& [i, d] : p.entries())
    if (d > space.alphabet(i))
      throw InputError("digit " + std::to_string(d) + " at index " + std::to_string(i) +
                       " exceeds the alphabet size " + std::to_string(space.alphabet(i)));
}

double ExactDistance::value(double s) const { return std::pow(s, -exponent); }

std::optional<int> agreement(const SymbolicPoint& x, const SymbolicPoint& y) {
  if (x.is_infinity() || y.is_infinity())
    throw InputError("agreement is undefined at the point at infinity");
  const int common = std::min(x.last(), y.last());
  const auto& a = x.entries();
  const auto& b = y.entries();
  std::size_t i = 0, j = 0;
  int first_diff = SymbolicPoint::kExact;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      first_diff = a[i].first;
      break;
    }
    if (i == a.size() || b[j].first < a[i].first) {
      first_diff = b[j].first;
      break;
    }
    if (a[i].second != b[j].second) {
      first_diff = a[i].first;
      break;
    }
    ++i;
    ++j;
  }
  if (first_diff > common || first_diff == SymbolicPoint::kExact) return std::nullopt;
  return first_diff - 1;
}

ExactDistance distance(const SymbolicPoint& x, const SymbolicPoint& y) {
  if (auto m = agreement(x, y)) return {*m, false};
  const int common = std::min(x.last(), y.last());
  if (common == SymbolicPoint::kExact) return {SymbolicPoint::kExact, true};  // x == y
  return {common, true};
}

SymbolicPoint shift(const CantorSpace& space, const SymbolicPoint& x, int k) {
  if (k % 2 != 0 && space.N() != space.M())
    throw InputError("odd shifts do not preserve the alphabets of C_{N|M} with N != M");
  validate(space, x);
  return x.shifted(k);
}

SymbolicPoint inversion_tau(const SymbolicPoint& x) {
  if (x.is_infinity()) throw DomainError("tau is defined away from the point at infinity");
  const auto lead = x.leading();
  if (!lead) throw DomainError("tau is undefined at the base point 1");
  const int m = *lead - 1;
  return x.shifted(2 * m);
}

SymbolicPoint inversion_tau_extended(const SymbolicPoint& x) {
  if (x.is_infinity()) return SymbolicPoint::one();
  if (!x.leading()) return SymbolicPoint::infinity();
  return inversion_tau(x);
}

SymbolicPoint DigitIsometry::operator()(const SymbolicPoint& w) const {
  if (w.is_infinity()) return w;
  if (sphere_) {
    const auto m = agreement(w, sphere_->center);
    if (!m || *m != sphere_->exponent) return w;
  }
  if (swaps_.empty()) return w;
  // Materialize the digits from the lowest touched index through the last
  // determined one, apply the transpositions, and rebuild.
  const int lo = std::min(swaps_.begin()->first, w.entries().empty() ? swaps_.begin()->first
                                                                      : w.entries().front().first);
  int hi = std::max(swaps_.rbegin()->first,
                    w.entries().empty() ? lo : w.entries().back().first);
  hi = std::min(hi, w.last());
  if (hi < lo) return w;
  std::vector<int> digits(static_cast<std::size_t>(hi - lo + 1), 1);
  for (const auto& [i, d] : w.entries())
    if (i <= hi) digits[static_cast<std::size_t>(i - lo)] = d;
  for (const auto& [i, swap] : swaps_) {
    if (i > hi) break;
    auto& d = digits[static_cast<std::size_t>(i - lo)];
    if (d == swap.first)
      d = swap.second;
    else if (d == swap.second)
      d = swap.first;
  }
  return SymbolicPoint::from_word(lo, digits, w.last());
}

namespace {

std::map<int, std::pair<int, int>> transpositions(const SymbolicPoint& x, const SymbolicPoint& y,
                                                  int from) {
  std::map<int, std::pair<int, int>> swaps;
  const int common = std::min(x.last(), y.last());
  std::vector<int> indices;
  for (const auto& e : x.entries()) indices.push_back(e.first);
  for (const auto& e : y.entries()) indices.push_back(e.first);
  for (int i : indices) {
    if (i < from || i > common) continue;
    const int a = *x.digit(i), b = *y.digit(i);
    if (a != b) swaps[i] = {a, b};
  }
  return swaps;
}

}  // namespace

DigitIsometry isometry_between(const CantorSpace& space, const SymbolicPoint& x,
                               const SymbolicPoint& y) {
  if (x.is_infinity() || y.is_infinity())
    throw InputError("isometries fix the point at infinity");
  validate(space, x);
  validate(space, y);
  return DigitIsometry(transpositions(x, y, INT_MIN), std::nullopt);
}

DigitIsometry isometry_fixing(const CantorSpace& space, const SymbolicPoint& center,
                              const SymbolicPoint& y, const SymbolicPoint& b) {
  validate(space, center);
  validate(space, y);
  validate(space, b);
  const auto my = agreement(y, center), mb = agreement(b, center);
  if (!my || !mb || *my != *mb)
    throw InputError("points do not lie on a common sphere about the center");
  return DigitIsometry(transpositions(y, b, *my + 1), DigitIsometry::Sphere{center, *my});
}

std::vector<DigitIsometry> two_point_isometry(const CantorSpace& space, const SymbolicPoint& x,
                                              const SymbolicPoint& y, const SymbolicPoint& a,
                                              const SymbolicPoint& b) {
  if (distance(x, y) != distance(a, b))
    throw InputError("two-point isometry needs equal distances");
  auto first = isometry_between(space, x, a);
  auto second = isometry_fixing(space, a, first(y), b);
  return {std::move(first), std::move(second)};
}

SymbolicPoint to_sphericalized(const CantorSpace& space, const SymbolicPoint& x) {
  if (space.N() != space.M()) throw InputError("the sphericalized model is defined for C_N");
  const int N = space.N();
  SymbolicPoint out;
  if (x.is_infinity()) {
    out = SymbolicPoint::from_word(1, {1, N + 1}, SymbolicPoint::kExact);
  } else {
    validate(space, x);
    const auto lead = x.leading();
    if (!lead || *lead - 1 >= 0) {
      // ξ̂_i = ξ_{i-1}
      out = x.shifted(-1);
    } else {
      // m <= -1: ξ̂ = (1, N+1, ...) and ξ_j moves to index j - 2m + 1.
      const int m = *lead - 1;
      const int offset = -2 * m + 1;
      std::vector<int> digits(static_cast<std::size_t>(x.entries().back().first + offset), 1);
      digits[1] = N + 1;
      for (const auto& [j, d] : x.entries()) digits[static_cast<std::size_t>(j + offset - 1)] = d;
      out = SymbolicPoint::from_word(1, digits, x.is_exact() ? x.last() : x.last() + offset);
    }
  }
  for (const auto& [i, d] : out.entries()) {
    const int limit = i == 2 ? N + 1 : N;
    if (i < 1 || (i == 1 && d != 1) || d > limit)
      throw std::logic_error("sphericalized point leaves the alphabet of the hat model");
  }
  return out;
}

namespace {

// Every assignment of the indices [from, hi] on top of `prefix`, lexicographic.
void extend(const CantorSpace& space, int index, std::vector<int>& digits, int base,
            const std::optional<std::pair<int, int>>& excluded, std::vector<SymbolicPoint>& out) {
  if (index > space.window_hi()) {
    out.push_back(SymbolicPoint::from_word(base, digits));
    return;
  }
  for (int d = 1; d <= space.alphabet(index); ++d) {
    if (excluded && excluded->first == index && excluded->second == d) continue;
    digits[static_cast<std::size_t>(index - base)] = d;
    extend(space, index + 1, digits, base, excluded, out);
  }
  digits[static_cast<std::size_t>(index - base)] = 1;
}

std::vector<SymbolicPoint> enumerate_from(const CantorSpace& space, const SymbolicPoint& center,
                                          int k, bool sphere) {
  if (center.is_infinity()) throw InputError("center must be a finite point");
  validate(space, center);
  const int lo = space.window_lo(), hi = space.window_hi();
  if (k + 1 < lo || k + 1 > hi)
    throw InputError("radius exponent " + std::to_string(k) + " outside the depth-" +
                     std::to_string(space.depth()) + " window [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  for (const auto& [i, d] : center.entries())
    if (i < lo || i > hi) throw InputError("center has digits outside the enumeration window");
  const int base = std::min(lo, k + 1);
  std::vector<int> digits(static_cast<std::size_t>(hi - base + 1), 1);
  for (int i = base; i <= k; ++i) digits[static_cast<std::size_t>(i - base)] = *center.digit(i);
  std::optional<std::pair<int, int>> excluded;
  if (sphere) excluded = std::make_pair(k + 1, *center.digit(k + 1));
  std::vector<SymbolicPoint> out;
  extend(space, k + 1, digits, base, excluded, out);
  return out;
}

}  // namespace

std::vector<SymbolicPoint> enumerate(const CantorSpace& space) {
  std::vector<SymbolicPoint> out;
  std::vector<int> digits(static_cast<std::size_t>(space.window_hi() - space.window_lo() + 1), 1);
  extend(space, space.window_lo(), digits, space.window_lo(), std::nullopt, out);
  return out;
}

std::vector<SymbolicPoint> enumerate_sphere(const CantorSpace& space, const SymbolicPoint& center,
                                            int k) {
  return enumerate_from(space, center, k, true);
}

std::vector<SymbolicPoint> enumerate_ball(const CantorSpace& space, const SymbolicPoint& center,
                                          int k) {
  return enumerate_from(space, center, k, false);
}

FiniteMetricSpace to_metric_space(const CantorSpace& space, const std::vector<SymbolicPoint>& pts) {
  const auto n = static_cast<Index>(pts.size());
  auto t = tabulate(n, [&](Index i, Index j) {
    const auto d = distance(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
    if (d.bounded)
      throw InputError("distance between " + pts[static_cast<std::size_t>(i)].label() + " and " +
                       pts[static_cast<std::size_t>(j)].label() + " is below the truncation depth");
    return d.value(space.s());
  });
  std::vector<std::string> labels;
  for (const auto& p : pts) labels.push_back(p.label());
  nlohmann::json meta{{"generator",
                       {{"kind", "cantor"},
                        {"N", space.N()},
                        {"M", space.M()},
                        {"s", space.s()},
                        {"depth", space.depth()}}}};
  return FiniteMetricSpace(std::move(labels), std::move(t), std::nullopt, std::move(meta));
}

std::size_t delta_census(const CantorSpace& space, const SymbolicPoint& center, int k,
                         double delta) {
  const auto ball = enumerate_ball(space, center, k);
  return delta_components(to_metric_space(space, ball), delta).size();
}

}  // namespace metricgeo::cantor
