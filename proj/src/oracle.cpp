#include "planeval/oracle.hpp"

#include "planeval/error.hpp"

#include <algorithm>

namespace planeval {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::IndexOutOfRange, "empty range");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

namespace {

bool bernoulli(std::mt19937_64& rng, const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  Integer den = p.get_den();
  if (!den.fits_ulong_p()) throw Error(ErrorCode::SchemaError, "probability denominator too large");
  return Integer(uniform_below(rng, den.get_ui())) < p.get_num();
}

}  // namespace

ProximityCluster random_cluster(std::size_t n, const Rational& satellite_probability, std::mt19937_64& rng) {
  std::vector<std::optional<PointId>> sats{std::nullopt};
  ProximityCluster c = ProximityCluster::from_satellites(sats);
  for (PointId i = 2; i <= n; ++i) {
    std::vector<PointId> targets = c.proximity_set(i - 1);
    std::optional<PointId> s;
    if (!targets.empty() && bernoulli(rng, satellite_probability)) {
      s = targets[uniform_below(rng, targets.size())];
    }
    c = c.extended(s);
  }
  return c;
}

ProximityCluster random_cluster(const ClusterGenSpec& spec) {
  if (spec.max_points == 0) throw Error(ErrorCode::IndexOutOfRange, "max_points must be positive");
  std::mt19937_64 rng(spec.seed);
  std::size_t n = 1 + uniform_below(rng, spec.max_points);
  return random_cluster(n, spec.satellite_probability, rng);
}

Integer noether_intersection_oracle(const ProximityCluster& cluster, PointId i, PointId j) {
  auto a = multiplicity_sequence(cluster, i);
  auto b = multiplicity_sequence(cluster, j);
  Integer s = 0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) s += a[k] * b[k];
  return s;
}

ExactScalar polygon_area(const std::vector<Point2>& vertices) {
  if (vertices.size() < 3) throw Error(ErrorCode::DegeneratePolygon, "fewer than three vertices");
  ExactScalar a = signed_area(vertices);
  if (a.sign() == 0) throw Error(ErrorCode::DegeneratePolygon, "zero area");
  return a.sign() < 0 ? -a : a;
}

}  // namespace planeval
