#pragma once

#include "planeval/arith.hpp"
#include "planeval/cluster.hpp"
#include "planeval/exact_scalar.hpp"
#include "planeval/geometry.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace planeval {

struct ClusterGenSpec {
  std::size_t max_points = 1;
  Rational satellite_probability = 0;
  std::uint64_t seed = 0;
};

// Uniform integer in [0, bound) from a 64-bit engine, independent of the
// standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Size drawn uniformly from 1..max_points; each point after the second is
// satellite with the given probability, its target drawn uniformly from the
// legal ones.
ProximityCluster random_cluster(const ClusterGenSpec& spec);
ProximityCluster random_cluster(std::size_t n, const Rational& satellite_probability, std::mt19937_64& rng);

// Dot product of the multiplicity sequences of nu_i and nu_j.
Integer noether_intersection_oracle(const ProximityCluster& cluster, PointId i, PointId j);

// Exact shoelace area (absolute value). Throws DegeneratePolygon.
ExactScalar polygon_area(const std::vector<Point2>& vertices);

}  // namespace planeval
