#pragma once

#include "planeval/arith.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace planeval {

// 1-based index of a point in the blow-up sequence.
using PointId = std::size_t;

struct PointRecord {
  PointId id = 0;
  std::optional<PointId> satellite_of;
};

// A simple sequence of point blow-ups. Point i >= 2 is implicitly
// proximate to i-1; satellite_of stores the single extra proximity.
class ProximityCluster {
 public:
  ProximityCluster() = default;

  // Throws NonConsecutiveIds, SatelliteOfSelfOrLater, SatelliteTargetInvalid.
  static ProximityCluster validate(const std::vector<PointRecord>& points);
  // sats[k] is satellite_of for point k+1.
  static ProximityCluster from_satellites(const std::vector<std::optional<PointId>>& sats);

  std::size_t size() const { return sat_.size(); }
  std::optional<PointId> satellite_of(PointId i) const;
  bool is_satellite(PointId i) const { return satellite_of(i).has_value(); }

  // p_i -> p_j
  bool proximate(PointId i, PointId j) const;
  // Points p_i is proximate to, ascending.
  std::vector<PointId> proximity_set(PointId i) const;
  // {k <= n : p_k -> p_j}, ascending.
  std::vector<PointId> proximate_points(PointId j, PointId n) const;

  ProximityCluster prefix(PointId n) const;
  // Appends a point; throws like validate.
  ProximityCluster extended(std::optional<PointId> satellite_of) const;
  std::vector<PointRecord> records() const;

  bool operator==(const ProximityCluster&) const = default;

 private:
  explicit ProximityCluster(std::vector<std::optional<PointId>> sat) : sat_(std::move(sat)) {}
  void check_index(PointId i) const;

  std::vector<std::optional<PointId>> sat_;
};

// Values m_1..m_n of the divisorial valuation of p_n at the maximal
// ideals, via the proximity equalities solved back to front.
std::vector<Integer> multiplicity_sequence(const ProximityCluster& cluster, PointId n);

// Inverse of multiplicity_sequence(c, c.size()); throws SchemaError if the
// sequence is not the multiplicity sequence of any cluster.
ProximityCluster cluster_from_multiplicities(const std::vector<Integer>& m);

class DualGraph {
 public:
  DualGraph() = default;
  // Vertices 1..n.
  DualGraph(std::size_t n, const std::vector<std::pair<PointId, PointId>>& edges);

  std::size_t size() const { return adj_.empty() ? 0 : adj_.size() - 1; }
  const std::vector<PointId>& neighbors(PointId v) const;
  std::size_t degree(PointId v) const { return neighbors(v).size(); }
  bool adjacent(PointId a, PointId b) const;
  // Sorted pairs (i, j) with i < j.
  std::vector<std::pair<PointId, PointId>> edges() const;

  bool is_tree() const;
  DualGraph without_edge(PointId a, PointId b) const;
  // Vertices reachable from v, ascending.
  std::vector<PointId> component(PointId v) const;

  // Root-path order; requires a tree.
  bool precedes(PointId a, PointId b) const;
  PointId parent(PointId v) const;
  std::vector<PointId> path(PointId a, PointId b) const;

 private:
  void root_tree();

  std::vector<std::vector<PointId>> adj_;
  std::vector<PointId> parent_;
  std::vector<std::size_t> depth_;
  bool tree_ = false;
};

DualGraph dual_graph(const ProximityCluster& cluster, PointId n);
bool precedes(const DualGraph& graph, PointId a, PointId b);

struct GraphShape {
  std::vector<PointId> dead_ends;      // l_1..l_g, plus l_{g+1} = n when p_n is free
  std::vector<PointId> star_vertices;  // st_1..st_g; st_g = n when p_n is satellite
  std::size_t g = 0;
  std::size_t tail_length = 0;
  std::vector<std::vector<PointId>> pairs;  // pairs[j-1]: vertices of the j-th pair, ascending
  std::map<PointId, std::set<std::size_t>> pair_membership;
};

GraphShape graph_shape(const DualGraph& graph, const ProximityCluster& cluster);

}  // namespace planeval
