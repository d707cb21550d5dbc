#include "planeval/cluster.hpp"

#include "planeval/error.hpp"

#include <algorithm>
#include <string>

namespace planeval {

namespace {

std::string idx(PointId i) { return std::to_string(i); }

}  // namespace

ProximityCluster ProximityCluster::validate(const std::vector<PointRecord>& points) {
  if (points.empty()) throw Error(ErrorCode::NonConsecutiveIds, "cluster has no points");
  std::vector<std::optional<PointId>> sat;
  sat.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].id != k + 1) {
      throw Error(ErrorCode::NonConsecutiveIds,
                  "expected point id " + idx(k + 1) + ", got " + idx(points[k].id));
    }
    sat.push_back(points[k].satellite_of);
  }
  return from_satellites(sat);
}

ProximityCluster ProximityCluster::from_satellites(const std::vector<std::optional<PointId>>& sats) {
  if (sats.empty()) throw Error(ErrorCode::NonConsecutiveIds, "cluster has no points");
  ProximityCluster c;
  for (const auto& s : sats) c = c.extended(s);
  return c;
}

ProximityCluster ProximityCluster::extended(std::optional<PointId> satellite_of) const {
  PointId i = size() + 1;
  if (satellite_of) {
    PointId j = *satellite_of;
    if (j == 0 || j >= i) {
      throw Error(ErrorCode::SatelliteOfSelfOrLater,
                  "p" + idx(i) + " cannot be satellite of p" + idx(j));
    }
    if (j == i - 1 || !proximate(i - 1, j)) {
      throw Error(ErrorCode::SatelliteTargetInvalid,
                  "p" + idx(i) + " satellite of p" + idx(j) + " requires p" + idx(i - 1) +
                      " proximate to p" + idx(j));
    }
  }
  auto sat = sat_;
  sat.push_back(satellite_of);
  return ProximityCluster(std::move(sat));
}

void ProximityCluster::check_index(PointId i) const {
  if (i == 0 || i > size()) {
    throw Error(ErrorCode::IndexOutOfRange, "point " + idx(i) + " outside 1.." + idx(size()));
  }
}

std::optional<PointId> ProximityCluster::satellite_of(PointId i) const {
  check_index(i);
  return sat_[i - 1];
}

bool ProximityCluster::proximate(PointId i, PointId j) const {
  check_index(i);
  if (j == 0) return false;
  if (j + 1 == i) return true;
  return sat_[i - 1] && *sat_[i - 1] == j;
}

std::vector<PointId> ProximityCluster::proximity_set(PointId i) const {
  check_index(i);
  std::vector<PointId> out;
  if (sat_[i - 1]) out.push_back(*sat_[i - 1]);
  if (i >= 2) out.push_back(i - 1);
  return out;
}

std::vector<PointId> ProximityCluster::proximate_points(PointId j, PointId n) const {
  check_index(j);
  if (n > size()) check_index(n);
  std::vector<PointId> out;
  for (PointId k = j + 1; k <= n; ++k) {
    if (proximate(k, j)) out.push_back(k);
  }
  return out;
}

ProximityCluster ProximityCluster::prefix(PointId n) const {
  check_index(n);
  return ProximityCluster(std::vector<std::optional<PointId>>(sat_.begin(), sat_.begin() + n));
}

std::vector<PointRecord> ProximityCluster::records() const {
  std::vector<PointRecord> out;
  for (PointId i = 1; i <= size(); ++i) out.push_back({i, sat_[i - 1]});
  return out;
}

std::vector<Integer> multiplicity_sequence(const ProximityCluster& cluster, PointId n) {
  if (n == 0 || n > cluster.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "n=" + idx(n) + " outside 1.." + idx(cluster.size()));
  }
  std::vector<Integer> m(n + 1, 0);
  m[n] = 1;
  // Every point k proximate to i is i+1 or has satellite_of == i, so the
  // sums can be accumulated by scanning k downward.
  for (PointId k = n; k >= 2; --k) {
    m[k - 1] += m[k];
    if (auto s = cluster.satellite_of(k)) m[*s] += m[k];
  }
  return {m.begin() + 1, m.end()};
}

ProximityCluster cluster_from_multiplicities(const std::vector<Integer>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::SchemaError, "empty multiplicity sequence");
  if (m[n - 1] != 1) throw Error(ErrorCode::SchemaError, "last multiplicity must be 1");
  std::vector<std::optional<PointId>> sat(n);
  for (PointId i = n - 1; i >= 1; --i) {
    Integer sum = 0;
    PointId k = i;
    while (sum < m[i - 1] && k < n) {
      ++k;
      sum += m[k - 1];
    }
    if (sum != m[i - 1]) {
      throw Error(ErrorCode::SchemaError, "multiplicity m_" + idx(i) + " is not a proximity sum");
    }
    for (PointId j = i + 2; j <= k; ++j) {
      if (sat[j - 1]) {
        throw Error(ErrorCode::SchemaError, "p" + idx(j) + " would be proximate to three points");
      }
      sat[j - 1] = i;
    }
  }
  auto c = ProximityCluster::from_satellites(sat);
  if (multiplicity_sequence(c, n) != m) {
    throw Error(ErrorCode::SchemaError, "multiplicity sequence is not consistent");
  }
  return c;
}

DualGraph::DualGraph(std::size_t n, const std::vector<std::pair<PointId, PointId>>& edges)
    : adj_(n + 1) {
  for (auto [a, b] : edges) {
    if (a == 0 || b == 0 || a > n || b > n || a == b) {
      throw Error(ErrorCode::MalformedGraph, "bad edge " + idx(a) + "-" + idx(b));
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& v : adj_) std::sort(v.begin(), v.end());
  root_tree();
}

void DualGraph::root_tree() {
  const std::size_t n = size();
  parent_.assign(n + 1, 0);
  depth_.assign(n + 1, 0);
  tree_ = false;
  if (n == 0) return;
  std::vector<bool> seen(n + 1, false);
  std::vector<PointId> order{1};
  seen[1] = true;
  for (std::size_t h = 0; h < order.size(); ++h) {
    PointId v = order[h];
    for (PointId w : adj_[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent_[w] = v;
      depth_[w] = depth_[v] + 1;
      order.push_back(w);
    }
  }
  tree_ = order.size() == n && edges().size() == n - 1;
}

const std::vector<PointId>& DualGraph::neighbors(PointId v) const {
  if (v == 0 || v > size()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + idx(v));
  return adj_[v];
}

bool DualGraph::adjacent(PointId a, PointId b) const {
  const auto& nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<PointId, PointId>> DualGraph::edges() const {
  std::vector<std::pair<PointId, PointId>> out;
  for (PointId v = 1; v <= size(); ++v) {
    for (PointId w : adj_[v]) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

bool DualGraph::is_tree() const { return tree_; }

DualGraph DualGraph::without_edge(PointId a, PointId b) const {
  auto e = edges();
  auto key = std::minmax(a, b);
  e.erase(std::remove(e.begin(), e.end(), std::pair<PointId, PointId>(key.first, key.second)), e.end());
  return DualGraph(size(), e);
}

std::vector<PointId> DualGraph::component(PointId v) const {
  neighbors(v);
  std::vector<bool> seen(size() + 1, false);
  std::vector<PointId> stack{v}, out;
  seen[v] = true;
  while (!stack.empty()) {
    PointId x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (PointId w : adj_[x]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DualGraph::precedes(PointId a, PointId b) const {
  if (!tree_) throw Error(ErrorCode::MalformedGraph, "precedes requires a tree");
  neighbors(a);
  for (PointId v = b; v != 0; v = parent(v)) {
    if (v == a) return true;
    if (depth_[v] < depth_[a]) return false;
  }
  return false;
}

PointId DualGraph::parent(PointId v) const {
  neighbors(v);
  return parent_[v];
}

std::vector<PointId> DualGraph::path(PointId a, PointId b) const {
  if (!tree_) throw Error(ErrorCode::MalformedGraph, "path requires a tree");
  neighbors(a);
  neighbors(b);
  std::vector<PointId> up, down;
  PointId x = a, y = b;
  while (depth_[x] > depth_[y]) { up.push_back(x); x = parent_[x]; }
  while (depth_[y] > depth_[x]) { down.push_back(y); y = parent_[y]; }
  while (x != y) {
    up.push_back(x);
    down.push_back(y);
    x = parent_[x];
    y = parent_[y];
  }
  up.push_back(x);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

DualGraph dual_graph(const ProximityCluster& cluster, PointId n) {
  if (n == 0 || n > cluster.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "n=" + idx(n) + " outside 1.." + idx(cluster.size()));
  }
  // E_i and E_j (p_j -> p_i) stay adjacent unless p_{j+1} lies on both,
  // which happens exactly when p_{j+1} is satellite of p_i.
  std::vector<std::pair<PointId, PointId>> edges;
  for (PointId j = 2; j <= n; ++j) {
    for (PointId i : cluster.proximity_set(j)) {
      bool separated = j + 1 <= n && cluster.satellite_of(j + 1) == i;
      if (!separated) edges.emplace_back(i, j);
    }
  }
  return DualGraph(n, edges);
}

bool precedes(const DualGraph& graph, PointId a, PointId b) { return graph.precedes(a, b); }

GraphShape graph_shape(const DualGraph& graph, const ProximityCluster& cluster) {
  const std::size_t n = graph.size();
  if (n == 0 || n > cluster.size()) throw Error(ErrorCode::MalformedGraph, "graph/cluster size mismatch");
  if (!graph.is_tree()) throw Error(ErrorCode::MalformedGraph, "dual graph is not a tree");
  GraphShape s;
  for (PointId v = 1; v <= n; ++v) {
    auto d = graph.degree(v);
    if (d > 3) throw Error(ErrorCode::MalformedGraph, "vertex " + idx(v) + " has degree " + std::to_string(d));
    if (v != 1 && d == 1) s.dead_ends.push_back(v);
    if (d == 3) s.star_vertices.push_back(v);
  }
  const bool satellite_end = n >= 2 && cluster.is_satellite(n);
  if (satellite_end) s.star_vertices.push_back(n);
  s.g = s.star_vertices.size();
  const std::size_t expected_dead = satellite_end ? s.g : (n >= 2 ? s.g + 1 : 0);
  if (s.dead_ends.size() != expected_dead) {
    throw Error(ErrorCode::MalformedGraph, "dead end count does not match star vertices");
  }
  for (std::size_t j = 1; j <= s.g; ++j) {
    if (s.dead_ends[j - 1] >= s.star_vertices[j - 1]) {
      throw Error(ErrorCode::MalformedGraph, "dead end after its star vertex");
    }
  }
  if (!satellite_end && n >= 2) {
    PointId last_star = s.g == 0 ? 1 : s.star_vertices.back();
    s.tail_length = n - last_star;
  }
  for (std::size_t j = 1; j <= s.g; ++j) {
    PointId from = j == 1 ? 1 : s.star_vertices[j - 2];
    auto p = graph.path(from, s.dead_ends[j - 1]);
    std::sort(p.begin(), p.end());
    for (PointId v : p) s.pair_membership[v].insert(j);
    s.pairs.push_back(std::move(p));
  }
  return s;
}

}  // namespace planeval
