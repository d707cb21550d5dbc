#pragma once

#include "planeval/arith.hpp"
#include "planeval/cluster.hpp"
#include "planeval/exact_scalar.hpp"
#include "planeval/geometry.hpp"
#include "planeval/invariants.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <vector>

namespace planeval {

// Flag X_r > E_r > {q}; q = p_{r+1} is free on E_r or the satellite point
// E_r cap E_eta.
struct FlagSpec {
  PointId r = 0;
  std::optional<PointId> eta;

  static FlagSpec free(PointId r) { return {r, std::nullopt}; }
  static FlagSpec satellite(PointId r, PointId eta) { return {r, eta}; }
  bool is_satellite() const { return eta.has_value(); }
  bool operator==(const FlagSpec&) const = default;
};

struct PairValue {
  Integer first;
  Integer second;

  bool operator==(const PairValue&) const = default;
  std::strong_ordering operator<=>(const PairValue& o) const {
    if (first != o.first) return first < o.first ? std::strong_ordering::less : std::strong_ordering::greater;
    if (second != o.second) return second < o.second ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  PairValue operator+(const PairValue& o) const { return {first + o.first, second + o.second}; }
};

// Multiplicities at p_1..p_N; indices past r+1 are the points of the
// valuation's cluster beyond q, all proximate to p_r.
struct BranchSpec {
  std::vector<Integer> mults;
  bool operator==(const BranchSpec&) const = default;
};

struct CurveSpec {
  Integer degree;
  std::vector<BranchSpec> branches;
  bool operator==(const CurveSpec&) const = default;
};

class ExceptionalValuation {
 public:
  const ProximityCluster& cluster() const { return table_->cluster(); }
  const InvariantTable& table() const { return *table_; }
  const FlagSpec& flag() const { return flag_; }
  PointId r() const { return flag_.r; }
  bool is_satellite() const { return flag_.is_satellite(); }
  // Throws EtaMissing for a free flag.
  PointId eta() const;

  // Weights over p_1..p_{r+1}; weight(i) extends them past r+1 by (0,1).
  const std::vector<Integer>& w1() const { return w1_; }
  const std::vector<Integer>& w2() const { return w2_; }
  PairValue weight(PointId i) const;

  const MaximalContactData& contact_r() const { return table_->contact(r()); }
  std::size_t g() const { return contact_r().g; }
  // Puiseux pair count of the flag valuation itself.
  std::size_t g_star() const;
  // l_0 = 1, l_1..l_g dead ends of nu_r, l_{g+1} = r.
  PointId dead_end(std::size_t j) const;
  Integer betabar_r(std::size_t j) const;
  Integer betabar_eta(std::size_t j) const;
  Integer e_r(std::size_t j) const;
  Integer e_eta(std::size_t j) const;
  // beta_j of the flag valuation, j <= g_star().
  PairValue betabar(std::size_t j) const;
  // nu_r(phi_eta) = nu_eta(phi_r).
  Integer nu_r_phi_eta() const;

  // Cluster of the flag valuation up to p_N (N >= r).
  ProximityCluster extended_cluster(PointId N) const;
  // Dual graph of the extended cluster with the edge E_r - E_N removed;
  // its components over 1..N-1 are those of the limit graph.
  DualGraph limit_graph(PointId N) const;
  // True when vertex i lies off the component of the root in the limit graph.
  bool far_side(PointId i) const;

 private:
  friend ExceptionalValuation build_flag(const ProximityCluster& cluster, const FlagSpec& flag);

  std::shared_ptr<const InvariantTable> table_;
  FlagSpec flag_;
  std::vector<Integer> w1_;
  std::vector<Integer> w2_;
};

ExceptionalValuation build_flag(const ProximityCluster& cluster, const FlagSpec& flag);

// Throws BranchInvalid.
void validate_branch(const ExceptionalValuation& val, const BranchSpec& germ);
PairValue pair_value(const ExceptionalValuation& val, const BranchSpec& germ);
PairValue curve_value(const ExceptionalValuation& val, const CurveSpec& curve);

// Triangle (0,0), (muhat, muhat*s0), (muhat, muhat*s1) bounded by the two
// boundary rays of the value cone, counterclockwise.
std::vector<Point2> value_cone_slice(const ExceptionalValuation& val, const ExactScalar& muhat);

// Slopes of the two boundary rays: root side first, far side second.
std::pair<Rational, Rational> boundary_slopes(const ExceptionalValuation& val);

}  // namespace planeval
