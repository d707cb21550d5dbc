#pragma once

#include "planeval/arith.hpp"
#include "planeval/cluster.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace planeval {

struct MaximalContactData {
  std::vector<Integer> betabar;    // beta_0..beta_{g+1}
  std::vector<Integer> e;          // e_0..e_g
  std::vector<Integer> n_factors;  // n_1..n_g
  std::size_t g = 0;
  Rational volume;                 // 1 / beta_{g+1}

  bool operator==(const MaximalContactData&) const = default;
};

// Fills e, n_factors, g and volume from beta_0..beta_{g+1}.
MaximalContactData make_maximal_contact(std::vector<Integer> betabar);

struct PuiseuxExponents {
  std::vector<Rational> beta_prime;            // beta'_1..beta'_{g+1}
  std::vector<std::vector<Integer>> cf;        // one expansion per beta'_j

  bool operator==(const PuiseuxExponents&) const = default;
};

std::vector<Integer> curvette_multiplicities(const ProximityCluster& cluster, PointId k);
// Noether formula: (phi_n, phi_k)_p.
Integer curvette_value(const ProximityCluster& cluster, PointId n, PointId k);
MaximalContactData maximal_contact_values(const ProximityCluster& cluster, PointId n);
PuiseuxExponents puiseux_exponents(const MaximalContactData& mc);

// Euclidean expansion of x > 0; the last term is >= 2 unless x is an integer.
std::vector<Integer> continued_fraction(const Rational& x);
Rational continued_fraction_value(const std::vector<Integer>& terms);

// Per-prefix data of a cluster, computed on demand and cached. Not
// thread-safe while filling; build one per thread.
class InvariantTable {
 public:
  explicit InvariantTable(ProximityCluster cluster);

  const ProximityCluster& cluster() const { return cluster_; }
  std::size_t size() const { return cluster_.size(); }

  const std::vector<Integer>& multiplicities(PointId k) const;
  const DualGraph& graph(PointId k) const;
  const GraphShape& shape(PointId k) const;
  const MaximalContactData& contact(PointId k) const;
  Integer curvette_value(PointId a, PointId b) const;

  // Number of Puiseux pairs of nu_n (n = size) that phi_i fully passes through.
  std::size_t rho(PointId i) const;

 private:
  struct Prefix {
    std::vector<Integer> mults;
    std::optional<DualGraph> graph;
    std::optional<GraphShape> shape;
    std::optional<MaximalContactData> contact;
  };
  Prefix& at(PointId k) const;

  ProximityCluster cluster_;
  mutable std::vector<std::unique_ptr<Prefix>> cache_;
};

// Closed form for (phi_i, phi_j)_p, i < j, in terms of the maximal
// contact values of nu_i and nu_j and the dual graph of nu_n.
Integer intersection_formula(const ProximityCluster& cluster, PointId i, PointId j);
Integer intersection_formula(const InvariantTable& table, PointId i, PointId j);

// True when phi_i falls under the first closed form above.
bool intersection_uses_path_form(const InvariantTable& table, PointId i);

// beta_{rho+1}(nu_i)/e_rho(nu_i) <= beta_{rho+1}(nu_j)/e_rho(nu_j), rho = rho(i).
bool contact_ratio_le(const InvariantTable& table, PointId i, PointId j);

}  // namespace planeval
