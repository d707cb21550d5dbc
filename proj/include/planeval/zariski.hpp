#pragma once

#include "planeval/arith.hpp"
#include "planeval/cluster.hpp"
#include "planeval/flagval.hpp"
#include "planeval/okbody.hpp"

#include <vector>

namespace planeval {

// h*H + sum e_star[i-1]*E_i^* on X_r.
struct DivisorClass {
  Rational h;
  std::vector<Rational> e_star;

  static DivisorClass zero(std::size_t r) { return {0, std::vector<Rational>(r)}; }
  static DivisorClass hyperplane(std::size_t r);
  static DivisorClass exceptional(std::size_t r, PointId i);

  std::size_t rank() const { return e_star.size(); }
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  friend DivisorClass operator*(const Rational& k, const DivisorClass& d);
  bool operator==(const DivisorClass&) const = default;
};

// H^2 = 1, E_i^*.E_j^* = -delta_ij, H.E_i^* = 0. Throws DimensionMismatch.
Rational intersect(const DivisorClass& a, const DivisorClass& b);

// E_i = E_i^* - sum_{p_j -> p_i, j <= r} E_j^*. Throws IndexOutOfRange.
DivisorClass strict_transform(const ProximityCluster& cluster, PointId r, PointId i);

// d*H - sum mults_i E_i^*; mults may be shorter than r.
DivisorClass curve_class(const Integer& degree, const std::vector<Integer>& mults, std::size_t r);

enum class Regime { BelowBreak, AboveBreak, MinimalCase };

const char* regime_name(Regime r);

struct NegativeComponent {
  PointId index = 0;  // exceptional divisor E_index, or 0 for the line
  Rational coeff;
  DivisorClass cls;
  bool operator==(const NegativeComponent&) const = default;
};

// P_t + N_t = H - t E_r on X_r.
struct ZariskiPair {
  Rational t;
  Regime regime = Regime::BelowBreak;
  DivisorClass positive;
  DivisorClass negative;
  std::vector<NegativeComponent> components;
  bool operator==(const ZariskiPair&) const = default;
};

// Throws NotNPI, TOutOfRange (t outside [0, nu_r(v)]).
ZariskiPair decompose_npi(const ExceptionalValuation& val, const std::vector<PointId>& line_support,
                          const Rational& t);

struct ZariskiCheck {
  bool sum = false;
  bool orthogonal = false;
  bool negative_definite = false;
  bool nef_on_test_set = false;
  bool all() const { return sum && orthogonal && negative_definite && nef_on_test_set; }
};

ZariskiCheck check_zariski(const ExceptionalValuation& val, const std::vector<PointId>& line_support,
                           const ZariskiPair& pair);

// True iff every leading principal minor of -m is positive.
bool negative_definite(const std::vector<std::vector<Rational>>& m);

// Body swept by alpha(t) <= y <= beta(t), 0 <= t <= nu_r(v). Throws NotNPI.
Body slice_body(const ExceptionalValuation& val, const std::vector<PointId>& line_support);

}  // namespace planeval
