#include "planeval/flagval.hpp"

#include "planeval/error.hpp"

#include <algorithm>
#include <string>

namespace planeval {

namespace {

std::string idx(PointId i) { return std::to_string(i); }

}  // namespace

PointId ExceptionalValuation::eta() const {
  if (!flag_.eta) throw Error(ErrorCode::EtaMissing, "free flag has no eta");
  return *flag_.eta;
}

PairValue ExceptionalValuation::weight(PointId i) const {
  if (i == 0) throw Error(ErrorCode::IndexOutOfRange, "point 0");
  if (i <= r() + 1) return {w1_[i - 1], w2_[i - 1]};
  return {0, 1};
}

std::size_t ExceptionalValuation::g_star() const {
  bool last_satellite = r() >= 2 && cluster().is_satellite(r());
  return is_satellite() && last_satellite ? g() : g() + 1;
}

PointId ExceptionalValuation::dead_end(std::size_t j) const {
  if (j == 0) return 1;
  if (j <= g()) return table_->shape(r()).dead_ends[j - 1];
  if (j == g() + 1) return r();
  throw Error(ErrorCode::IndexOutOfRange, "dead end index " + std::to_string(j));
}

Integer ExceptionalValuation::betabar_r(std::size_t j) const {
  return table_->curvette_value(r(), dead_end(j));
}

Integer ExceptionalValuation::betabar_eta(std::size_t j) const {
  return table_->curvette_value(eta(), dead_end(j));
}

Integer ExceptionalValuation::e_r(std::size_t j) const {
  Integer e = 0;
  for (std::size_t k = 0; k <= j; ++k) e = gcd(e, betabar_r(k));
  return e;
}

Integer ExceptionalValuation::e_eta(std::size_t j) const {
  Integer e = 0;
  for (std::size_t k = 0; k <= j; ++k) e = gcd(e, betabar_eta(k));
  return e;
}

PairValue ExceptionalValuation::betabar(std::size_t j) const {
  if (j > g_star()) throw Error(ErrorCode::IndexOutOfRange, "beta index " + std::to_string(j));
  if (is_satellite()) return {betabar_r(j), betabar_eta(j)};
  if (j <= g()) return {betabar_r(j), 0};
  return {betabar_r(j), 1};
}

Integer ExceptionalValuation::nu_r_phi_eta() const { return table_->curvette_value(r(), eta()); }

ProximityCluster ExceptionalValuation::extended_cluster(PointId N) const {
  if (N < r()) throw Error(ErrorCode::IndexOutOfRange, "extension shorter than r");
  ProximityCluster c = cluster();
  if (N > r()) c = c.extended(flag_.eta);
  for (PointId k = r() + 2; k <= N; ++k) c = c.extended(r());
  return c;
}

DualGraph ExceptionalValuation::limit_graph(PointId N) const {
  if (N < r() + 2) throw Error(ErrorCode::IndexOutOfRange, "limit graph needs N >= r+2");
  return dual_graph(extended_cluster(N), N).without_edge(r(), N);
}

bool ExceptionalValuation::far_side(PointId i) const {
  if (i == 0) throw Error(ErrorCode::IndexOutOfRange, "point 0");
  auto comp = limit_graph(std::max(i, r()) + 2).component(1);
  return !std::binary_search(comp.begin(), comp.end(), i);
}

ExceptionalValuation build_flag(const ProximityCluster& cluster, const FlagSpec& flag) {
  if (flag.r == 0 || flag.r > cluster.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "flag divisor r=" + idx(flag.r) + " outside cluster");
  }
  ExceptionalValuation v;
  v.table_ = std::make_shared<const InvariantTable>(cluster.prefix(flag.r));
  v.flag_ = flag;
  const PointId r = flag.r;
  if (flag.eta) {
    PointId eta = *flag.eta;
    if (eta == r) throw Error(ErrorCode::EtaEqualsR, "eta must differ from r");
    if (eta == 0 || eta > r || !v.table_->graph(r).adjacent(eta, r)) {
      throw Error(ErrorCode::EtaNotAdjacent, "E_" + idx(eta) + " does not meet E_" + idx(r));
    }
  }
  v.w1_ = v.table_->multiplicities(r);
  v.w1_.push_back(0);
  v.w2_.assign(r + 1, 0);
  if (flag.eta) {
    const auto& m = v.table_->multiplicities(*flag.eta);
    std::copy(m.begin(), m.end(), v.w2_.begin());
  }
  v.w2_[r] = 1;

  // Proximity equalities over p_1..p_{r+1}; p_r itself has infinitely many
  // proximate points and is skipped.
  auto ext = v.extended_cluster(r + 1);
  for (PointId i = 1; i < r; ++i) {
    PairValue sum{0, 0};
    for (PointId j : ext.proximate_points(i, r + 1)) sum = sum + v.weight(j);
    if (sum != v.weight(i)) {
      throw Error(ErrorCode::MalformedGraph, "flag weights violate proximity at p" + idx(i));
    }
  }
  return v;
}

void validate_branch(const ExceptionalValuation& val, const BranchSpec& germ) {
  const auto& m = germ.mults;
  if (m.empty() || m.front() <= 0) throw Error(ErrorCode::BranchInvalid, "branch must pass through p_1");
  std::size_t last = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw Error(ErrorCode::BranchInvalid, "negative multiplicity");
    if (m[i] > 0) {
      if (last != i) throw Error(ErrorCode::BranchInvalid, "support is not a prefix");
      last = i + 1;
    }
  }
  auto ext = val.extended_cluster(std::max<PointId>(m.size(), val.r()));
  for (PointId i = 1; i <= last; ++i) {
    Integer sum = 0;
    for (PointId j : ext.proximate_points(i, m.size())) sum += m[j - 1];
    if (m[i - 1] < sum) {
      throw Error(ErrorCode::BranchInvalid, "proximity inequality fails at p" + idx(i));
    }
  }
}

PairValue pair_value(const ExceptionalValuation& val, const BranchSpec& germ) {
  validate_branch(val, germ);
  PairValue v{0, 0};
  for (PointId i = 1; i <= germ.mults.size(); ++i) {
    PairValue w = val.weight(i);
    v.first += germ.mults[i - 1] * w.first;
    v.second += germ.mults[i - 1] * w.second;
  }
  return v;
}

PairValue curve_value(const ExceptionalValuation& val, const CurveSpec& curve) {
  PairValue v{0, 0};
  for (const auto& b : curve.branches) v = v + pair_value(val, b);
  return v;
}

std::pair<Rational, Rational> boundary_slopes(const ExceptionalValuation& val) {
  if (!val.is_satellite()) return {Rational(0), make_rational(1, val.betabar_r(val.g() + 1))};
  std::size_t gs = val.g_star();
  return {make_rational(val.betabar_eta(0), val.betabar_r(0)),
          make_rational(val.betabar_eta(gs), val.betabar_r(gs))};
}

std::vector<Point2> value_cone_slice(const ExceptionalValuation& val, const ExactScalar& muhat) {
  if (muhat.sign() <= 0) throw Error(ErrorCode::NonPositiveMuhat, "muhat must be positive");
  auto [s0, s1] = boundary_slopes(val);
  return convex_hull({{0, 0}, {muhat, muhat * ExactScalar(s0)}, {muhat, muhat * ExactScalar(s1)}});
}

}  // namespace planeval
