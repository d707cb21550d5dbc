#include "planeval/invariants.hpp"

#include "planeval/error.hpp"

#include <algorithm>
#include <string>

namespace planeval {

MaximalContactData make_maximal_contact(std::vector<Integer> betabar) {
  if (betabar.size() < 2) throw Error(ErrorCode::SchemaError, "need at least beta_0 and beta_{g+1}");
  for (const auto& b : betabar) {
    if (b <= 0) throw Error(ErrorCode::SchemaError, "maximal contact values must be positive");
  }
  MaximalContactData mc;
  mc.g = betabar.size() - 2;
  mc.e.push_back(betabar[0]);
  for (std::size_t j = 1; j <= mc.g; ++j) {
    mc.e.push_back(gcd(mc.e.back(), betabar[j]));
    mc.n_factors.push_back(mc.e[j - 1] / mc.e[j]);
  }
  mc.volume = make_rational(1, betabar.back());
  mc.betabar = std::move(betabar);
  return mc;
}

std::vector<Integer> curvette_multiplicities(const ProximityCluster& cluster, PointId k) {
  return multiplicity_sequence(cluster, k);
}

Integer curvette_value(const ProximityCluster& cluster, PointId n, PointId k) {
  auto a = multiplicity_sequence(cluster, n);
  auto b = multiplicity_sequence(cluster, k);
  Integer v = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) v += a[i] * b[i];
  return v;
}

MaximalContactData maximal_contact_values(const ProximityCluster& cluster, PointId n) {
  InvariantTable t(cluster.prefix(n));
  return t.contact(n);
}

PuiseuxExponents puiseux_exponents(const MaximalContactData& mc) {
  PuiseuxExponents p;
  for (std::size_t j = 1; j <= mc.g + 1; ++j) {
    Integer n_prev = j == 1 ? Integer(1) : mc.n_factors[j - 2];
    Rational bp = 1 + make_rational(mc.betabar[j] - n_prev * mc.betabar[j - 1], mc.e[j - 1]);
    p.cf.push_back(continued_fraction(bp));
    p.beta_prime.push_back(std::move(bp));
  }
  return p;
}

std::vector<Integer> continued_fraction(const Rational& x) {
  if (x <= 0) throw Error(ErrorCode::SchemaError, "continued fraction of a non-positive number");
  std::vector<Integer> out;
  Integer num = x.get_num(), den = x.get_den();
  while (den != 0) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(q);
    num = den;
    den = r;
  }
  return out;
}

Rational continued_fraction_value(const std::vector<Integer>& terms) {
  if (terms.empty()) throw Error(ErrorCode::SchemaError, "empty continued fraction");
  Rational v(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (v == 0) throw Error(ErrorCode::DivisionByZero, "continued fraction with zero term");
    v = Rational(*it) + 1 / v;
  }
  v.canonicalize();
  return v;
}

InvariantTable::InvariantTable(ProximityCluster cluster)
    : cluster_(std::move(cluster)), cache_(cluster_.size() + 1) {}

InvariantTable::Prefix& InvariantTable::at(PointId k) const {
  if (k == 0 || k > size()) {
    throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(k) + " outside cluster");
  }
  if (!cache_[k]) {
    cache_[k] = std::make_unique<Prefix>();
    cache_[k]->mults = multiplicity_sequence(cluster_, k);
  }
  return *cache_[k];
}

const std::vector<Integer>& InvariantTable::multiplicities(PointId k) const { return at(k).mults; }

const DualGraph& InvariantTable::graph(PointId k) const {
  auto& p = at(k);
  if (!p.graph) p.graph = dual_graph(cluster_, k);
  return *p.graph;
}

const GraphShape& InvariantTable::shape(PointId k) const {
  auto& p = at(k);
  if (!p.shape) p.shape = graph_shape(graph(k), cluster_.prefix(k));
  return *p.shape;
}

Integer InvariantTable::curvette_value(PointId a, PointId b) const {
  const auto& x = multiplicities(a);
  const auto& y = multiplicities(b);
  Integer v = 0;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) v += x[i] * y[i];
  return v;
}

const MaximalContactData& InvariantTable::contact(PointId k) const {
  auto& p = at(k);
  if (!p.contact) {
    const auto& s = shape(k);
    std::vector<Integer> bb{multiplicities(k).front()};
    for (std::size_t j = 1; j <= s.g; ++j) bb.push_back(curvette_value(k, s.dead_ends[j - 1]));
    bb.push_back(curvette_value(k, k));
    p.contact = make_maximal_contact(std::move(bb));
  }
  return *p.contact;
}

std::size_t InvariantTable::rho(PointId i) const {
  at(i);
  const auto& s = shape(size());
  std::size_t r = 0;
  while (r < s.pairs.size() && s.pairs[r].back() <= i) ++r;
  return r;
}

namespace {

const Integer& e_at(const MaximalContactData& mc, std::size_t j) {
  if (j >= mc.e.size()) throw Error(ErrorCode::MalformedGraph, "gcd ladder index out of range");
  return mc.e[j];
}

const Integer& betabar_at(const MaximalContactData& mc, std::size_t j) {
  if (j >= mc.betabar.size()) throw Error(ErrorCode::MalformedGraph, "maximal contact index out of range");
  return mc.betabar[j];
}

}  // namespace

bool intersection_uses_path_form(const InvariantTable& table, PointId i) {
  const auto& s = table.shape(table.size());
  std::size_t r = table.rho(i);
  if (table.cluster().is_satellite(i) || r >= s.dead_ends.size()) return false;
  return i < s.dead_ends[r];
}

Integer intersection_formula(const ProximityCluster& cluster, PointId i, PointId j) {
  return intersection_formula(InvariantTable(cluster), i, j);
}

Integer intersection_formula(const InvariantTable& table, PointId i, PointId j) {
  if (i == 0 || j == 0 || i > table.size() || j > table.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "curvette index outside cluster");
  }
  if (i >= j) throw Error(ErrorCode::OrderViolation, "intersection_formula requires i < j");
  const std::size_t r = table.rho(i);
  const auto& ci = table.contact(i);
  const auto& cj = table.contact(j);
  if (intersection_uses_path_form(table, i)) {
    const auto& s = table.shape(table.size());
    PointId start = r == 0 ? 1 : s.star_vertices[r - 1] + 1;
    Integer d = table.graph(table.size()).path(start, i).size();
    Integer head = r == 0 ? Integer(0) : Integer(e_at(ci, r - 1) * betabar_at(cj, r));
    return head + d * e_at(ci, r) * e_at(cj, r);
  }
  Integer a = e_at(ci, r) * betabar_at(cj, r + 1);
  Integer b = e_at(cj, r) * betabar_at(ci, r + 1);
  return std::min(a, b);
}

bool contact_ratio_le(const InvariantTable& table, PointId i, PointId j) {
  const std::size_t r = table.rho(i);
  const auto& ci = table.contact(i);
  const auto& cj = table.contact(j);
  return betabar_at(ci, r + 1) * e_at(cj, r) <= betabar_at(cj, r + 1) * e_at(ci, r);
}

}  // namespace planeval
