#include "planeval/zariski.hpp"

#include "planeval/error.hpp"

namespace planeval {

DivisorClass DivisorClass::hyperplane(std::size_t r) { return {1, std::vector<Rational>(r)}; }

DivisorClass DivisorClass::exceptional(std::size_t r, PointId i) {
  if (i == 0 || i > r) throw Error(ErrorCode::IndexOutOfRange, "E_" + std::to_string(i) + " not on X_r");
  DivisorClass d = zero(r);
  d.e_star[i - 1] = 1;
  return d;
}

namespace {

void same_rank(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::DimensionMismatch, "divisor classes on different surfaces");
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  same_rank(*this, o);
  DivisorClass d{h + o.h, e_star};
  for (std::size_t i = 0; i < rank(); ++i) d.e_star[i] += o.e_star[i];
  return d;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + Rational(-1) * o; }

DivisorClass operator*(const Rational& k, const DivisorClass& d) {
  DivisorClass out{k * d.h, d.e_star};
  for (auto& x : out.e_star) x *= k;
  return out;
}

Rational intersect(const DivisorClass& a, const DivisorClass& b) {
  same_rank(a, b);
  Rational s = a.h * b.h;
  for (std::size_t i = 0; i < a.rank(); ++i) s -= a.e_star[i] * b.e_star[i];
  return s;
}

DivisorClass strict_transform(const ProximityCluster& cluster, PointId r, PointId i) {
  if (r > cluster.size() || i == 0 || i > r) {
    throw Error(ErrorCode::IndexOutOfRange, "strict transform of E_" + std::to_string(i));
  }
  DivisorClass d = DivisorClass::exceptional(r, i);
  for (PointId j : cluster.proximate_points(i, r)) d.e_star[j - 1] -= 1;
  return d;
}

DivisorClass curve_class(const Integer& degree, const std::vector<Integer>& mults, std::size_t r) {
  if (mults.size() > r) throw Error(ErrorCode::DimensionMismatch, "curve passes beyond p_r");
  DivisorClass d = DivisorClass::hyperplane(r);
  d.h = degree;
  for (std::size_t i = 0; i < mults.size(); ++i) d.e_star[i] = -Rational(mults[i]);
  return d;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::BelowBreak: return "below_break";
    case Regime::AboveBreak: return "above_break";
    case Regime::MinimalCase: return "minimal_case";
  }
  return "?";
}

namespace {

struct NpiData {
  Integer nu;
  Integer bl;
  std::vector<Integer> m;
};

NpiData npi_data(const ExceptionalValuation& val, const std::vector<PointId>& line_support) {
  auto chk = check_npi(val.cluster(), val.r(), line_support);
  if (!chk.is_npi) throw Error(ErrorCode::NotNPI, "nu_r(v)^2 < beta_{g+1}");
  return {chk.nu_v, val.contact_r().betabar.back(), val.table().multiplicities(val.r())};
}

DivisorClass line_class(const std::vector<PointId>& line_support, std::size_t r) {
  return curve_class(1, std::vector<Integer>(line_support.size(), 1), r);
}

// nu_i(v) for the line.
Integer line_value(const ExceptionalValuation& val, std::size_t s, PointId i) {
  const auto& mi = val.table().multiplicities(i);
  Integer v = 0;
  for (std::size_t k = 0; k < std::min<std::size_t>(s, i); ++k) v += mi[k];
  return v;
}

}  // namespace

ZariskiPair decompose_npi(const ExceptionalValuation& val, const std::vector<PointId>& line_support,
                          const Rational& t) {
  auto [nu, bl, m] = npi_data(val, line_support);
  const std::size_t r = val.r();
  if (t < 0 || t > Rational(nu)) throw Error(ErrorCode::TOutOfRange, "t outside [0, nu_r(v)]");
  DivisorClass H = DivisorClass::hyperplane(r);
  DivisorClass Dr = curve_class(nu, m, r);
  Rational t0 = make_rational(bl, nu);

  ZariskiPair z;
  z.t = t;
  z.regime = nu * nu == bl ? Regime::MinimalCase : (t <= t0 ? Regime::BelowBreak : Regime::AboveBreak);
  auto add = [&](PointId index, const Rational& coeff, const DivisorClass& cls) {
    if (coeff != 0) z.components.push_back({index, coeff, cls});
  };
  if (z.regime != Regime::AboveBreak) {
    Rational b0 = 1 - Rational(nu) * t / bl;
    Rational br = t / bl;
    z.positive = b0 * H + br * Dr;
    for (PointId i = 1; i < r; ++i) {
      add(i, Rational(val.table().curvette_value(r, i)) * t / bl, strict_transform(val.cluster(), r, i));
    }
  } else {
    Rational D(nu * nu - bl);
    Rational br = (Rational(nu) - t) / D;
    Rational a0 = (Rational(nu) * t - bl) / D;
    z.positive = br * Dr;
    add(0, a0, line_class(line_support, r));
    for (PointId i = 1; i < r; ++i) {
      Rational ai = (Rational(line_value(val, line_support.size(), i)) * (Rational(nu) * t - bl) +
                     Rational(val.table().curvette_value(r, i)) * (Rational(nu) - t)) /
                    D;
      add(i, ai, strict_transform(val.cluster(), r, i));
    }
  }
  z.negative = DivisorClass::zero(r);
  for (const auto& c : z.components) z.negative = z.negative + c.coeff * c.cls;
  return z;
}

bool negative_definite(const std::vector<std::vector<Rational>>& m) {
  // Elimination without pivoting: all pivots negative iff the leading
  // minors alternate in sign starting negative.
  auto a = m;
  std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] >= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

ZariskiCheck check_zariski(const ExceptionalValuation& val, const std::vector<PointId>& line_support,
                           const ZariskiPair& pair) {
  const std::size_t r = val.r();
  ZariskiCheck c;
  DivisorClass Dt = DivisorClass::hyperplane(r) - pair.t * DivisorClass::exceptional(r, r);
  c.sum = pair.positive + pair.negative == Dt;

  c.orthogonal = true;
  std::vector<std::vector<Rational>> gram;
  for (const auto& a : pair.components) {
    if (intersect(pair.positive, a.cls) != 0) c.orthogonal = false;
    std::vector<Rational> row;
    for (const auto& b : pair.components) row.push_back(intersect(a.cls, b.cls));
    gram.push_back(std::move(row));
  }
  c.negative_definite = negative_definite(gram);

  std::vector<DivisorClass> tests{line_class(line_support, r)};
  for (PointId i = 1; i <= r; ++i) {
    tests.push_back(strict_transform(val.cluster(), r, i));
    const auto& mi = val.table().multiplicities(i);
    Integer need = 0;
    for (const auto& x : mi) need += x * (x + 1) / 2;
    Integer d = 1;
    while (d * (d + 3) / 2 < need) ++d;
    tests.push_back(curve_class(d, mi, r));
  }
  c.nef_on_test_set = true;
  for (const auto& cls : tests) {
    if (intersect(pair.positive, cls) < 0) c.nef_on_test_set = false;
  }
  return c;
}

Body slice_body(const ExceptionalValuation& val, const std::vector<PointId>& line_support) {
  auto [nu, bl, m] = npi_data(val, line_support);
  const std::size_t r = val.r();
  DivisorClass Er = strict_transform(val.cluster(), r, r);
  std::vector<Point2> pts{{0, 0}};
  for (const Rational& t : {make_rational(bl, nu), Rational(nu)}) {
    ZariskiPair z = decompose_npi(val, line_support, t);
    Rational alpha = 0;
    if (val.is_satellite()) {
      for (const auto& c : z.components) {
        if (c.index == val.eta()) alpha = c.coeff;
      }
    }
    Rational beta = alpha + intersect(z.positive, Er);
    pts.push_back({ExactScalar(t), ExactScalar(alpha)});
    pts.push_back({ExactScalar(t), ExactScalar(beta)});
  }
  return make_body(std::move(pts), nu * nu == bl, ExactScalar(Rational(nu)));
}

}  // namespace planeval
