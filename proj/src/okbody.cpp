#include "planeval/okbody.hpp"

#include "planeval/error.hpp"

#include <algorithm>
#include <optional>

namespace planeval {

const char* shape_name(Shape s) { return s == Shape::Triangle ? "triangle" : "quadrilateral"; }

const char* side_name(BranchSide s) { return s == BranchSide::RootSide ? "root_side" : "far_side"; }

Body make_body(std::vector<Point2> points, bool minimal, ExactScalar muhat) {
  Body b;
  b.vertices = convex_hull(std::move(points));
  if (b.vertices.size() == 3) {
    b.shape = Shape::Triangle;
  } else if (b.vertices.size() == 4) {
    b.shape = Shape::Quadrilateral;
  } else {
    throw Error(ErrorCode::DegeneratePolygon, "body has " + std::to_string(b.vertices.size()) + " vertices");
  }
  b.minimal = minimal;
  b.muhat = std::move(muhat);
  return b;
}

bool is_minimal_consistent(const MaximalContactData& mc, const ExactScalar& muhat) {
  return muhat * muhat == ExactScalar(mc.betabar.back());
}

Body body_minimal(const ExceptionalValuation& val) {
  ExactScalar muhat = ExactScalar::sqrt(val.contact_r().betabar.back());
  return make_body(value_cone_slice(val, muhat), true, muhat);
}

namespace {

Integer volume_inverse(const ExceptionalValuation& val) { return val.contact_r().betabar.back(); }

Point2 pt(const Rational& x, const Rational& y) { return {ExactScalar(x), ExactScalar(y)}; }

bool supraminimal(const ExceptionalValuation& val, const Integer& first, const Integer& degree) {
  return first * first > degree * degree * volume_inverse(val);
}

}  // namespace

SupraminimalCertificate make_certificate(const ExceptionalValuation& val, const CurveSpec& curve) {
  if (curve.degree <= 0) throw Error(ErrorCode::CertificateInconsistent, "degree must be positive");
  SupraminimalCertificate cert;
  cert.curve = curve;
  cert.value_pair = curve_value(val, curve);
  cert.mu = make_rational(cert.value_pair.first, curve.degree);
  cert.c = make_rational(cert.value_pair.second, curve.degree);
  if (!supraminimal(val, cert.value_pair.first, curve.degree)) {
    throw Error(ErrorCode::NotSupraminimal, "nu_r(f)^2 <= deg(f)^2 * beta_{g+1}");
  }
  return cert;
}

Body body_nonminimal(const ExceptionalValuation& val, const SupraminimalCertificate& cert) {
  const Integer& deg = cert.curve.degree;
  if (deg <= 0) throw Error(ErrorCode::CertificateInconsistent, "degree must be positive");
  if (curve_value(val, cert.curve) != cert.value_pair ||
      cert.mu != make_rational(cert.value_pair.first, deg) ||
      cert.c != make_rational(cert.value_pair.second, deg)) {
    throw Error(ErrorCode::CertificateInconsistent, "certificate does not match the curve");
  }
  if (!supraminimal(val, cert.value_pair.first, deg)) {
    throw Error(ErrorCode::NotSupraminimal, "nu_r(f)^2 <= deg(f)^2 * beta_{g+1}");
  }
  const Rational& mu = cert.mu;
  Rational x = Rational(volume_inverse(val)) / mu;
  Rational y1 = 0, y2 = 1 / mu;
  if (val.is_satellite()) {
    y1 = Rational(val.nu_r_phi_eta()) / mu;
    y2 = Rational(val.nu_r_phi_eta() + 1) / mu;
  }
  return make_body({pt(0, 0), pt(x, y1), pt(x, y2), pt(mu, cert.c)}, false, mu);
}

NpiCheck check_npi(const ProximityCluster& cluster, PointId r, const std::vector<PointId>& line_support) {
  if (r < 2) throw Error(ErrorCode::RTooSmall, "r must be at least 2");
  if (r > cluster.size()) throw Error(ErrorCode::IndexOutOfRange, "r exceeds the cluster");
  std::size_t s = line_support.size();
  if (s < 2 || s > r) throw Error(ErrorCode::LineSupportInvalid, "line support must be 1..s with 2 <= s <= r");
  for (std::size_t k = 0; k < s; ++k) {
    if (line_support[k] != k + 1) throw Error(ErrorCode::LineSupportInvalid, "line support must be 1..s");
    if (k >= 1 && cluster.is_satellite(k + 1)) {
      throw Error(ErrorCode::LineSupportInvalid, "line passes through satellite p" + std::to_string(k + 1));
    }
  }
  auto m = multiplicity_sequence(cluster, r);
  NpiCheck out;
  out.nu_v = 0;
  for (std::size_t k = 0; k < s; ++k) out.nu_v += m[k];
  Integer vol_inv = 0;
  for (const auto& x : m) vol_inv += x * x;
  out.is_npi = out.nu_v * out.nu_v >= vol_inv;
  return out;
}

BranchSpec line_branch(const std::vector<PointId>& line_support) {
  return BranchSpec{std::vector<Integer>(line_support.size(), 1)};
}

Body body_npi(const ExceptionalValuation& val, const std::vector<PointId>& line_support) {
  auto chk = check_npi(val.cluster(), val.r(), line_support);
  if (!chk.is_npi) throw Error(ErrorCode::NotNPI, "nu_r(v)^2 < beta_{g+1}");
  const Integer& nu = chk.nu_v;
  Integer bl = volume_inverse(val);
  Rational nuq(nu);
  if (nu * nu == bl) {
    if (!val.is_satellite()) return make_body({pt(0, 0), pt(nuq, 0), pt(nuq, 1 / nuq)}, true, nuq);
    return make_body({pt(0, 0), pt(nuq, Rational(bl - 1) / nuq), pt(nuq, Rational(bl) / nuq)}, true, nuq);
  }
  Rational x = Rational(bl) / nuq;
  if (!val.is_satellite()) return make_body({pt(0, 0), pt(x, 1 / nuq), pt(nuq, 0)}, false, nuq);
  PairValue v = pair_value(val, line_branch(line_support));
  PointId top = line_support.back();
  Integer y = val.nu_r_phi_eta();
  if (val.far_side(top) == val.far_side(val.r())) y += 1;
  return make_body({pt(0, 0), pt(x, Rational(y) / nuq), pt(nuq, Rational(v.second))}, false, nuq);
}

bool ShapeClassification::consistent() const {
  return std::all_of(branches.begin(), branches.end(),
                     [](const BranchClass& b) { return b.by_slope == b.by_graph; });
}

std::vector<PointId> excess_points(const ExceptionalValuation& val, const BranchSpec& germ) {
  validate_branch(val, germ);
  PointId top = 0;
  for (PointId i = 1; i <= germ.mults.size(); ++i) {
    if (germ.mults[i - 1] > 0) top = i;
  }
  auto ext = val.extended_cluster(std::max(top, val.r()));
  std::vector<PointId> out;
  for (PointId j = 1; j <= top; ++j) {
    Integer excess = germ.mults[j - 1];
    for (PointId k : ext.proximate_points(j, top)) excess -= germ.mults[k - 1];
    if (excess > 0) out.push_back(j);
  }
  return out;
}

ShapeClassification classify_shape(const ExceptionalValuation& val, const CurveSpec& curve) {
  auto [s_root, s_far] = boundary_slopes(val);
  ShapeClassification out;
  for (const auto& b : curve.branches) {
    PairValue v = pair_value(val, b);
    Rational slope = make_rational(v.second, v.first);
    BranchClass cls{};
    if (slope == s_root) {
      cls.by_slope = BranchSide::RootSide;
    } else if (slope == s_far) {
      cls.by_slope = BranchSide::FarSide;
    } else {
      throw Error(ErrorCode::BranchSlopeUnrecognized, "branch value " + to_string(slope) +
                                                          " lies on neither boundary ray");
    }

    std::optional<bool> far;
    for (PointId j : excess_points(val, b)) {
      bool f = val.far_side(j);
      if (far && *far != f) throw Error(ErrorCode::BranchInvalid, "branch has excess on both sides");
      far = f;
    }
    if (!far) throw Error(ErrorCode::BranchInvalid, "branch has no excess point");
    cls.by_graph = *far ? BranchSide::FarSide : BranchSide::RootSide;
    out.branches.push_back(cls);
  }
  bool mixed = std::any_of(out.branches.begin(), out.branches.end(), [&](const BranchClass& c) {
    return c.by_slope != out.branches.front().by_slope;
  });
  out.shape = mixed ? Shape::Quadrilateral : Shape::Triangle;
  return out;
}

Matrix2 normalization_matrix(const ExceptionalValuation& val) {
  Integer b0r = val.betabar_r(0);
  if (!val.is_satellite()) return {make_rational(1, b0r), 0, 0, 1};
  std::size_t gs = val.g_star();
  Integer b0e = val.betabar_eta(0);
  Integer delta = val.betabar_r(gs) * b0e - val.betabar_eta(gs) * b0r;
  return {make_rational(1, b0r), make_rational(b0e, delta), 0, make_rational(-b0r, delta)};
}

Point2 apply(const Matrix2& a, const Point2& p) {
  return apply_row(p, ExactScalar(a.m11), ExactScalar(a.m12), ExactScalar(a.m21), ExactScalar(a.m22));
}

Body normalize(const ExceptionalValuation& val, const Body& body) {
  Matrix2 a = normalization_matrix(val);
  std::vector<Point2> pts;
  for (const auto& p : body.vertices) pts.push_back(apply(a, p));
  return make_body(std::move(pts), body.minimal, body.muhat);
}

}  // namespace planeval
