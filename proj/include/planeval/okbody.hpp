#pragma once

#include "planeval/exact_scalar.hpp"
#include "planeval/flagval.hpp"
#include "planeval/geometry.hpp"
#include "planeval/invariants.hpp"

#include <vector>

namespace planeval {

enum class Shape { Triangle, Quadrilateral };

const char* shape_name(Shape s);

struct Body {
  std::vector<Point2> vertices;  // counterclockwise from (0,0)
  Shape shape = Shape::Triangle;
  bool minimal = false;
  ExactScalar muhat;

  bool operator==(const Body&) const = default;
};

// muhat^2 == beta_{g+1}.
bool is_minimal_consistent(const MaximalContactData& mc, const ExactScalar& muhat);

// Triangle of the value cone at muhat = sqrt(beta_{g+1}(nu_r)).
Body body_minimal(const ExceptionalValuation& val);

struct SupraminimalCertificate {
  CurveSpec curve;
  PairValue value_pair;
  Rational c;   // value_pair.second / degree
  Rational mu;  // value_pair.first / degree
};

// Evaluates the curve and fills the certificate; throws NotSupraminimal.
SupraminimalCertificate make_certificate(const ExceptionalValuation& val, const CurveSpec& curve);

// Hull of (0,0), Q1, Q2, Q3 with muhat = cert.mu.
// Throws NotSupraminimal, CertificateInconsistent.
Body body_nonminimal(const ExceptionalValuation& val, const SupraminimalCertificate& cert);

struct NpiCheck {
  bool is_npi = false;
  Integer nu_v;  // nu_r of the line through p_1..p_s
};

// line_support must be 1..s, s >= 2, with p_2..p_s free and s <= r.
// Throws LineSupportInvalid, RTooSmall.
NpiCheck check_npi(const ProximityCluster& cluster, PointId r, const std::vector<PointId>& line_support);

// The line as a germ: multiplicity 1 on its support.
BranchSpec line_branch(const std::vector<PointId>& line_support);

// Closed-form body for valuations non-positive at infinity. Throws NotNPI.
Body body_npi(const ExceptionalValuation& val, const std::vector<PointId>& line_support);

enum class BranchSide { RootSide, FarSide };

const char* side_name(BranchSide s);

struct BranchClass {
  BranchSide by_slope;
  BranchSide by_graph;
};

struct ShapeClassification {
  Shape shape;
  std::vector<BranchClass> branches;
  bool consistent() const;
};

// Points where the branch multiplicity exceeds the sum over its proximate
// points, i.e. where the strict transform meets the exceptional divisor.
std::vector<PointId> excess_points(const ExceptionalValuation& val, const BranchSpec& germ);

// Splits branches by the boundary ray their value lies on and, independently,
// by the side of the limit dual graph holding their excess points.
// Throws BranchSlopeUnrecognized, BranchInvalid.
ShapeClassification classify_shape(const ExceptionalValuation& val, const CurveSpec& curve);

// Row-vector map sending beta_0(nu) to (1,0) and beta_{g*}(nu) to a point of
// the form (x,1).
struct Matrix2 {
  Rational m11, m12, m21, m22;
  Rational det() const { return m11 * m22 - m12 * m21; }
  bool operator==(const Matrix2&) const = default;
};

Matrix2 normalization_matrix(const ExceptionalValuation& val);
Point2 apply(const Matrix2& a, const Point2& p);
Body normalize(const ExceptionalValuation& val, const Body& body);

// Builds a Body from arbitrary points via the hull.
Body make_body(std::vector<Point2> points, bool minimal, ExactScalar muhat);

}  // namespace planeval
