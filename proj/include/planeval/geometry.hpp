#pragma once

#include "planeval/exact_scalar.hpp"

#include <vector>

namespace planeval {

struct Point2 {
  ExactScalar x;
  ExactScalar y;

  bool operator==(const Point2&) const = default;
  auto operator<=>(const Point2& o) const {
    if (auto c = x <=> o.x; c != 0) return c;
    return y <=> o.y;
  }
};

ExactScalar cross(const Point2& o, const Point2& a, const Point2& b);

// Extreme points of the hull, counterclockwise, starting at the origin when
// it is a vertex and at the lowest-leftmost vertex otherwise. Collinear and
// duplicate points are dropped.
std::vector<Point2> convex_hull(std::vector<Point2> points);

// Signed shoelace area (positive for counterclockwise order).
ExactScalar signed_area(const std::vector<Point2>& polygon);

// Row vector times the 2x2 matrix [[m11, m12], [m21, m22]].
Point2 apply_row(const Point2& p, const ExactScalar& m11, const ExactScalar& m12,
                 const ExactScalar& m21, const ExactScalar& m22);

}  // namespace planeval
