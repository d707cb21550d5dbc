#include "planeval/geometry.hpp"

#include <algorithm>

namespace planeval {

ExactScalar cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Point2> hull;
  auto sweep = [&](auto first, auto last, std::size_t floor) {
    for (auto it = first; it != last; ++it) {
      while (hull.size() >= floor + 2 && cross(hull[hull.size() - 2], hull.back(), *it).sign() <= 0) {
        hull.pop_back();
      }
      hull.push_back(*it);
    }
    hull.pop_back();
  };
  sweep(pts.begin(), pts.end(), 0);
  sweep(pts.rbegin(), pts.rend(), hull.size());

  Point2 origin{0, 0};
  auto start = std::find(hull.begin(), hull.end(), origin);
  if (start == hull.end()) {
    start = std::min_element(hull.begin(), hull.end(), [](const Point2& p, const Point2& q) {
      if (auto c = p.y <=> q.y; c != 0) return c < 0;
      return p.x < q.x;
    });
  }
  std::rotate(hull.begin(), start, hull.end());
  return hull;
}

ExactScalar signed_area(const std::vector<Point2>& poly) {
  ExactScalar twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / ExactScalar(2);
}

Point2 apply_row(const Point2& p, const ExactScalar& m11, const ExactScalar& m12,
                 const ExactScalar& m21, const ExactScalar& m22) {
  return {p.x * m11 + p.y * m21, p.x * m12 + p.y * m22};
}

}  // namespace planeval
