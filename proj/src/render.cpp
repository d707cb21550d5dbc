#include "planeval/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace planeval {

CurveGraph curve_dual_graph(const ExceptionalValuation& val, const CurveSpec& curve) {
  std::set<PointId> att;
  PointId top = val.r();
  for (const auto& b : curve.branches) {
    for (PointId j : excess_points(val, b)) att.insert(j);
    top = std::max(top, b.mults.size());
  }
  PointId N = top + 2;
  std::vector<std::pair<PointId, PointId>> edges;
  for (auto e : val.limit_graph(N).edges()) {
    if (e.second < N) edges.push_back(e);
  }
  return {DualGraph(N - 1, edges), {att.begin(), att.end()}};
}

bool curve_graph_connected(const CurveGraph& cg) {
  std::size_t n = cg.graph.size();
  auto edges = cg.graph.edges();
  for (PointId a : cg.attachments) edges.emplace_back(a, n + 1);
  return DualGraph(n + 1, edges).component(1).size() == n + 1;
}

std::string render_dot(const DualGraph& graph, const std::vector<PointId>& attachments) {
  std::ostringstream os;
  os << "graph dual {\n";
  for (PointId v = 1; v <= graph.size(); ++v) os << "  " << v << ";\n";
  if (!attachments.empty()) os << "  C [shape=box];\n";
  for (auto [a, b] : graph.edges()) os << "  " << a << " -- " << b << ";\n";
  for (PointId a : attachments) os << "  " << a << " -- C;\n";
  os << "}\n";
  return os.str();
}

std::string display(const ExactScalar& x) {
  if (x.is_rational()) return to_string(x.a());
  return to_string(x.a()) + " + " + to_string(x.b()) + "*sqrt(" + to_string(x.d()) + ")";
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", std::abs(v) < 5e-7 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string render_svg(const Body& body) {
  const double size = 400, pad = 60;
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const auto& p : body.vertices) {
    minx = std::min(minx, p.x.to_double());
    maxx = std::max(maxx, p.x.to_double());
    miny = std::min(miny, p.y.to_double());
    maxy = std::max(maxy, p.y.to_double());
  }
  double span = std::max({maxx - minx, maxy - miny, 1e-9});
  double s = (size - 2 * pad) / span;
  auto X = [&](const ExactScalar& v) { return pad + (v.to_double() - minx) * s; };
  auto Y = [&](const ExactScalar& v) { return size - pad - (v.to_double() - miny) * s; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
     << "  <title>" << shape_name(body.shape) << "</title>\n"
     << "  <polygon fill=\"#cfe3f5\" stroke=\"#1f4e79\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < body.vertices.size(); ++i) {
    if (i) os << ' ';
    os << fixed6(X(body.vertices[i].x)) << ',' << fixed6(Y(body.vertices[i].y));
  }
  os << "\"/>\n";
  for (const auto& p : body.vertices) {
    os << "  <circle cx=\"" << fixed6(X(p.x)) << "\" cy=\"" << fixed6(Y(p.y)) << "\" r=\"3\" fill=\"#1f4e79\"/>\n"
       << "  <text x=\"" << fixed6(X(p.x) + 5) << "\" y=\"" << fixed6(Y(p.y) - 5)
       << "\" font-family=\"monospace\" font-size=\"10\">(" << display(p.x) << ", " << display(p.y)
       << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace planeval
