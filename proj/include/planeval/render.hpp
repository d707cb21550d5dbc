#pragma once

#include "planeval/cluster.hpp"
#include "planeval/flagval.hpp"
#include "planeval/okbody.hpp"

#include <string>
#include <vector>

namespace planeval {

// Limit dual graph of the flag valuation cut before the chain runs out,
// plus the vertices met by the strict transform of a curve.
struct CurveGraph {
  DualGraph graph;
  std::vector<PointId> attachments;  // ascending, unique
};

CurveGraph curve_dual_graph(const ExceptionalValuation& val, const CurveSpec& curve);

// True when the graph with the curve vertex joined to its attachments is connected.
bool curve_graph_connected(const CurveGraph& cg);

// Undirected DOT, sorted edges; a vertex "C" joined to each attachment when given.
std::string render_dot(const DualGraph& graph, const std::vector<PointId>& attachments = {});

// Human-readable exact value: "p/q" or "a + b*sqrt(d)".
std::string display(const ExactScalar& x);

// SVG 1.1 drawing of the polygon, fitted to the viewport, vertices labelled.
std::string render_svg(const Body& body);

}  // namespace planeval
