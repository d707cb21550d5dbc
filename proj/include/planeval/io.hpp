#pragma once

#include "planeval/cluster.hpp"
#include "planeval/exact_scalar.hpp"
#include "planeval/flagval.hpp"
#include "planeval/invariants.hpp"
#include "planeval/okbody.hpp"
#include "planeval/zariski.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace planeval {

using Json = nlohmann::ordered_json;

enum class MuKind { Minimal, Npi, Curve };

struct MuSource {
  MuKind kind = MuKind::Minimal;
  std::vector<PointId> line_support;
  CurveSpec curve;
  bool operator==(const MuSource&) const = default;
};

struct ProblemDocument {
  ProximityCluster cluster;
  std::optional<FlagSpec> flag;
  std::optional<MuSource> mu_source;
  bool operator==(const ProblemDocument&) const = default;
};

// Schema violations throw SchemaError; cluster violations throw the
// validation error of the cluster module.
ProblemDocument parse_problem(const Json& j);
ProblemDocument parse_problem_text(const std::string& text);
Json to_json(const ProblemDocument& doc);

Json to_json(const Rational& x);
Json to_json(const Integer& x);
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

// "p/q" when rational, {"a","b","d"} otherwise.
Json to_json(const ExactScalar& x);
// Always {"a","b","d"}.
Json to_json_object(const ExactScalar& x);
ExactScalar scalar_from_json(const Json& j);

Json to_json(const Point2& p);
Point2 point_from_json(const Json& j);

Json to_json(const Body& body);
Body body_from_json(const Json& j);

Json to_json(const MaximalContactData& mc);
MaximalContactData contact_from_json(const Json& j);

Json to_json(const PuiseuxExponents& pe);
PuiseuxExponents puiseux_from_json(const Json& j);

Json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

Json to_json(const ZariskiPair& z);
ZariskiPair zariski_from_json(const Json& j);

Json to_json(const Matrix2& m);
Matrix2 matrix_from_json(const Json& j);

// Full invariant report for nu_n, n = cluster size.
Json invariants_report(const ProximityCluster& cluster);
Json cluster_report(const ProximityCluster& cluster);
Json graph_to_json(const DualGraph& graph);

}  // namespace planeval
