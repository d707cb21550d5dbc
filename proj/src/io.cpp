#include "planeval/io.hpp"

#include "planeval/error.hpp"

namespace planeval {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) schema(std::string("field '") + key + "' must be an array");
  return a;
}

std::size_t index_value(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) schema(what + " must be a positive integer");
  return j.get<std::size_t>();
}

Integer integer_value(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  schema(what + " must be an integer");
}

template <class T, class F>
std::vector<T> list_from(const Json& j, F f) {
  if (!j.is_array()) schema("expected an array");
  std::vector<T> out;
  for (const auto& x : j) out.push_back(f(x));
  return out;
}

template <class T>
Json list_to(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }
Json to_json(const Integer& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  schema("rational values must be \"p/q\" strings");
}

Integer integer_from_json(const Json& j) { return integer_value(j, "value"); }

Json to_json_object(const ExactScalar& x) {
  Json d = x.d().fits_slong_p() ? Json(x.d().get_si()) : Json(to_string(x.d()));
  return Json{{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", d}};
}

Json to_json(const ExactScalar& x) { return x.is_rational() ? to_json(x.a()) : to_json_object(x); }

ExactScalar scalar_from_json(const Json& j) {
  if (!j.is_object()) return ExactScalar(rational_from_json(j));
  return ExactScalar(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")),
                     integer_value(field(j, "d"), "radicand"));
}

Json to_json(const Point2& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Point2 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) schema("a point is a pair [x, y]");
  return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

Json to_json(const Body& body) {
  return Json{{"shape", shape_name(body.shape)},
              {"minimal", body.minimal},
              {"muhat", to_json_object(body.muhat)},
              {"vertices", list_to(body.vertices)}};
}

Body body_from_json(const Json& j) {
  Body b;
  std::string s = field(j, "shape").get<std::string>();
  if (s == "triangle") {
    b.shape = Shape::Triangle;
  } else if (s == "quadrilateral") {
    b.shape = Shape::Quadrilateral;
  } else {
    schema("unknown shape '" + s + "'");
  }
  if (!field(j, "minimal").is_boolean()) schema("'minimal' must be a boolean");
  b.minimal = field(j, "minimal").get<bool>();
  b.muhat = scalar_from_json(field(j, "muhat"));
  b.vertices = list_from<Point2>(array_field(j, "vertices"), point_from_json);
  return b;
}

Json to_json(const MaximalContactData& mc) {
  return Json{{"betabar", list_to(mc.betabar)},
              {"e", list_to(mc.e)},
              {"n", list_to(mc.n_factors)},
              {"g", mc.g},
              {"volume", to_json(mc.volume)}};
}

MaximalContactData contact_from_json(const Json& j) {
  MaximalContactData mc;
  mc.betabar = list_from<Integer>(array_field(j, "betabar"), integer_from_json);
  mc.e = list_from<Integer>(array_field(j, "e"), integer_from_json);
  mc.n_factors = list_from<Integer>(array_field(j, "n"), integer_from_json);
  const Json& g = field(j, "g");
  if (!g.is_number_unsigned()) schema("'g' must be a nonnegative integer");
  mc.g = g.get<std::size_t>();
  mc.volume = rational_from_json(field(j, "volume"));
  return mc;
}

Json to_json(const PuiseuxExponents& pe) {
  Json cf = Json::array();
  for (const auto& terms : pe.cf) cf.push_back(list_to(terms));
  return Json{{"beta_prime", list_to(pe.beta_prime)}, {"continued_fractions", cf}};
}

PuiseuxExponents puiseux_from_json(const Json& j) {
  PuiseuxExponents pe;
  pe.beta_prime = list_from<Rational>(array_field(j, "beta_prime"), rational_from_json);
  pe.cf = list_from<std::vector<Integer>>(array_field(j, "continued_fractions"), [](const Json& t) {
    return list_from<Integer>(t, integer_from_json);
  });
  return pe;
}

Json to_json(const DivisorClass& d) { return Json{{"h", to_json(d.h)}, {"e_star", list_to(d.e_star)}}; }

DivisorClass divisor_from_json(const Json& j) {
  return {rational_from_json(field(j, "h")), list_from<Rational>(array_field(j, "e_star"), rational_from_json)};
}

Json to_json(const ZariskiPair& z) {
  Json comps = Json::array();
  for (const auto& c : z.components) {
    comps.push_back(Json{{"divisor", c.index == 0 ? std::string("L") : "E" + std::to_string(c.index)},
                         {"index", c.index},
                         {"coeff", to_json(c.coeff)},
                         {"class", to_json(c.cls)}});
  }
  return Json{{"t", to_json(z.t)},
              {"regime", regime_name(z.regime)},
              {"positive", to_json(z.positive)},
              {"negative", to_json(z.negative)},
              {"components", comps}};
}

ZariskiPair zariski_from_json(const Json& j) {
  ZariskiPair z;
  z.t = rational_from_json(field(j, "t"));
  std::string reg = field(j, "regime").get<std::string>();
  if (reg == regime_name(Regime::BelowBreak)) {
    z.regime = Regime::BelowBreak;
  } else if (reg == regime_name(Regime::AboveBreak)) {
    z.regime = Regime::AboveBreak;
  } else if (reg == regime_name(Regime::MinimalCase)) {
    z.regime = Regime::MinimalCase;
  } else {
    schema("unknown regime '" + reg + "'");
  }
  z.positive = divisor_from_json(field(j, "positive"));
  z.negative = divisor_from_json(field(j, "negative"));
  for (const auto& c : array_field(j, "components")) {
    const Json& idx = field(c, "index");
    if (!idx.is_number_unsigned()) schema("component index must be a nonnegative integer");
    z.components.push_back(
        {idx.get<std::size_t>(), rational_from_json(field(c, "coeff")), divisor_from_json(field(c, "class"))});
  }
  return z;
}

Json to_json(const Matrix2& m) {
  return Json::array({Json::array({to_json(m.m11), to_json(m.m12)}), Json::array({to_json(m.m21), to_json(m.m22)})});
}

Matrix2 matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
      j[1].size() != 2) {
    schema("a matrix is [[m11, m12], [m21, m22]]");
  }
  return {rational_from_json(j[0][0]), rational_from_json(j[0][1]), rational_from_json(j[1][0]),
          rational_from_json(j[1][1])};
}

ProblemDocument parse_problem(const Json& j) {
  try {
    if (!j.is_object()) schema("document must be an object");
    ProblemDocument doc;
    std::vector<PointRecord> records;
    for (const auto& p : array_field(j, "cluster")) {
      if (!p.is_object()) schema("cluster entries must be objects");
      PointRecord rec;
      rec.id = p.contains("id") ? index_value(p["id"], "id") : records.size() + 1;
      if (p.contains("satellite_of") && !p["satellite_of"].is_null()) {
        rec.satellite_of = index_value(p["satellite_of"], "satellite_of");
      }
      records.push_back(rec);
    }
    if (records.empty()) schema("cluster must be nonempty");
    doc.cluster = ProximityCluster::validate(records);

    if (j.contains("flag")) {
      const Json& f = j["flag"];
      FlagSpec spec;
      spec.r = f.contains("r") ? index_value(f["r"], "r") : doc.cluster.size();
      const Json& q = field(f, "q");
      if (q == "satellite") {
        spec.eta = index_value(field(f, "eta"), "eta");
      } else if (q != "free") {
        schema("flag q must be \"free\" or \"satellite\"");
      }
      doc.flag = spec;
    }

    if (j.contains("mu_source")) {
      const Json& m = j["mu_source"];
      MuSource mu;
      const Json& kind = field(m, "kind");
      if (kind == "minimal") {
        mu.kind = MuKind::Minimal;
      } else if (kind == "npi") {
        mu.kind = MuKind::Npi;
        for (const auto& x : array_field(m, "line_support")) mu.line_support.push_back(index_value(x, "line_support entry"));
      } else if (kind == "curve") {
        mu.kind = MuKind::Curve;
        mu.curve.degree = integer_value(field(m, "degree"), "degree");
        if (mu.curve.degree <= 0) schema("degree must be positive");
        for (const auto& b : array_field(m, "branches")) {
          mu.curve.branches.push_back(BranchSpec{list_from<Integer>(b, integer_from_json)});
        }
      } else {
        schema("mu_source kind must be minimal, npi or curve");
      }
      doc.mu_source = mu;
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    schema(e.what());
  }
}

ProblemDocument parse_problem_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return parse_problem(j);
}

Json to_json(const ProblemDocument& doc) {
  Json cluster = Json::array();
  for (const auto& rec : doc.cluster.records()) {
    Json p{{"id", rec.id}};
    if (rec.satellite_of) p["satellite_of"] = *rec.satellite_of;
    cluster.push_back(p);
  }
  Json j{{"cluster", cluster}};
  if (doc.flag) {
    Json f{{"r", doc.flag->r}, {"q", doc.flag->is_satellite() ? "satellite" : "free"}};
    if (doc.flag->eta) f["eta"] = *doc.flag->eta;
    j["flag"] = f;
  }
  if (doc.mu_source) {
    const auto& mu = *doc.mu_source;
    Json m;
    switch (mu.kind) {
      case MuKind::Minimal:
        m = Json{{"kind", "minimal"}};
        break;
      case MuKind::Npi:
        m = Json{{"kind", "npi"}, {"line_support", mu.line_support}};
        break;
      case MuKind::Curve: {
        Json branches = Json::array();
        for (const auto& b : mu.curve.branches) branches.push_back(list_to(b.mults));
        m = Json{{"kind", "curve"}, {"degree", to_json(mu.curve.degree)}, {"branches", branches}};
        break;
      }
    }
    j["mu_source"] = m;
  }
  return j;
}

Json invariants_report(const ProximityCluster& cluster) {
  InvariantTable table(cluster);
  PointId n = cluster.size();
  const auto& mc = table.contact(n);
  const auto& shape = table.shape(n);
  return Json{{"points", n},
              {"multiplicities", list_to(table.multiplicities(n))},
              {"maximal_contact", to_json(mc)},
              {"puiseux", to_json(puiseux_exponents(mc))},
              {"dead_ends", shape.dead_ends},
              {"star_vertices", shape.star_vertices},
              {"tail_length", shape.tail_length}};
}

Json cluster_report(const ProximityCluster& cluster) {
  Json points = Json::array();
  for (PointId i = 1; i <= cluster.size(); ++i) {
    points.push_back(Json{{"id", i},
                          {"kind", cluster.is_satellite(i) ? "satellite" : "free"},
                          {"proximate_to", cluster.proximity_set(i)}});
  }
  return Json{{"valid", true}, {"points", points}};
}

Json graph_to_json(const DualGraph& graph) {
  Json vertices = Json::array();
  for (PointId v = 1; v <= graph.size(); ++v) vertices.push_back(v);
  Json edges = Json::array();
  for (auto [a, b] : graph.edges()) edges.push_back(Json::array({a, b}));
  return Json{{"vertices", vertices}, {"edges", edges}};
}

}  // namespace planeval
