#include "fixtures.hpp"
#include "generators.hpp"

#include "planeval/error.hpp"
#include "planeval/io.hpp"
#include "planeval/render.hpp"

#include <doctest.h>

using namespace planeval;
using fixtures::pt;
using fixtures::q;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::SchemaError;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("fixtures round-trip") {
    for (const char* name : {"enric", "example1", "example2", "example3"}) {
      auto doc = fixtures::load(name);
      CHECK(parse_problem(to_json(doc)) == doc);
      CHECK(parse_problem_text(to_json(doc).dump()) == doc);
    }
  }

  TEST_CASE("defaults when fields are omitted") {
    auto doc = parse_problem_text(R"({"cluster":[{},{},{"satellite_of":1}],"flag":{"q":"free"}})");
    CHECK(doc.cluster.size() == 3);
    CHECK(doc.cluster.is_satellite(3));
    CHECK(doc.flag == FlagSpec::free(3));
    CHECK_FALSE(doc.mu_source.has_value());
    auto ex1 = fixtures::load("example1");
    CHECK(ex1.flag == FlagSpec::satellite(12, 10));
    CHECK(ex1.mu_source->kind == MuKind::Npi);
  }

  TEST_CASE("parse and schema errors") {
    CHECK(code_of([] { parse_problem_text("{"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_problem_text("[]"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_problem_text("{}"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_problem_text(R"({"cluster":[]})"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_problem_text(R"({"cluster":[{"id":0}]})"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_problem_text(R"({"cluster":[{"id":"a"}]})"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_problem_text(R"({"cluster":[{}],"flag":{"q":"other"}})"); }) ==
          ErrorCode::SchemaError);
    CHECK(code_of([] { parse_problem_text(R"({"cluster":[{}],"flag":{"q":"satellite"}})"); }) ==
          ErrorCode::SchemaError);
    CHECK(code_of([] { parse_problem_text(R"({"cluster":[{}],"mu_source":{"kind":"x"}})"); }) ==
          ErrorCode::SchemaError);
    CHECK(code_of([] {
            parse_problem_text(R"({"cluster":[{}],"mu_source":{"kind":"curve","degree":0,"branches":[]}})");
          }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_problem_text(fixtures::fixture_text("bad_satellite")); }) ==
          ErrorCode::SatelliteTargetInvalid);
    CHECK(code_of([] { parse_problem_text(R"({"cluster":[{"id":1},{"id":3}]})"); }) ==
          ErrorCode::NonConsecutiveIds);
    CHECK(code_of([] { rational_from_json(Json("1/x")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { rational_from_json(Json("1/0")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { rational_from_json(Json(1.5)); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { point_from_json(Json::array({1})); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { matrix_from_json(Json::array({1, 2})); }) == ErrorCode::SchemaError);
  }

  TEST_CASE("scalars and points") {
    CHECK(to_json(q(-3, 6)) == Json("-1/2"));
    CHECK(rational_from_json(Json("-1/2")) == q(-1, 2));
    CHECK(rational_from_json(Json(7)) == q(7));
    CHECK(integer_from_json(Json("123456789012345678901234567890")) ==
          Integer("123456789012345678901234567890"));
    ExactScalar s(q(1, 2), q(-3, 4), 1374);
    CHECK(scalar_from_json(to_json(s)) == s);
    CHECK(to_json(ExactScalar(q(5, 3))) == Json("5/3"));
    CHECK(scalar_from_json(to_json_object(ExactScalar(q(5, 3)))) == ExactScalar(q(5, 3)));
    Point2 p{s, ExactScalar(q(2, 7))};
    CHECK(point_from_json(to_json(p)) == p);
    Matrix2 m{q(1, 9), -1, 0, 3};
    CHECK(matrix_from_json(to_json(m)) == m);
  }

  TEST_CASE("bodies, contact data and decompositions round-trip") {
    auto doc = fixtures::load("example1");
    auto v = fixtures::flag_of(doc);
    auto b = body_npi(v, doc.mu_source->line_support);
    CHECK(body_from_json(to_json(b)) == b);
    auto enric = fixtures::load("enric");
    auto bm = body_minimal(fixtures::flag_of(enric));
    CHECK(body_from_json(Json::parse(to_json(bm).dump())) == bm);
    auto mc = maximal_contact_values(enric.cluster, 10);
    auto mc2 = contact_from_json(to_json(mc));
    CHECK(mc2.betabar == mc.betabar);
    CHECK(mc2.e == mc.e);
    CHECK(mc2.n_factors == mc.n_factors);
    CHECK(mc2.g == mc.g);
    CHECK(mc2.volume == mc.volume);
    auto pe = puiseux_exponents(mc);
    auto pe2 = puiseux_from_json(to_json(pe));
    CHECK(pe2.beta_prime == pe.beta_prime);
    CHECK(pe2.cf == pe.cf);
    for (const Rational& t : std::vector<Rational>{0, 5, q(303, 18), 18}) {
      auto z = decompose_npi(v, doc.mu_source->line_support, t);
      CHECK(zariski_from_json(Json::parse(to_json(z).dump())) == z);
    }
  }

  TEST_CASE("reports") {
    auto enric = fixtures::load("enric");
    auto rep = invariants_report(enric.cluster);
    CHECK(rep.dump().find("1374") != std::string::npos);
    auto g = graph_to_json(dual_graph(enric.cluster, 10));
    CHECK(g.is_object());
  }

  TEST_CASE("dot rendering") {
    auto chain = ProximityCluster::from_satellites({std::nullopt, std::nullopt});
    auto dot = render_dot(dual_graph(chain, 2));
    CHECK(dot.find("graph dual {") == 0);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    auto doc = fixtures::load("example3");
    auto v = fixtures::flag_of(doc);
    auto cg = curve_dual_graph(v, doc.mu_source->curve);
    CHECK(curve_graph_connected(cg));
    CHECK(render_dot(cg.graph, cg.attachments).find("-- C;") != std::string::npos);
  }

  TEST_CASE("svg rendering") {
    auto doc = fixtures::load("example2");
    auto v = fixtures::flag_of(doc);
    auto svg = render_svg(body_nonminimal(v, make_certificate(v, doc.mu_source->curve)));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("27/2") != std::string::npos);
    CHECK(display(ExactScalar::sqrt(2)).find("sqrt") != std::string::npos);
  }

  TEST_CASE("property: random documents round-trip") {
    gen::Gen g(601);
    for (int it = 0; it < 200; ++it) {
      ProblemDocument doc;
      doc.cluster = g.cluster(1, 25);
      doc.flag = g.flag(doc.cluster);
      auto v = build_flag(doc.cluster, *doc.flag);
      MuSource mu;
      switch (g.below(3)) {
        case 0: mu.kind = MuKind::Minimal; break;
        case 1:
          mu.kind = MuKind::Npi;
          mu.line_support = {1, 2};
          break;
        default:
          mu.kind = MuKind::Curve;
          mu.curve = g.curve(v, 1 + g.below(3));
          break;
      }
      doc.mu_source = mu;
      CHECK(parse_problem_text(to_json(doc).dump(2)) == doc);
      auto b = body_minimal(v);
      CHECK(body_from_json(Json::parse(to_json(b).dump())) == b);
    }
  }
}
