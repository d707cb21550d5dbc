#include "fixtures.hpp"
#include "generators.hpp"

#include "planeval/error.hpp"
#include "planeval/zariski.hpp"

#include <doctest.h>

using namespace planeval;
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

std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_SUITE("zariski") {
  TEST_CASE("intersection form on the generators") {
    auto H = DivisorClass::hyperplane(3);
    auto E2 = DivisorClass::exceptional(3, 2);
    CHECK(intersect(H, H) == 1);
    CHECK(intersect(E2, E2) == -1);
    CHECK(intersect(H, E2) == 0);
    CHECK(intersect(E2, DivisorClass::exceptional(3, 3)) == 0);
    CHECK(code_of([&] { intersect(H, DivisorClass::hyperplane(2)); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { (void)(H + DivisorClass::hyperplane(4)); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([] { DivisorClass::exceptional(3, 4); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { DivisorClass::exceptional(3, 0); }) == ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("divisor class arithmetic") {
    auto a = DivisorClass{2, rats({1, -1})};
    auto b = DivisorClass{1, rats({0, 3})};
    CHECK(a + b == DivisorClass{3, rats({1, 2})});
    CHECK(a - b == DivisorClass{1, rats({1, -4})});
    CHECK(q(1, 2) * a == DivisorClass{1, {q(1, 2), q(-1, 2)}});
    CHECK(a - a == DivisorClass::zero(2));
  }

  TEST_CASE("strict transforms") {
    auto sat = ProximityCluster::from_satellites({std::nullopt, std::nullopt, 1});
    CHECK(strict_transform(sat, 3, 1) == DivisorClass{0, rats({1, -1, -1})});
    CHECK(strict_transform(sat, 3, 2) == DivisorClass{0, rats({0, 1, -1})});
    CHECK(strict_transform(sat, 3, 3) == DivisorClass{0, rats({0, 0, 1})});
    CHECK(strict_transform(sat, 2, 1) == DivisorClass{0, rats({1, -1})});
    CHECK(intersect(strict_transform(sat, 3, 1), strict_transform(sat, 3, 1)) == -3);
    CHECK(code_of([&] { strict_transform(sat, 4, 1); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([&] { strict_transform(sat, 2, 3); }) == ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("curve classes") {
    CHECK(curve_class(2, {Integer(1)}, 3) == DivisorClass{2, rats({-1, 0, 0})});
    CHECK(code_of([] { curve_class(1, {Integer(1), Integer(1)}, 1); }) == ErrorCode::DimensionMismatch);
  }

  TEST_CASE("negative definiteness") {
    CHECK(negative_definite({}));
    CHECK(negative_definite({{rats({-2, 1})}, {rats({1, -2})}}));
    CHECK_FALSE(negative_definite({{rats({-1, 1})}, {rats({1, -1})}}));
    CHECK_FALSE(negative_definite({{rats({1})}}));
    CHECK_FALSE(negative_definite({{rats({0})}}));
  }

  TEST_CASE("example1 at t = 0 and at the break point") {
    auto doc = fixtures::load("example1");
    auto v = fixtures::flag_of(doc);
    const auto& sup = doc.mu_source->line_support;
    auto z0 = decompose_npi(v, sup, 0);
    CHECK(z0.positive == DivisorClass::hyperplane(12));
    CHECK(z0.negative == DivisorClass::zero(12));
    CHECK(z0.components.empty());
    CHECK(check_zariski(v, sup, z0).all());

    Rational t0 = q(303, 18);
    auto z = decompose_npi(v, sup, t0);
    CHECK(z.regime == Regime::BelowBreak);
    auto Dr = curve_class(18, v.table().multiplicities(12), 12);
    CHECK(z.positive == q(1, 18) * Dr);
    CHECK(intersect(z.positive, z.positive) == q(18 * 18 - 303, 18 * 18));
    CHECK(check_zariski(v, sup, z).all());

    auto zt = decompose_npi(v, sup, 18);
    CHECK(zt.regime == Regime::AboveBreak);
    CHECK(zt.positive == DivisorClass::zero(12));
    CHECK(check_zariski(v, sup, zt).all());

    CHECK(code_of([&] { decompose_npi(v, sup, -1); }) == ErrorCode::TOutOfRange);
    CHECK(code_of([&] { decompose_npi(v, sup, q(37, 2)); }) == ErrorCode::TOutOfRange);
    auto ex2 = fixtures::load("example2");
    CHECK(code_of([&] { decompose_npi(fixtures::flag_of(ex2), {1, 2}, 1); }) == ErrorCode::NotNPI);
    CHECK(code_of([&] { slice_body(fixtures::flag_of(ex2), {1, 2}); }) == ErrorCode::NotNPI);
  }

  TEST_CASE("example1 slice body") {
    auto doc = fixtures::load("example1");
    auto v = fixtures::flag_of(doc);
    CHECK(slice_body(v, doc.mu_source->line_support) == body_npi(v, doc.mu_source->line_support));
  }

  TEST_CASE("property: strict transforms meet exactly along dual graph edges") {
    gen::Gen g(501);
    for (int it = 0; it < 200; ++it) {
      auto c = g.cluster(1, 20);
      std::size_t n = c.size();
      auto dg = dual_graph(c, n);
      for (PointId i = 1; i <= n; ++i) {
        auto Ei = strict_transform(c, n, i);
        CHECK(intersect(Ei, Ei) == -Rational(long(1 + c.proximate_points(i, n).size())));
        for (PointId j = i + 1; j <= n; ++j) {
          CHECK(intersect(Ei, strict_transform(c, n, j)) == (dg.adjacent(i, j) ? 1 : 0));
        }
      }
    }
  }

  TEST_CASE("property: decompositions on random NPI inputs") {
    gen::Gen g(502);
    for (int it = 0; it < 80; ++it) {
      auto in = g.npi_input(2, 16);
      auto flags = gen::Gen::flags(in.cluster);
      auto v = build_flag(in.cluster, flags[g.below(flags.size())]);
      auto chk = check_npi(in.cluster, v.r(), in.support);
      Rational nu(chk.nu_v);
      Rational t0 = Rational(v.contact_r().betabar.back()) / nu;
      for (const Rational& t : std::vector<Rational>{0, t0 / 2, t0, (t0 + nu) / 2, nu}) {
        auto z = decompose_npi(v, in.support, t);
        auto k = check_zariski(v, in.support, z);
        CHECK(k.sum);
        CHECK(k.orthogonal);
        CHECK(k.negative_definite);
        CHECK(k.nef_on_test_set);
        for (const auto& comp : z.components) CHECK(comp.coeff > 0);
        CHECK(intersect(z.positive, z.positive) >= 0);
      }
      CHECK(slice_body(v, in.support) == body_npi(v, in.support));
    }
  }
}
