#include "fixtures.hpp"
#include "generators.hpp"

#include "planeval/error.hpp"
#include "planeval/invariants.hpp"
#include "planeval/oracle.hpp"

#include <doctest.h>

using namespace planeval;
using fixtures::q;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::size_t run_count(const std::vector<Integer>& xs) {
  std::size_t runs = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k == 0 || xs[k] != xs[k - 1]) ++runs;
  }
  return runs;
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("enric maximal contact values and Puiseux exponents") {
    auto doc = fixtures::load("enric");
    auto mc = maximal_contact_values(doc.cluster, 10);
    CHECK(mc.betabar == ints({24, 57, 458, 1374}));
    CHECK(mc.g == 2);
    CHECK(mc.e == ints({24, 3, 1}));
    CHECK(mc.n_factors == ints({8, 3}));
    CHECK(mc.volume == q(1, 1374));
    auto pe = puiseux_exponents(mc);
    CHECK(pe.beta_prime == std::vector<Rational>{q(57, 24), q(5, 3), q(1)});
    CHECK(pe.cf == std::vector<std::vector<Integer>>{ints({2, 2, 1, 2}), ints({1, 1, 2}), ints({1})});
  }

  TEST_CASE("maximal contact values of the example clusters") {
    CHECK(maximal_contact_values(fixtures::load("example1").cluster, 12).betabar == ints({9, 30, 101, 303}));
    CHECK(maximal_contact_values(fixtures::load("example2").cluster, 12).betabar == ints({8, 12, 45, 180}));
    CHECK(maximal_contact_values(fixtures::load("example3").cluster, 19).betabar == ints({48, 329, 15792}));
  }

  TEST_CASE("Puiseux exponents of example1 by the defining formula") {
    auto mc = maximal_contact_values(fixtures::load("example1").cluster, 12);
    auto pe = puiseux_exponents(mc);
    CHECK(pe.beta_prime == std::vector<Rational>{q(10, 3), q(14, 3), q(1)});
  }

  TEST_CASE("free chains") {
    for (std::size_t n = 1; n <= 7; ++n) {
      auto c = ProximityCluster::from_satellites(std::vector<std::optional<PointId>>(n));
      auto mc = maximal_contact_values(c, n);
      CHECK(mc.betabar == ints({1, long(n)}));
      CHECK(mc.g == 0);
      auto pe = puiseux_exponents(mc);
      CHECK(pe.beta_prime == std::vector<Rational>{Rational(long(n))});
      CHECK(pe.cf == std::vector<std::vector<Integer>>{ints({long(n)})});
    }
  }

  TEST_CASE("curvette multiplicities and values") {
    auto doc = fixtures::load("enric");
    CHECK(curvette_multiplicities(doc.cluster, 1) == ints({1}));
    CHECK(curvette_multiplicities(doc.cluster, 10) == ints({24, 24, 9, 9, 6, 3, 3, 2, 1, 1}));
    CHECK(curvette_value(doc.cluster, 10, 10) == 1374);
    for (PointId n = 1; n <= 10; ++n) {
      CHECK(curvette_value(doc.cluster, n, 1) == curvette_multiplicities(doc.cluster, n)[0]);
      for (PointId k = 1; k <= 10; ++k) CHECK(curvette_value(doc.cluster, n, k) == curvette_value(doc.cluster, k, n));
    }
    auto sat = ProximityCluster::from_satellites({std::nullopt, std::nullopt, 1});
    CHECK(curvette_multiplicities(sat, 3) == ints({2, 1, 1}));
    CHECK_THROWS_AS(curvette_value(sat, 4, 1), Error);
  }

  TEST_CASE("intersection formula small cases and errors") {
    auto chain = ProximityCluster::from_satellites({std::nullopt, std::nullopt});
    CHECK(intersection_formula(chain, 1, 2) == 1);
    auto doc = fixtures::load("enric");
    InvariantTable t(doc.cluster);
    CHECK(intersection_formula(doc.cluster, t.shape(10).dead_ends[0], 10) == 57);
    try {
      intersection_formula(doc.cluster, 3, 3);
      FAIL("expected OrderViolation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderViolation);
    }
    try {
      intersection_formula(doc.cluster, 3, 11);
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
  }

  TEST_CASE("property: intersection formula equals the Noether oracle") {
    gen::Gen g(201);
    for (int it = 0; it < 150; ++it) {
      auto c = g.cluster(1, 30);
      InvariantTable t(c);
      for (PointId j = 2; j <= c.size(); ++j) {
        for (PointId i = 1; i < j; ++i) {
          Integer f = intersection_formula(t, i, j);
          if (f != noether_intersection_oracle(c, i, j)) {
            FAIL_CHECK("mismatch at (" << i << "," << j << ") on cluster of size " << c.size());
          }
        }
      }
    }
  }

  TEST_CASE("property: maximal contact data invariants") {
    gen::Gen g(202);
    for (int it = 0; it < 300; ++it) {
      auto c = g.cluster(1, 30);
      std::size_t n = c.size();
      auto mc = maximal_contact_values(c, n);
      REQUIRE(mc.betabar.size() == mc.g + 2);
      CHECK(mc.e.front() == mc.betabar.front());
      for (std::size_t j = 1; j <= mc.g; ++j) {
        CHECK(mc.e[j] < mc.e[j - 1]);
        CHECK(mc.n_factors[j - 1] >= 2);
      }
      CHECK(mc.e.back() == 1);
      CHECK(mc.volume * Rational(mc.betabar.back()) == 1);
      auto pe = puiseux_exponents(mc);
      InvariantTable t(c);
      const auto& shape = t.shape(n);
      for (std::size_t j = 0; j < mc.g; ++j) CHECK(pe.beta_prime[j] > 1);
      if (n >= 2 && !c.is_satellite(n)) {
        CHECK(pe.beta_prime.back() == Rational(long(shape.tail_length + 1)));
      }
      for (std::size_t j = 0; j < pe.cf.size(); ++j) {
        CHECK(continued_fraction_value(pe.cf[j]) == pe.beta_prime[j]);
        for (std::size_t k = 1; k < pe.cf[j].size(); ++k) CHECK(pe.cf[j][k] >= 1);
      }
    }
  }

  TEST_CASE("property: continued fractions round-trip") {
    gen::Gen g(203);
    for (int it = 0; it < 1000; ++it) {
      Rational x = make_rational(1 + g.below(100000), 1 + g.below(1000));
      auto cf = continued_fraction(x);
      CHECK(continued_fraction_value(cf) == x);
      if (cf.size() > 1) CHECK(cf.back() >= 2);
    }
    CHECK(continued_fraction(q(57, 24)) == ints({2, 2, 1, 2}));
    CHECK(continued_fraction(q(1)) == ints({1}));
  }

  TEST_CASE("property: Enriques runs match continued fraction lengths") {
    gen::Gen g(204);
    for (int it = 0; it < 300; ++it) {
      auto c = g.cluster(2, 30);
      std::size_t n = c.size();
      InvariantTable t(c);
      const auto& shape = t.shape(n);
      const auto& m = t.multiplicities(n);
      auto pe = puiseux_exponents(t.contact(n));
      for (std::size_t j = 0; j < shape.g; ++j) {
        std::vector<Integer> sub;
        for (PointId v : shape.pairs[j]) sub.push_back(m[v - 1]);
        CHECK(run_count(sub) == pe.cf[j].size());
      }
    }
  }

  TEST_CASE("ratio order is not the reversed graph order on a pinned cluster") {
    auto c = ProximityCluster::from_satellites(
        {std::nullopt, std::nullopt, 1, 2, 2, std::nullopt, std::nullopt, 6});
    InvariantTable t(c);
    auto dg = t.graph(8);
    CHECK_FALSE(intersection_uses_path_form(t, 2));
    // Ratios 2 and 7/4: the left one is larger although 6 does not precede 2.
    CHECK_FALSE(contact_ratio_le(t, 2, 6));
    CHECK_FALSE(precedes(dg, 6, 2));
  }

  TEST_CASE("property: contact ratio order agrees with the dual graph order") {
    gen::Gen g(205);
    for (int it = 0; it < 200; ++it) {
      auto c = g.cluster(2, 20);
      std::size_t n = c.size();
      InvariantTable t(c);
      const auto& dg = t.graph(n);
      for (PointId i = 1; i <= n; ++i) {
        if (intersection_uses_path_form(t, i)) continue;
        for (PointId j = i + 1; j <= n; ++j) CHECK(contact_ratio_le(t, i, j) == precedes(dg, i, j));
      }
    }
  }
}
