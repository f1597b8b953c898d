// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>

#include "doctest.h"
#include "hankel31/caratheodory.hpp"

using h31::CaratheodoryParams;
using h31::complex;

TEST_CASE("p2_of: degenerate and hand values") {
  CHECK(h31::p2_of(2.0, complex{0.3, -0.4}) == complex{2.0, 0.0});
  CHECK(h31::p2_of(2.0, complex{-1.0, 0.0}) == complex{2.0, 0.0});
  CHECK(h31::p2_of(0.0, complex{0.0, 0.0}) == complex{0.0, 0.0});
  CHECK(h31::p2_of(1.0, complex{1.0, 0.0}) == complex{2.0, 0.0});
}

TEST_CASE("p3_of: degenerate and hand values") {
  CHECK(h31::p3_of(2.0, complex{0.5, 0.1}, complex{-0.2, 0.6}) == complex{2.0, 0.0});
  CHECK(h31::p3_of(0.0, complex{0.0, 0.0}, complex{1.0, 0.0}) == complex{2.0, 0.0});
  // 4 p3 = 1 + 6 - 3 + 0
  CHECK(h31::p3_of(1.0, complex{1.0, 0.0}, complex{0.4, 0.3}) == complex{1.0, 0.0});
}

TEST_CASE("p4_of: degenerate and hand values") {
  CHECK(h31::p4_of({2.0, {0.2, 0.2}, {0.1, 0.0}, {0.0, 0.9}}) == complex{2.0, 0.0});
  CHECK(h31::p4_of({0.0, {0.0, 0.0}, {1.0, 0.0}, {0.3, -0.2}}) == complex{0.0, 0.0});
  // 8 p4 = 1 + 3 (1 (1 - 3 + 3) + 4) = 16
  CHECK(h31::p4_of({1.0, {1.0, 0.0}, {0.5, 0.5}, {-0.7, 0.1}}) == complex{2.0, 0.0});
}

TEST_CASE("coeffs_from_params: collapse points") {
  const auto koebe = h31::coeffs_from_params({2.0, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  CHECK(koebe.p1 == 2.0);
  CHECK(koebe.p2 == complex{2.0, 0.0});
  CHECK(koebe.p3 == complex{2.0, 0.0});
  CHECK(koebe.p4 == complex{2.0, 0.0});

  const auto ext = h31::coeffs_from_params(h31::extremal_params());
  CHECK(ext.p1 == 0.0);
  CHECK(ext.p2 == complex{0.0, 0.0});
  CHECK(ext.p3 == complex{2.0, 0.0});
  CHECK(ext.p4 == complex{0.0, 0.0});

  const auto zero = h31::coeffs_from_params({0.0, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  CHECK(zero.p2 == complex{0.0, 0.0});
  CHECK(zero.p3 == complex{0.0, 0.0});
  CHECK(zero.p4 == complex{0.0, 0.0});
}

TEST_CASE("domain violations raise") {
  CHECK_THROWS_AS((void)h31::p2_of(-0.1, {0.0, 0.0}), h31::domain_error);
  CHECK_THROWS_AS((void)h31::p2_of(2.1, {0.0, 0.0}), h31::domain_error);
  CHECK_THROWS_AS((void)h31::p2_of(1.0, {1.0, 0.1}), h31::domain_error);
  CHECK_THROWS_AS((void)h31::p3_of(1.0, {0.0, 0.0}, {0.0, 1.0 + 1e-9}), h31::domain_error);
  CHECK_THROWS_AS((void)h31::p4_of({1.0, {0.0, 0.0}, {0.0, 0.0}, {1.5, 0.0}}),
                  h31::domain_error);
  CHECK_THROWS_AS((void)h31::sample_params(1, -1), h31::domain_error);
}

TEST_CASE("boundary collapse: p1 == 2 forces (2,2,2,2) exactly") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto params = h31::sample_param_at(7, i);
    params.p1 = 2.0;
    const auto c = h31::coeffs_from_params(params);
    CHECK(c.p2 == complex{2.0, 0.0});
    CHECK(c.p3 == complex{2.0, 0.0});
    CHECK(c.p4 == complex{2.0, 0.0});
  }
}

TEST_CASE("|gamma| == 1 kills the eta and rho dependence exactly") {
  const complex units[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.6, 0.8}, {-0.8, 0.6}};
  for (const complex g : units) {
    REQUIRE(std::norm(g) == 1.0);
    for (std::uint64_t i = 0; i < 50; ++i) {
      const auto a = h31::sample_param_at(11, 2 * i);
      const auto b = h31::sample_param_at(11, 2 * i + 1);
      const double p1 = a.p1;
      CHECK(h31::p3_of(p1, g, a.eta) == h31::p3_of(p1, g, b.eta));
      CHECK(h31::p4_of({p1, g, a.eta, a.rho}) == h31::p4_of({p1, g, b.eta, b.rho}));
    }
  }
}

TEST_CASE("sampler: determinism and invariants") {
  CHECK(h31::sample_params(42, 0).empty());

  const auto s1 = h31::sample_params(42, 500);
  const auto s2 = h31::sample_params(42, 500);
  REQUIRE(s1.size() == 500);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(s1[i].p1 == s2[i].p1);
    CHECK(s1[i].gamma == s2[i].gamma);
    CHECK(s1[i].eta == s2[i].eta);
    CHECK(s1[i].rho == s2[i].rho);
    // random access agrees with the bulk stream
    const auto direct = h31::sample_param_at(42, i);
    CHECK(direct.gamma == s1[i].gamma);
    CHECK(direct.rho == s1[i].rho);
  }

  // different seeds decorrelate
  const auto s3 = h31::sample_params(43, 1);
  CHECK(s3[0].gamma != s1[0].gamma);
}

TEST_CASE("sampler: 1e5 tuples satisfy the parameter and coefficient bounds") {
  constexpr long long kN = 100000;
  double worst = 0.0;
  for (long long i = 0; i < kN; ++i) {
    const auto params = h31::sample_param_at(123, static_cast<std::uint64_t>(i));
    REQUIRE(params.p1 >= 0.0);
    REQUIRE(params.p1 <= 2.0);
    REQUIRE(std::norm(params.gamma) <= 1.0);
    REQUIRE(std::norm(params.eta) <= 1.0);
    REQUIRE(std::norm(params.rho) <= 1.0);
    const auto c = h31::coeffs_from_params(params);
    worst = std::max({worst, std::abs(c.p2), std::abs(c.p3), std::abs(c.p4)});
  }
  CHECK(worst <= 2.0 + 1e-12);
}
