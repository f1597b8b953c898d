// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "hankel31/caratheodory.hpp"
#include "hankel31/optimizer.hpp"
#include "hankel31/roots.hpp"
#include "hankel31/surface.hpp"

using h31::CuboidPoint;
using h31::Order;
using h31::OptimizerConfig;

namespace {

OptimizerConfig small_cfg() {
  OptimizerConfig cfg;
  cfg.grid_steps = {81, 41, 41};
  cfg.sample_count = 20000;
  return cfg;
}

}  // namespace

TEST_CASE("grid_max: corner argmax and closed-form value") {
  OptimizerConfig cfg;  // default (201,101,101)
  const auto r0 = h31::grid_max(Order{0.0}, cfg);
  CHECK(std::abs(r0.value - 4.0 / 9.0) <= 1e-10);
  CHECK(r0.argmax.p == 0.0);
  CHECK(r0.argmax.x == 0.0);
  CHECK(r0.argmax.y == 1.0);
  CHECK(r0.source == h31::MaxSource::corner);
  CHECK(r0.evaluations == 201LL * 101 * 101);

  const auto r3 = h31::grid_max(Order{0.3}, cfg);
  CHECK(std::abs(r3.value - 4.0 * 0.49 / 9.0) <= 1e-6);

  const auto r99 = h31::grid_max(Order{0.999}, cfg);
  CHECK(r99.value <= 1e-5);
}

TEST_CASE("refine_local: corner fixed point and face ascent") {
  const auto cfg = small_cfg();
  const Order o2{0.2};
  const auto corner = h31::refine_local(o2, {0.0, 0.0, 1.0}, cfg);
  CHECK(corner.value == h31::big_z(o2, {0.0, 0.0, 1.0}));
  CHECK(corner.argmax.p == 0.0);
  CHECK(corner.argmax.x == 0.0);
  CHECK(corner.argmax.y == 1.0);

  // starting near the x=1 face stationary point, the ascent first passes the
  // face value 0.31959... and then leaves the face (Z grows as x drops below
  // 1), ending at the global corner
  const Order o0{0.0};
  const auto r = h31::refine_local(o0, {1.43, 1.0, 0.5}, cfg);
  CHECK(r.value >= 0.3195952682404597);
  CHECK(r.value <= 4.0 / 9.0 + 1e-12);
  CHECK(r.value == doctest::Approx(4.0 / 9.0).epsilon(1e-8));

  // monotonicity: refinement never loses to its start
  for (std::uint64_t i = 0; i < 50; ++i) {
    const CuboidPoint start{2.0 * h31::detail::u01(2, i, 0), h31::detail::u01(2, i, 1),
                            h31::detail::u01(2, i, 2)};
    const double v0 = h31::big_z(o2, start);
    CHECK(h31::refine_local(o2, start, cfg).value >= v0);
  }
}

TEST_CASE("global_max: sharp value on the verified alpha range") {
  OptimizerConfig cfg;
  const double a0 = h31::alpha0().root;
  for (double alpha = 0.0; alpha <= 0.361; alpha += 0.04) {
    if (std::abs(alpha - a0) <= 0.02) continue;
    const Order order{alpha};
    const auto r = h31::global_max(order, cfg);
    CHECK(std::abs(r.value - h31::sharp_bound(order)) <= 1e-8);
    CHECK(r.argmax.p == 0.0);
    CHECK(r.argmax.x == 0.0);
    CHECK(r.argmax.y == 1.0);

    // sanity floor: no corner of the cuboid beats the reported maximum
    for (double p : {0.0, 2.0})
      for (double x : {0.0, 1.0})
        for (double y : {0.0, 1.0})
          CHECK(r.value >= h31::big_z(order, {p, x, y}));
  }
}

TEST_CASE("global_max at alpha = 1/2 matches the known sharp constant") {
  OptimizerConfig cfg;
  const auto r = h31::global_max(Order{0.5}, cfg);
  CHECK(std::abs(r.value - 1.0 / 9.0) <= 1e-8);
}

TEST_CASE("grid refinement monotonicity: doubling the grid") {
  const Order order{0.2};
  OptimizerConfig coarse;
  coarse.grid_steps = {201, 101, 101};
  OptimizerConfig fine;
  fine.grid_steps = {401, 201, 201};
  const double v1 = h31::global_max(order, coarse).value;
  const double v2 = h31::global_max(order, fine).value;
  CHECK(v2 >= v1 - 1e-9);
}

TEST_CASE("parallel and serial runs are bitwise identical") {
  const Order order{0.17};
  const auto cfg = small_cfg();
  const auto g1 = h31::grid_max(order, cfg, 1);
  const auto g4 = h31::grid_max(order, cfg, 4);
  CHECK(g1.value == g4.value);
  CHECK(g1.argmax.p == g4.argmax.p);
  CHECK(g1.argmax.x == g4.argmax.x);
  CHECK(g1.argmax.y == g4.argmax.y);

  const auto m1 = h31::global_max(order, cfg, 1);
  const auto m4 = h31::global_max(order, cfg, 4);
  CHECK(m1.value == m4.value);
  CHECK(m1.argmax.p == m4.argmax.p);

  const auto p1 = h31::probe_max(order, cfg, 1);
  const auto p4 = h31::probe_max(order, cfg, 4);
  CHECK(p1.value == p4.value);
  CHECK(p1.witness_index == p4.witness_index);
}

TEST_CASE("probe_max: extremal witness and dominance") {
  const auto cfg_empty = [] {
    auto c = small_cfg();
    c.sample_count = 0;
    return c;
  }();
  for (double alpha : {0.0, 0.2, 0.36}) {
    const Order order{alpha};
    const auto r = h31::probe_max(order, cfg_empty);
    CHECK(std::abs(r.value - h31::sharp_bound(order)) <= 1e-14);
    CHECK(r.witness_index == -1);
    CHECK(r.witness.p1 == 0.0);
    CHECK(r.witness.eta == h31::complex{1.0, 0.0});
  }

  const auto cfg = small_cfg();
  const auto r0 = h31::probe_max(Order{0.0}, cfg);
  CHECK(std::abs(r0.value - 4.0 / 9.0) <= 1e-14);
  CHECK(r0.witness_index == -1);

  const auto r5 = h31::probe_max(Order{0.5}, cfg);
  CHECK(r5.value <= 1.0 / 9.0 + 1e-12);

  // probe never beats the optimizer on the verified alpha range
  const auto g = h31::global_max(Order{0.2}, cfg);
  const auto p = h31::probe_max(Order{0.2}, cfg);
  CHECK(p.value <= g.value + 1e-10);
}

TEST_CASE("interior_critical_scan: empty report") {
  OptimizerConfig cfg;
  cfg.grid_steps = {201, 101, 101};
  for (double alpha : {0.0, 0.3}) {
    const auto rep = h31::interior_critical_scan(Order{alpha}, cfg);
    CHECK(rep.empty());
  }
}
