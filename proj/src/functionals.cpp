// SPDX-License-Identifier: Apache-2.0
#include "hankel31/functionals.hpp"

#include <algorithm>
#include <cmath>

namespace h31 {

SchlichtCoeffs schlicht_coeffs(const Order& order, const CaratheodoryCoeffs& p) {
  validate(order);
  validate(p);
  const double b = 1.0 - order.alpha;
  const double p1 = p.p1;
  SchlichtCoeffs c;
  c.a2 = p1 * b;
  c.a3 = b / 2.0 * (p.p2 + p1 * p1 * b);
  c.a4 = b / 6.0 * (2.0 * p.p3 + 3.0 * p1 * p.p2 * b + p1 * p1 * p1 * b * b);
  c.a5 = b / 24.0 *
         (6.0 * p.p4 + b * (3.0 * p.p2 * p.p2 + 8.0 * p1 * p.p3) +
          b * b * (6.0 * p1 * p1 * p.p2 + p1 * p1 * p1 * p1 * b));
  return c;
}

complex hankel3(const SchlichtCoeffs& c) {
  return 2.0 * c.a2 * c.a3 * c.a4 - c.a3 * c.a3 * c.a3 - c.a4 * c.a4 -
         c.a2 * c.a2 * c.a5 + c.a3 * c.a5;
}

complex hankel2(const SchlichtCoeffs& c) { return c.a2 * c.a4 - c.a3 * c.a3; }

double fekete_szego_bound(const Order& order, complex lambda) {
  validate(order);
  const double b = 1.0 - order.alpha;
  return b * std::max(1.0, std::abs(3.0 - 2.0 * order.alpha - 4.0 * lambda * b));
}

std::vector<double> extremal_coeffs(const Order& order, int n_max) {
  validate(order);
  if (n_max < 1) throw domain_error("extremal_coeffs: n_max must be >= 1");
  std::vector<double> a(static_cast<std::size_t>(n_max) + 1, 0.0);
  a[1] = 1.0;
  const double two_b = 2.0 * (1.0 - order.alpha);
  for (int n = 2; n <= n_max; ++n) {
    double s = 0.0;
    for (int j = 1; n - 3 * j >= 1; ++j) s += a[static_cast<std::size_t>(n - 3 * j)];
    a[static_cast<std::size_t>(n)] = two_b * s / (n - 1);
  }
  return std::vector<double>(a.begin() + 1, a.end());  // a_1..a_{n_max}
}

SchlichtCoeffs rotate_coeffs(const SchlichtCoeffs& c, double theta) {
  SchlichtCoeffs out;
  out.a2 = std::polar(1.0, theta) * c.a2;
  out.a3 = std::polar(1.0, 2.0 * theta) * c.a3;
  out.a4 = std::polar(1.0, 3.0 * theta) * c.a4;
  out.a5 = std::polar(1.0, 4.0 * theta) * c.a5;
  return out;
}

}  // namespace h31
