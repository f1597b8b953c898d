// SPDX-License-Identifier: Apache-2.0
#include "hankel31/roots.hpp"

#include <cmath>

#include "hankel31/surface.hpp"

namespace h31 {

namespace {

constexpr int kMaxIter = 200;

double eval_checked(const std::function<double(double)>& f, double x,
                    const std::string& target) {
  const double v = f(x);
  if (!std::isfinite(v))
    throw bracket_error("root_bisect(" + target + "): non-finite evaluation");
  return v;
}

// First sign change of f on [lo, hi] scanned with `step`; exact zeros at grid
// points are accepted as roots with a one-step certificate bracket.
RootResult smallest_positive_root(const std::function<double(double)>& f, double lo,
                                  double hi, double step, double tol,
                                  const std::string& target) {
  double a = lo;
  double fa = eval_checked(f, a, target);
  for (double b = lo + step; b <= hi + 0.5 * step; b += step) {
    const double fb = eval_checked(f, b, target);
    if (fb == 0.0) {
      RootResult out;
      out.target = target;
      out.lo = b - step;
      out.hi = b + step;
      out.root = b;
      out.residual = 0.0;
      out.iterations = 0;
      return out;
    }
    if (fa * fb < 0.0) return root_bisect(f, a, b, tol, target);
    a = b;
    fa = fb;
  }
  throw bracket_error("root_bisect(" + target + "): no sign change located");
}

}  // namespace

RootResult root_bisect(const std::function<double(double)>& f, double lo, double hi,
                       double tol, const std::string& target) {
  if (!(tol > 0.0)) throw domain_error("root_bisect: tol must be > 0");
  if (!(lo < hi)) throw domain_error("root_bisect: need lo < hi");
  double fa = eval_checked(f, lo, target);
  double fb = eval_checked(f, hi, target);
  if (fa == 0.0 || fb == 0.0 || fa * fb > 0.0)
    throw bracket_error("root_bisect(" + target + "): f(lo)*f(hi) < 0 required");

  int iter = 0;
  while (hi - lo > tol && iter < kMaxIter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double fm = eval_checked(f, mid, target);
    ++iter;
    if (fm == 0.0) {
      lo = std::nextafter(mid, lo);
      hi = std::nextafter(mid, hi);
      fa = eval_checked(f, lo, target);
      fb = eval_checked(f, hi, target);
      break;
    }
    if (fa * fm < 0.0) {
      hi = mid;
      fb = fm;
    } else {
      lo = mid;
      fa = fm;
    }
  }
  RootResult out;
  out.target = target;
  out.lo = lo;
  out.hi = hi;
  out.root = 0.5 * (lo + hi);
  out.residual = std::abs(eval_checked(f, out.root, target));
  out.iterations = iter;
  return out;
}

RootResult alpha0() {
  const auto n = [](double a) {
    return 1.0 + a * (-4.0 + a * (6.0 + a * (-16.0 + 4.0 * a)));
  };
  return smallest_positive_root(n, 0.0, 1.0, 0.01, 1e-13, "alpha0");
}

RootResult alpha1() {
  // Zero of -10+26a-10a^2-6a^3+M(a): below it (and above alpha0) the
  // radicand of L is positive and 2L lies in (0,2); above it L is absent.
  const auto t = [](double a) {
    const Lmn l = lmn(Order{a});
    return -10.0 + a * (26.0 + a * (-10.0 - 6.0 * a)) + l.M;
  };
  return root_bisect(t, 0.3, 0.45, 1e-13, "alpha1");
}

RootResult alpha2() {
  const auto e = [](double a) {
    return 153.0 + a * (-1437.0 + a * (3118.0 + a * (-2484.0 + 648.0 * a)));
  };
  return smallest_positive_root(e, 0.0, 1.0, 0.01, 1e-13, "alpha2");
}

RootResult beta0() {
  const auto f = [](double a) { return -3.0 + 10.0 * a - 8.0 * a * a; };
  return smallest_positive_root(f, 0.0, 1.0, 0.01, 1e-13, "beta0");
}

std::optional<RootResult> eq40_p_root(const Order& order) {
  validate(order);
  const auto f = [&](double p) { return eq40_value(order, p); };
  constexpr int kScan = 4000;
  double a = 1e-9;
  double fa = f(a);
  for (int i = 1; i <= kScan; ++i) {
    const double b = 2.0 * i / kScan;
    const double fb = f(b);
    if (fb == 0.0) {
      RootResult out;
      out.target = "eq40_p";
      out.lo = a;
      out.hi = std::min(b + 2.0 / kScan, 2.0);
      out.root = b;
      out.residual = 0.0;
      return out;
    }
    if (fa * fb < 0.0) return root_bisect(f, a, b, 1e-13, "eq40_p");
    a = b;
    fa = fb;
  }
  return std::nullopt;
}

}  // namespace h31
