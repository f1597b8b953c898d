// SPDX-License-Identifier: Apache-2.0
#include "hankel31/surface.hpp"

#include <cmath>

#include "hankel31/caratheodory.hpp"

namespace h31 {

namespace {

// Shared alpha-polynomial coefficients of the Delta/z family.
struct AlphaCoeffs {
  double b2;   // (1-a)^2
  double c0;   // a(1-2a)^2(3-2a)
  double c2;   // 2-15a+18a^2
  double c3;   // 10-15a
  double c6;   // 3-19a+32a^2-12a^3
  double c7;   // 3+2a-16a^2
  double d0;   // 3-10a+8a^2
  double d1;   // 9(1-2a)
  double d2;   // 5-12a
  double a36;  // 36a
  double w36;  // 36(1-2a)
  double c9;   // 1-2a

  explicit AlphaCoeffs(double a) {
    const double b = 1.0 - a;
    b2 = b * b;
    c9 = 1.0 - 2.0 * a;
    c0 = a * c9 * c9 * (3.0 - 2.0 * a);
    c2 = 2.0 + a * (-15.0 + 18.0 * a);
    c3 = 10.0 - 15.0 * a;
    c6 = 3.0 + a * (-19.0 + a * (32.0 - 12.0 * a));
    c7 = 3.0 + a * (2.0 - 16.0 * a);
    d0 = 3.0 + a * (-10.0 + 8.0 * a);
    d1 = 9.0 * c9;
    d2 = 5.0 - 12.0 * a;
    a36 = 36.0 * a;
    w36 = 36.0 * c9;
  }
};

void check_p(double p, const char* who) {
  if (!(p >= 0.0 && p <= 2.0)) throw domain_error(std::string(who) + ": p must lie in [0,2]");
}

void check_px(double p, double x, const char* who) {
  check_p(p, who);
  if (!(x >= 0.0 && x <= 1.0)) throw domain_error(std::string(who) + ": x must lie in [0,1]");
}

void check_disk(complex z, const char* who, const char* name) {
  if (std::norm(z) > 1.0)
    throw domain_error(std::string(who) + ": |" + name + "| must be <= 1");
}

// s3 pieces, also used by P(alpha).
inline double a3_of(double a) { return 11.0 + a * (-33.0 + 9.0 * a); }
inline double b3_of(double a) { return 5.0 + a * (-13.0 + a * (5.0 + 3.0 * a)); }
inline double n_of(double a) { return 1.0 + a * (-4.0 + a * (6.0 + a * (-16.0 + 4.0 * a))); }
inline double mrad_of(double a) {
  return 133.0 +
         a * (-751.0 +
              a * (1497.0 + a * (-1630.0 + a * (1666.0 + a * (-708.0 + 144.0 * a)))));
}

}  // namespace

DeltaTerms delta_terms(const Order& order, double p, complex gamma) {
  validate(order);
  check_p(p, "delta_terms");
  check_disk(gamma, "delta_terms", "gamma");
  const AlphaCoeffs k(order.alpha);
  const double q = 4.0 - p * p;
  const double q2 = q * q;
  const double p2 = p * p, p4 = p2 * p2, p6 = p4 * p2;
  const complex g = gamma, g2 = g * g, g3 = g2 * g, g4 = g2 * g2;
  const double og2 = 1.0 - std::norm(g);

  DeltaTerms out;
  out.d1 = k.b2 * (k.c0 * p6 - k.c2 * p2 * g2 * q2 + p2 * g4 * q2 - k.c3 * p2 * g3 * q2 +
                   k.a36 * g3 * q2 + k.c6 * p4 * g * q + k.c7 * p4 * g2 * q -
                   k.d1 * p4 * g3 * q - k.w36 * p2 * g2 * q);
  out.d2 = 4.0 * og2 * q * k.b2 *
           (k.d0 * p * p2 + k.d1 * p * p2 * g + k.d2 * p * g * q - p * g2 * q);
  out.d3 = 4.0 * og2 * q * k.b2 *
           (-8.0 * q - std::norm(g) * q + k.d1 * p2 * std::conj(g));
  return out;
}

complex phi_term(const Order& order, double p, complex gamma, complex eta) {
  validate(order);
  check_p(p, "phi_term");
  check_disk(gamma, "phi_term", "gamma");
  check_disk(eta, "phi_term", "eta");
  const AlphaCoeffs k(order.alpha);
  const double q = 4.0 - p * p;
  return 36.0 * (1.0 - std::norm(gamma)) * q * (1.0 - std::norm(eta)) * k.b2 *
         (q * gamma - k.c9 * p * p);
}

complex hankel3_decomposed(const Order& order, const CaratheodoryParams& params) {
  validate(order);
  validate(params);
  const DeltaTerms d = delta_terms(order, params.p1, params.gamma);
  const complex phi = phi_term(order, params.p1, params.gamma, params.eta);
  return (d.d1 + d.d2 * params.eta + d.d3 * params.eta * params.eta + phi * params.rho) /
         1152.0;
}

ZTerms z_terms(const Order& order, double p, double x) {
  validate(order);
  check_px(p, x, "z_terms");
  const AlphaCoeffs k(order.alpha);
  const double q = 4.0 - p * p;
  const double q2 = q * q;
  const double p2 = p * p, p4 = p2 * p2, p6 = p4 * p2;
  const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  ZTerms z;
  z.z1 = k.b2 * (k.c0 * p6 + k.c2 * p2 * x2 * q2 + p2 * x4 * q2 + k.c3 * p2 * x3 * q2 +
                 k.a36 * x3 * q2 + k.c6 * p4 * x * q + k.c7 * p4 * x2 * q +
                 k.d1 * p4 * x3 * q + k.w36 * p2 * x2 * q);
  z.z2 = 4.0 * (1.0 - x2) * q * k.b2 *
         (k.d0 * p * p2 + k.d1 * p * p2 * x + k.d2 * p * x * q + p * x2 * q);
  z.z3 = 4.0 * (1.0 - x2) * q * k.b2 * (8.0 * q + x2 * q + k.d1 * p2 * x);
  z.z4 = 36.0 * (1.0 - x2) * q * k.b2 * (q * x + k.c9 * p2);
  return z;
}

double big_z(const Order& order, const CuboidPoint& pt) {
  validate(pt);
  const ZTerms z = z_terms(order, pt.p, pt.x);
  const double y2 = pt.y * pt.y;
  return (z.z1 + z.z2 * pt.y + z.z3 * y2 + z.z4 * (1.0 - y2)) / 1152.0;
}

ZEvaluator::ZEvaluator(const Order& order) {
  validate(order);
  const AlphaCoeffs k(order.alpha);
  b2_ = k.b2;
  c0_ = k.c0;
  c2_ = k.c2;
  c3_ = k.c3;
  c6_ = k.c6;
  c7_ = k.c7;
  d0_ = k.d0;
  d1_ = k.d1;
  d2_ = k.d2;
  a36_ = k.a36;
  c9_ = k.c9;
}

double ZEvaluator::operator()(double p, double x, double y) const {
  const double q = 4.0 - p * p;
  const double q2 = q * q;
  const double p2 = p * p, p4 = p2 * p2, p6 = p4 * p2;
  const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  const double z1 = c0_ * p6 + c2_ * p2 * x2 * q2 + p2 * x4 * q2 + c3_ * p2 * x3 * q2 +
                    a36_ * x3 * q2 + c6_ * p4 * x * q + c7_ * p4 * x2 * q +
                    d1_ * p4 * x3 * q + 36.0 * c9_ * p2 * x2 * q;
  const double z2 =
      4.0 * (1.0 - x2) * q * (d0_ * p * p2 + d1_ * p * p2 * x + d2_ * p * x * q + p * x2 * q);
  const double z3 = 4.0 * (1.0 - x2) * q * (8.0 * q + x2 * q + d1_ * p2 * x);
  const double z4 = 36.0 * (1.0 - x2) * q * (q * x + c9_ * p2);
  const double y2 = y * y;
  return b2_ * (z1 + z2 * y + z3 * y2 + z4 * (1.0 - y2)) / 1152.0;
}

double s3_value(const Order& order, double p) {
  validate(order);
  if (!(p >= 0.0 && p <= 2.0)) throw domain_error("s3_value: p must lie in [0,2]");
  const double a = order.alpha;
  const double b2 = (1.0 - a) * (1.0 - a);
  const double p2 = p * p, p4 = p2 * p2, p6 = p4 * p2;
  return b2 / 576.0 *
         (288.0 * a + 16.0 * a3_of(a) * p2 - 8.0 * b3_of(a) * p4 - n_of(a) * p6);
}

double face_value(FaceId face, const Order& order, double u, double v) {
  validate(order);
  const double a = order.alpha;
  const double b2 = (1.0 - a) * (1.0 - a);
  const auto check01 = [](double t, const char* name) {
    if (!(t >= 0.0 && t <= 1.0))
      throw domain_error(std::string("face_value: ") + name + " must lie in [0,1]");
  };
  const auto check02 = [](double t, const char* name) {
    if (!(t >= 0.0 && t <= 2.0))
      throw domain_error(std::string("face_value: ") + name + " must lie in [0,2]");
  };

  switch (face) {
    case FaceId::P0: {
      const double x = u, y = v;
      check01(x, "x");
      check01(y, "y");
      const double x2 = x * x;
      return b2 *
             ((1.0 - x2) * ((8.0 + x2) * y * y + 9.0 * x * (1.0 - y * y)) +
              9.0 * x2 * x * a) /
             18.0;
    }
    case FaceId::P2: {
      check01(u, "x");
      check01(v, "y");
      const double c9 = 1.0 - 2.0 * a;
      return a * b2 * c9 * c9 * (3.0 - 2.0 * a) / 18.0;
    }
    case FaceId::X0: {
      const double p = u, y = v;
      check02(p, "p");
      check01(y, "y");
      const double q = 4.0 - p * p;
      const double c9 = 1.0 - 2.0 * a;
      const double c0 = a * (3.0 - 2.0 * a) * c9 * c9;
      const double p2 = p * p, p3 = p2 * p, p6 = p3 * p3;
      return b2 / 1152.0 *
             (c0 * p6 + 36.0 * c9 * p2 * q * (1.0 - y * y) + 32.0 * q * q * y * y +
              4.0 * (3.0 + a * (-10.0 + 8.0 * a)) * p3 * y * q);
    }
    case FaceId::X1: {
      check02(u, "p");
      check01(v, "y");
      return s3_value(order, u);
    }
    case FaceId::Y0: {
      const double p = u, x = v;
      check02(p, "p");
      check01(x, "x");
      const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
      const double p2 = p * p, p4 = p2 * p2, p6 = p4 * p2;
      const double c0 = a * (1.0 - 2.0 * a) * (1.0 - 2.0 * a) * (3.0 - 2.0 * a);
      const double t2 =
          9.0 - 18.0 * x + x4 + x3 * (28.0 - 33.0 * a) - 18.0 * a +
          x2 * (2.0 + a * (-15.0 + 18.0 * a));
      const double t4 = 9.0 + 2.0 * x4 + x3 * (20.0 - 21.0 * a) - 18.0 * a +
                        x2 * (1.0 + a * (-32.0 + 52.0 * a)) +
                        x * (-12.0 + a * (19.0 + a * (-32.0 + 12.0 * a)));
      const double t6 = x4 + c0 + x3 * (1.0 + 3.0 * a) -
                        x2 * (1.0 + a * (17.0 - 34.0 * a)) +
                        x * (-3.0 + a * (19.0 + a * (-32.0 + 12.0 * a)));
      return b2 / 1152.0 *
             (576.0 * (x - x3 * (1.0 - a)) + 16.0 * p2 * t2 - 4.0 * p4 * t4 + p6 * t6);
    }
    case FaceId::Y1: {
      const double p = u, x = v;
      check02(p, "p");
      check01(x, "x");
      const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
      const double ox2 = 1.0 - x2;
      // Coefficients of p^0..p^6 from expanding z1+z2+z3, kept as an explicit
      // polynomial so the face/big_z agreement test exercises an independent
      // evaluation path.
      const double t0 = 64.0 * (8.0 - 7.0 * x2 + 9.0 * a * x3 - x4);
      const double t1 = 64.0 * x * ox2 * (5.0 + x - 12.0 * a);
      const double t2 = 16.0 * (-16.0 + 9.0 * x + 25.0 * x2 + x3 + 3.0 * x4 -
                                18.0 * a * x - 33.0 * a * x2 - 15.0 * a * x3 +
                                18.0 * a * a * x2);
      const double t3 =
          16.0 * ox2 * (3.0 - x - 2.0 * x2 - 10.0 * a + 6.0 * a * x + 8.0 * a * a);
      const double t4 = -4.0 * (-8.0 + 6.0 * x + 17.0 * x2 + 2.0 * x3 + 3.0 * x4 +
                                a * x - 50.0 * a * x2 - 3.0 * a * x3 -
                                32.0 * a * a * x + 52.0 * a * a * x2 +
                                12.0 * a * a * a * x);
      const double t5 =
          4.0 * ox2 * (x2 - 4.0 * x - 3.0 + 6.0 * a * x + 10.0 * a - 8.0 * a * a);
      const double c0 = a * (1.0 - 2.0 * a) * (1.0 - 2.0 * a) * (3.0 - 2.0 * a);
      const double c6 = 3.0 + a * (-19.0 + a * (32.0 - 12.0 * a));
      const double t6 = c0 - c6 * x - (1.0 + a * (17.0 - 34.0 * a)) * x2 +
                        (1.0 + 3.0 * a) * x3 + x4;
      return b2 / 1152.0 *
             (t0 + p * (t1 + p * (t2 + p * (t3 + p * (t4 + p * (t5 + p * t6))))));
    }
  }
  throw domain_error("face_value: invalid face id");
}

double edge_value(EdgeId edge, const Order& order, double t) {
  validate(order);
  const double a = order.alpha;
  const double b2 = (1.0 - a) * (1.0 - a);
  const double c9 = 1.0 - 2.0 * a;
  switch (edge) {
    case EdgeId::R1: {
      const double p = t;
      if (!(p >= 0.0 && p <= 2.0)) throw domain_error("edge_value: p must lie in [0,2]");
      const double p2 = p * p, p4 = p2 * p2;
      return p2 * b2 * c9 * (144.0 - 36.0 * p2 + p4 * a * (3.0 + a * (-8.0 + 4.0 * a))) /
             1152.0;
    }
    case EdgeId::R2: {
      const double p = t;
      if (!(p >= 0.0 && p <= 2.0)) throw domain_error("edge_value: p must lie in [0,2]");
      const double q = 4.0 - p * p;
      const double p3 = p * p * p, p6 = p3 * p3;
      const double c0 = a * c9 * c9 * (3.0 - 2.0 * a);
      return b2 *
             (32.0 * q * q + c0 * p6 + 4.0 * p3 * q * (3.0 + a * (-10.0 + 8.0 * a))) /
             1152.0;
    }
    case EdgeId::R3: {
      if (!(t >= 0.0 && t <= 2.0)) throw domain_error("edge_value: p must lie in [0,2]");
      return s3_value(order, t);
    }
    case EdgeId::R4: {
      const double x = t;
      if (!(x >= 0.0 && x <= 1.0)) throw domain_error("edge_value: x must lie in [0,1]");
      const double x2 = x * x;
      return b2 * (8.0 - 7.0 * x2 - x2 * x2 + 9.0 * x2 * x * a) / 18.0;
    }
    case EdgeId::R5: {
      const double x = t;
      if (!(x >= 0.0 && x <= 1.0)) throw domain_error("edge_value: x must lie in [0,1]");
      return x * (1.0 - (1.0 - a) * x * x) * b2 / 2.0;
    }
    case EdgeId::CP2: {
      if (!(t >= 0.0 && t <= 1.0)) throw domain_error("edge_value: t must lie in [0,1]");
      return a * c9 * c9 * b2 * (3.0 - 2.0 * a) / 18.0;
    }
    case EdgeId::CP0X1: {
      if (!(t >= 0.0 && t <= 1.0)) throw domain_error("edge_value: y must lie in [0,1]");
      return a * b2 / 2.0;
    }
  }
  throw domain_error("edge_value: invalid edge id");
}

std::optional<double> interior_y_crit(const Order& order, double p, double x) {
  validate(order);
  const double a = order.alpha;
  const double num = 4.0 * x * p * (5.0 + x - 12.0 * a) +
                     p * p * p * (3.0 - x * x - 10.0 * a + 8.0 * a * a + x * (4.0 - 6.0 * a));
  const double den =
      2.0 * (1.0 - x) * (-4.0 * (8.0 - x) + p * p * (17.0 - x - 18.0 * a));
  if (den == 0.0) return std::nullopt;
  const double y0 = num / den;
  if (!(y0 > 0.0 && y0 < 1.0)) return std::nullopt;
  return y0;
}

bool h1_holds(const Order& order, double p, double x) {
  validate(order);
  const double a = order.alpha;
  const double lhs = 2.0 * p * p * (1.0 - x) * (17.0 - x - 18.0 * a);
  const double rhs =
      -p * p * p * (-3.0 + x * x + 10.0 * a - 8.0 * a * a - x * (4.0 - 6.0 * a)) +
      4.0 * p * x * (5.0 + x - 12.0 * a) + 8.0 * (1.0 - x) * (8.0 - x);
  return lhs > rhs;
}

std::optional<double> face_x0_y_crit(const Order& order, double p) {
  validate(order);
  if (!(p > 0.0 && p < 2.0)) throw domain_error("face_x0_y_crit: p must lie in (0,2)");
  const double a = order.alpha;
  const double den = 2.0 * (17.0 * p * p - 32.0 - 18.0 * p * p * a);
  if (den == 0.0) return std::nullopt;
  const double y0 = p * p * p * (3.0 - 10.0 * a + 8.0 * a * a) / den;
  if (!(y0 > 0.0 && y0 < 1.0)) return std::nullopt;
  return y0;
}

Lmn lmn(const Order& order) {
  validate(order);
  const double a = order.alpha;
  Lmn out;
  out.M = std::sqrt(mrad_of(a));
  out.N = n_of(a);
  if (out.N == 0.0) return out;
  const double rad = (-10.0 + 26.0 * a - 10.0 * a * a - 6.0 * a * a * a + out.M) /
                     (3.0 * out.N);
  if (!(rad >= 0.0)) return out;  // negative radicand or NaN
  out.L = std::sqrt(rad);
  return out;
}

double p_of_alpha(const Order& order) {
  const Lmn l = lmn(order);
  if (!l.L || !(2.0 * *l.L > 0.0 && 2.0 * *l.L < 2.0))
    throw domain_error("p_of_alpha: alpha outside [0,alpha0) u (alpha0,alpha1)");
  const double a = order.alpha;
  const double b2 = (1.0 - a) * (1.0 - a);
  const double N = l.N;
  const double U = 10.0 - 26.0 * a + 10.0 * a * a + 6.0 * a * a * a - l.M;
  const double T = -U;
  return b2 / 486.0 *
         (243.0 * a - 18.0 * a3_of(a) * U / N - 12.0 * b3_of(a) * T * T / (N * N) -
          2.0 * T * T * T / (N * N));
}

double eq40_value(const Order& order, double p) {
  validate(order);
  const double a = order.alpha;
  const double c9 = 1.0 - 2.0 * a;
  const double k0 = 49152.0 * c9;
  const double k2 = -3072.0 * (25.0 + a * (-68.0 + 36.0 * a));
  const double k4 =
      16.0 * (2427.0 + a * (-7890.0 + a * (6020.0 + a * (616.0 - 1024.0 * a))));
  const double k6 = -128.0 * (48.0 + a * (-153.0 + a * (20.0 + a * (340.0 + a * (-352.0 +
                                                                                 96.0 * a)))));
  const double k8 =
      -c9 * c9 * (153.0 + a * (-1437.0 + a * (3118.0 + a * (-2484.0 + 648.0 * a))));
  const double t = p * p;
  return k0 + t * (k2 + t * (k4 + t * (k6 + t * k8)));
}

double eq69_value(const Order& order, double p, double y) {
  validate(order);
  const double a = order.alpha;
  const double y2 = y * y;
  const double p2 = p * p, p3 = p2 * p, p5 = p3 * p2;
  return 16.0 * p * (9.0 - 18.0 * a - y2 * (25.0 - 18.0 * a)) -
         2.0 * p2 * y * (3.0 - 10.0 * a + 8.0 * a * a) * (5.0 * p2 - 12.0) +
         3.0 * a * (1.0 - 2.0 * a) * (1.0 - 2.0 * a) * (3.0 - 2.0 * a) * p5 -
         8.0 * p3 * (9.0 - 18.0 * a - y2 * (17.0 - 18.0 * a));
}

double r5_argmax(const Order& order) {
  validate(order);
  return 1.0 / std::sqrt(3.0 * (1.0 - order.alpha));
}

double r_of_alpha(const Order& order) {
  validate(order);
  const double a = order.alpha;
  return std::sqrt(3.0 * (3.0 + a * (-3.0 + a * (8.0 - 4.0 * a))));
}

}  // namespace h31
