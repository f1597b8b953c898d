// SPDX-License-Identifier: Apache-2.0
//
// The bound surface: complex decomposition Delta1..Delta3, Phi of H_{3,1},
// the real majorant Z(p,x,y) over the cuboid [0,2]x[0,1]x[0,1] with its
// z1..z4 pieces, the six face and seven edge restrictions, the critical-point
// formulas, and the closed forms L, M, N, P(alpha), R(alpha), delta3.
#ifndef HANKEL31_SURFACE_HPP
#define HANKEL31_SURFACE_HPP

#include <array>
#include <optional>

#include "hankel31/types.hpp"

namespace h31 {

struct DeltaTerms {
  complex d1, d2, d3;
};

/// The three eta-graded complex coefficients of the H_{3,1} decomposition.
DeltaTerms delta_terms(const Order& order, double p, complex gamma);

/// Coefficient of rho in the decomposition:
/// 36 (1-|gamma|^2)(4-p^2)(1-|eta|^2)(1-a)^2 ((4-p^2) gamma - (1-2a) p^2).
complex phi_term(const Order& order, double p, complex gamma, complex eta);

/// (Delta1 + Delta2 eta + Delta3 eta^2 + Phi rho)/1152. Must agree with
/// hankel3(schlicht_coeffs(order, coeffs_from_params(params))) -- the central
/// cross-check identity of the whole artifact.
complex hankel3_decomposed(const Order& order, const CaratheodoryParams& params);

struct ZTerms {
  double z1, z2, z3, z4;
};

/// The four nonnegative-coefficient majorant polynomials of Z.
ZTerms z_terms(const Order& order, double p, double x);

/// Z(p,x,y) = (z1 + z2 y + z3 y^2 + z4 (1-y^2))/1152.
double big_z(const Order& order, const CuboidPoint& pt);

/// Z with the alpha-dependent coefficients hoisted out; used by the grid
/// optimizer's hot loop. operator() performs no domain checks.
class ZEvaluator {
 public:
  explicit ZEvaluator(const Order& order);
  double operator()(double p, double x, double y) const;

 private:
  double b2_, c0_, c2_, c3_, c6_, c7_, d0_, d1_, d2_, a36_, c9_;
};

/// Restriction of Z to a face. Parameters (u,v) are the two free coordinates:
/// P0/P2 take (x,y); X0/X1 take (p,y) (X1 ignores y); Y0/Y1 take (p,x).
double face_value(FaceId face, const Order& order, double u, double v);

/// Restriction of Z to an edge. t is p for R1/R2/R3, x for R4/R5,
/// y for CP0X1; CP2 is constant (t in [0,1], unused).
double edge_value(EdgeId edge, const Order& order, double t);

/// Interior stationarity in y: solves dZ/dy = 0 at (p,x). Returns the y0 of
/// the closed-form quotient when the denominator is nonzero and y0 lies in
/// (0,1); absent otherwise.
std::optional<double> interior_y_crit(const Order& order, double p, double x);

/// The interior critical-point existence inequality at (p,x):
/// 2p^2(1-x)(17-x-18a) > -p^3(-3+x^2+10a-8a^2-x(4-6a))
///                        + 4px(5+x-12a) + 8(1-x)(8-x).
bool h1_holds(const Order& order, double p, double x);

/// Stationary y on the x=0 face: y0 = p^3(3-10a+8a^2)/(2(17p^2-32-18p^2 a)),
/// present only when it lies in (0,1).
std::optional<double> face_x0_y_crit(const Order& order, double p);

struct Lmn {
  std::optional<double> L;  // absent when N == 0 or the radicand is negative
  double M = 0.0;
  double N = 0.0;
};

/// L = sqrt((-10+26a-10a^2-6a^3+M)/(3N)),
/// M = sqrt(133-751a+1497a^2-1630a^3+1666a^4-708a^5+144a^6),
/// N = 1-4a+6a^2-16a^3+4a^4.
Lmn lmn(const Order& order);

/// Closed-form maximum P(alpha) of the x=1 face restriction, attained at
/// p0 = 2L(alpha). Domain error when L is absent or 2L is outside (0,2)
/// (alpha at the N-pole or at/beyond the realness boundary of L).
double p_of_alpha(const Order& order);

/// Value of the x=1 face restriction s3(p); free of y.
double s3_value(const Order& order, double p);

/// The x=0 face stationarity polynomial in p after eliminating y
/// (degree 8, even powers):
/// 49152(1-2a) - 3072 p^2 (25-68a+36a^2)
///   + 16 p^4 (2427-7890a+6020a^2+616a^3-1024a^4)
///   - 128 p^6 (48-153a+20a^2+340a^3-352a^4+96a^5)
///   - p^8 (1-2a)^2 (153-1437a+3118a^2-2484a^3+648a^4).
double eq40_value(const Order& order, double p);

/// The x=0 face dS/dp stationarity expression at (p,y):
/// 16p(9-18a-y^2(25-18a)) - 2p^2 y (3-10a+8a^2)(5p^2-12)
///   + 3a(1-2a)^2(3-2a)p^5 - 8p^3(9-18a-y^2(17-18a)).
/// Identity used by the tests: eq69(p, y0(p)) * (18a p^2 - 17 p^2 + 32)^2
/// == 3 p * eq40(p).
double eq69_value(const Order& order, double p, double y);

/// x-location delta3 = 1/sqrt(3(1-a)) of the R5 edge maximum.
double r5_argmax(const Order& order);

/// R(alpha) = sqrt(3(3-3a+8a^2-4a^3)) entering the R1 edge maximum.
double r_of_alpha(const Order& order);

constexpr std::array<FaceId, 6> all_faces{FaceId::P0, FaceId::P2, FaceId::X0,
                                          FaceId::X1, FaceId::Y0, FaceId::Y1};
constexpr std::array<EdgeId, 7> all_edges{EdgeId::R1,  EdgeId::R2, EdgeId::R3, EdgeId::R4,
                                          EdgeId::R5,  EdgeId::CP2, EdgeId::CP0X1};

}  // namespace h31

#endif
