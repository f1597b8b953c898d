// SPDX-License-Identifier: Apache-2.0
#ifndef HANKEL31_TYPES_HPP
#define HANKEL31_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace h31 {

using complex = std::complex<double>;

/// Thrown when an argument violates a documented precondition.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the bisection driver when the bracket carries no sign change
/// or the function evaluates to a non-finite value.
struct bracket_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Order parameter of the starlike class S*(alpha), alpha in [0,1).
struct Order {
  double alpha = 0.0;
};

void validate(const Order& order);

/// Free parameters (p1, gamma, eta, rho) of the coefficient parametrization:
/// p1 in [0,2] real, the others in the closed unit disk.
struct CaratheodoryParams {
  double p1 = 0.0;
  complex gamma{0.0, 0.0};
  complex eta{0.0, 0.0};
  complex rho{0.0, 0.0};
};

void validate(const CaratheodoryParams& params);

/// First four Taylor coefficients of a positive-real-part function;
/// |p_k| <= 2 for all k.
struct CaratheodoryCoeffs {
  double p1 = 0.0;
  complex p2{0.0, 0.0};
  complex p3{0.0, 0.0};
  complex p4{0.0, 0.0};
};

void validate(const CaratheodoryCoeffs& coeffs);

/// Taylor coefficients a2..a5 of a normalized schlicht function.
struct SchlichtCoeffs {
  complex a2{0.0, 0.0};
  complex a3{0.0, 0.0};
  complex a4{0.0, 0.0};
  complex a5{0.0, 0.0};
};

/// Point of the maximization cuboid [0,2] x [0,1] x [0,1].
struct CuboidPoint {
  double p = 0.0;
  double x = 0.0;
  double y = 0.0;
};

void validate(const CuboidPoint& pt);

/// The six faces of the cuboid, named by the frozen coordinate.
enum class FaceId { P0, P2, X0, X1, Y0, Y1 };

/// Edge restrictions: R1 (x=0,y=0), R2 (x=0,y=1), R3 (x=1, both y),
/// R4 (p=0,y=1), R5 (p=0,y=0), CP2 (all p=2 edges, constant),
/// CP0X1 (p=0,x=1, constant in y).
enum class EdgeId { R1, R2, R3, R4, R5, CP2, CP0X1 };

const char* to_string(FaceId face);
const char* to_string(EdgeId edge);

/// A bracketed, bisection-refined real root with its certificate.
struct RootResult {
  std::string target;
  double lo = 0.0;       // final bracket, f(lo)*f(hi) <= 0
  double hi = 0.0;
  double root = 0.0;     // midpoint of the final bracket
  double residual = 0.0; // |f(root)|
  int iterations = 0;
};

struct GridSteps {
  int np = 201;
  int nx = 101;
  int ny = 101;
};

struct OptimizerConfig {
  GridSteps grid_steps{};
  double refine_tol = 1e-10;
  int refine_max_iter = 200;
  std::uint64_t seed = 0;
  long long sample_count = 100000;
};

void validate(const OptimizerConfig& cfg);

enum class MaxSource { grid, refined, corner };

struct MaxReport {
  double value = 0.0;
  CuboidPoint argmax{};
  MaxSource source = MaxSource::grid;
  long long evaluations = 0;
};

/// Sharp closed-form bound 4(1-alpha)^2/9.
inline double sharp_bound(const Order& order) {
  const double b = 1.0 - order.alpha;
  return 4.0 * b * b / 9.0;
}

}  // namespace h31

#endif
