// SPDX-License-Identifier: Apache-2.0
#include "hankel31/types.hpp"

namespace h31 {

void validate(const Order& order) {
  if (!(order.alpha >= 0.0 && order.alpha < 1.0))
    throw domain_error("order: alpha must lie in [0,1)");
}

void validate(const CuboidPoint& pt) {
  if (!(pt.p >= 0.0 && pt.p <= 2.0)) throw domain_error("cuboid point: p must lie in [0,2]");
  if (!(pt.x >= 0.0 && pt.x <= 1.0)) throw domain_error("cuboid point: x must lie in [0,1]");
  if (!(pt.y >= 0.0 && pt.y <= 1.0)) throw domain_error("cuboid point: y must lie in [0,1]");
}

void validate(const OptimizerConfig& cfg) {
  if (cfg.grid_steps.np < 2 || cfg.grid_steps.nx < 2 || cfg.grid_steps.ny < 2)
    throw domain_error("optimizer config: grid steps must each be >= 2");
  if (!(cfg.refine_tol >= 1e-14)) throw domain_error("optimizer config: refine_tol must be >= 1e-14");
  if (cfg.refine_max_iter < 1) throw domain_error("optimizer config: refine_max_iter must be >= 1");
  if (cfg.sample_count < 0) throw domain_error("optimizer config: sample_count must be >= 0");
}

const char* to_string(FaceId face) {
  switch (face) {
    case FaceId::P0: return "P0";
    case FaceId::P2: return "P2";
    case FaceId::X0: return "X0";
    case FaceId::X1: return "X1";
    case FaceId::Y0: return "Y0";
    case FaceId::Y1: return "Y1";
  }
  throw domain_error("invalid face id");
}

const char* to_string(EdgeId edge) {
  switch (edge) {
    case EdgeId::R1: return "R1";
    case EdgeId::R2: return "R2";
    case EdgeId::R3: return "R3";
    case EdgeId::R4: return "R4";
    case EdgeId::R5: return "R5";
    case EdgeId::CP2: return "CP2";
    case EdgeId::CP0X1: return "CP0X1";
  }
  throw domain_error("invalid edge id");
}

}  // namespace h31
