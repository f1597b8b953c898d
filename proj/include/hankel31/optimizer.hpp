// SPDX-License-Identifier: Apache-2.0
//
// Global maximization of Z over the cuboid (grid + multistart compass
// refinement) and the randomized admissible-function probe that attacks the
// bound from below. All reductions are deterministic and independent of the
// worker count.
#ifndef HANKEL31_OPTIMIZER_HPP
#define HANKEL31_OPTIMIZER_HPP

#include <vector>

#include "hankel31/types.hpp"

namespace h31 {

/// Maximum of Z over the regular grid (boundaries included). Ties break to
/// the lexicographically smallest argmax. threads = 0 picks a machine
/// default; any thread count yields the identical report.
MaxReport grid_max(const Order& order, const OptimizerConfig& cfg, int threads = 0);

/// Projected compass ascent from `start` with shrinking steps; the value
/// sequence is nondecreasing. Terminates when the step drops below
/// cfg.refine_tol or after cfg.refine_max_iter sweeps.
MaxReport refine_local(const Order& order, const CuboidPoint& start,
                       const OptimizerConfig& cfg);

/// grid_max followed by compass refinement from the top 8 grid points.
MaxReport global_max(const Order& order, const OptimizerConfig& cfg, int threads = 0);

struct ProbeResult {
  double value = 0.0;
  CaratheodoryParams witness{};
  long long witness_index = -1;  // -1 marks the injected extremal tuple
};

/// Max of |H_{3,1}| over cfg.sample_count seeded tuples plus the injected
/// extremal tuple (0,0,1,0). Deterministic for fixed (seed, sample_count).
ProbeResult probe_max(const Order& order, const OptimizerConfig& cfg, int threads = 0);

struct CriticalPoint {
  double p = 0.0;
  double x = 0.0;
  double y0 = 0.0;
  double grad_norm = 0.0;  // max-norm of the central-difference gradient of Z
};

/// Scans the (p,x) grid interior; wherever the stationary y0 lies in (0,1),
/// checks the finite-difference gradient of Z at (p,x,y0) and reports the
/// point if every component is below 1e-6. An empty report corroborates the
/// absence of interior critical points.
std::vector<CriticalPoint> interior_critical_scan(const Order& order,
                                                  const OptimizerConfig& cfg);

}  // namespace h31

#endif
