// SPDX-License-Identifier: Apache-2.0
#include "hankel31/scan.hpp"

#include <algorithm>
#include <cmath>

#include "hankel31/caratheodory.hpp"
#include "hankel31/functionals.hpp"
#include "hankel31/optimizer.hpp"
#include "hankel31/roots.hpp"
#include "hankel31/surface.hpp"

namespace h31 {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Rect {
  double ulo, uhi, vlo, vhi;
  int nu, nv;
};

template <typename F>
double max2d(const F& f, const Rect& r, double tol, int max_iter) {
  double best = -1e300, bu = r.ulo, bv = r.vlo;
  for (int i = 0; i < r.nu; ++i) {
    const double u = r.ulo + (r.uhi - r.ulo) * i / (r.nu - 1);
    for (int j = 0; j < r.nv; ++j) {
      const double v = r.vlo + (r.vhi - r.vlo) * j / (r.nv - 1);
      const double val = f(u, v);
      if (val > best) {
        best = val;
        bu = u;
        bv = v;
      }
    }
  }
  double hu = (r.uhi - r.ulo) / (r.nu - 1);
  double hv = (r.vhi - r.vlo) / (r.nv - 1);
  const auto clamp = [](double t, double lo, double hi) {
    return std::min(std::max(t, lo), hi);
  };
  for (int iter = 0; iter < max_iter && (hu >= tol || hv >= tol); ++iter) {
    bool improved = false;
    const double cu[4] = {bu + hu, bu - hu, bu, bu};
    const double cv[4] = {bv, bv, bv + hv, bv - hv};
    for (int c = 0; c < 4; ++c) {
      const double u = clamp(cu[c], r.ulo, r.uhi);
      const double v = clamp(cv[c], r.vlo, r.vhi);
      if (u == bu && v == bv) continue;
      const double val = f(u, v);
      if (val > best) {
        best = val;
        bu = u;
        bv = v;
        improved = true;
        break;
      }
    }
    if (!improved) {
      hu *= 0.5;
      hv *= 0.5;
    }
  }
  return best;
}

template <typename F>
double max1d(const F& f, double lo, double hi, int n, double tol, int max_iter) {
  double best = -1e300, bt = lo;
  for (int i = 0; i < n; ++i) {
    const double t = lo + (hi - lo) * i / (n - 1);
    const double val = f(t);
    if (val > best) {
      best = val;
      bt = t;
    }
  }
  double h = (hi - lo) / (n - 1);
  for (int iter = 0; iter < max_iter && h >= tol; ++iter) {
    bool improved = false;
    for (double sign : {+1.0, -1.0}) {
      const double t = std::min(std::max(bt + sign * h, lo), hi);
      if (t == bt) continue;
      const double val = f(t);
      if (val > best) {
        best = val;
        bt = t;
        improved = true;
        break;
      }
    }
    if (!improved) h *= 0.5;
  }
  return best;
}

}  // namespace

const char* to_string(RowStatus status) {
  switch (status) {
    case RowStatus::verified: return "verified";
    case RowStatus::observation: return "observation";
    case RowStatus::excluded_window: return "excluded_window";
  }
  return "?";
}

double face_max(FaceId face, const Order& order, const OptimizerConfig& cfg) {
  validate(order);
  validate(cfg);
  const auto f = [&](double u, double v) { return face_value(face, order, u, v); };
  Rect r{};
  switch (face) {
    case FaceId::P0:
    case FaceId::P2:
      r = Rect{0.0, 1.0, 0.0, 1.0, cfg.grid_steps.nx, cfg.grid_steps.ny};
      break;
    case FaceId::X0:
    case FaceId::X1:
      r = Rect{0.0, 2.0, 0.0, 1.0, cfg.grid_steps.np, cfg.grid_steps.ny};
      break;
    case FaceId::Y0:
    case FaceId::Y1:
      r = Rect{0.0, 2.0, 0.0, 1.0, cfg.grid_steps.np, cfg.grid_steps.nx};
      break;
  }
  return max2d(f, r, cfg.refine_tol, cfg.refine_max_iter);
}

double edge_max(EdgeId edge, const Order& order, const OptimizerConfig& cfg) {
  validate(order);
  validate(cfg);
  const auto f = [&](double t) { return edge_value(edge, order, t); };
  switch (edge) {
    case EdgeId::R1:
    case EdgeId::R2:
    case EdgeId::R3:
      return max1d(f, 0.0, 2.0, cfg.grid_steps.np, cfg.refine_tol, cfg.refine_max_iter);
    case EdgeId::R4:
    case EdgeId::R5:
      return max1d(f, 0.0, 1.0, cfg.grid_steps.nx, cfg.refine_tol, cfg.refine_max_iter);
    case EdgeId::CP2:
      return edge_value(EdgeId::CP2, order, 0.0);
    case EdgeId::CP0X1:
      return edge_value(EdgeId::CP0X1, order, 0.0);
  }
  throw domain_error("edge_max: invalid edge id");
}

BoundScanRow scan_row(const Order& order, const ScanOptions& opts, double alpha0_root,
                      double alpha1_root) {
  validate(order);
  BoundScanRow row;
  row.alpha = order.alpha;
  row.bound_closed_form = sharp_bound(order);

  const MaxReport g = global_max(order, opts.cfg, opts.threads);
  row.grid_max = g.value;
  row.argmax = g.argmax;
  row.probe_max = probe_max(order, opts.cfg, opts.threads).value;

  for (std::size_t i = 0; i < all_faces.size(); ++i)
    row.face_maxima[i] = face_max(all_faces[i], order, opts.cfg);
  for (std::size_t i = 0; i < all_edges.size(); ++i)
    row.edge_maxima[i] = edge_max(all_edges[i], order, opts.cfg);

  try {
    row.p_alpha = p_of_alpha(order);
  } catch (const domain_error&) {
    row.p_alpha.reset();
  }

  double h2 = 0.0;
  for (long long i = 0; i < opts.cfg.sample_count; ++i) {
    const auto params = sample_param_at(opts.cfg.seed, static_cast<std::uint64_t>(i));
    h2 = std::max(h2, std::abs(hankel2(schlicht_coeffs(order, coeffs_from_params(params)))));
  }
  row.hankel2_max = h2;

  if (std::abs(order.alpha - alpha0_root) <= opts.alpha0_window)
    row.status = RowStatus::excluded_window;
  else if (order.alpha < alpha1_root && row_checks_pass(row))
    row.status = RowStatus::verified;
  else
    row.status = RowStatus::observation;
  return row;
}

bool row_checks_pass(const BoundScanRow& row) {
  return std::abs(row.grid_max - row.bound_closed_form) <= 1e-8 &&
         row.probe_max <= row.grid_max + 1e-10;
}

std::vector<double> acceptance_alpha_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 9; ++i) grid.push_back(0.04 * i);
  return grid;
}

double majorant_valid_alpha_limit() {
  const auto c6 = [](double a) { return 3.0 + a * (-19.0 + a * (32.0 - 12.0 * a)); };
  return root_bisect(c6, 0.2, 0.3, 1e-13, "c6_root").root;
}

CrosscheckReport crosscheck(long long samples, std::uint64_t seed) {
  if (samples < 1) throw domain_error("crosscheck: samples must be >= 1");
  CrosscheckReport rep;
  rep.samples = samples;
  rep.seed = seed;

  const double maj_limit = majorant_valid_alpha_limit();
  for (const double alpha : acceptance_alpha_grid()) {
    const Order order{alpha};
    const double bound = sharp_bound(order);
    const bool assert_majorant = alpha < maj_limit;
    for (long long i = -1; i < samples; ++i) {
      const CaratheodoryParams params =
          i < 0 ? extremal_params()
                : sample_param_at(seed, static_cast<std::uint64_t>(i));
      const SchlichtCoeffs c = schlicht_coeffs(order, coeffs_from_params(params));
      const complex h_dir = hankel3(c);
      const complex h_dec = hankel3_decomposed(order, params);
      const double scale = std::max(std::abs(h_dir), bound);
      rep.worst_decomposition_rel =
          std::max(rep.worst_decomposition_rel, std::abs(h_dec - h_dir) / scale);

      const double theta =
          i < 0 ? 1.0 : kTwoPi * detail::u01(seed, static_cast<std::uint64_t>(i), 7);
      const double h_rot = std::abs(hankel3(rotate_coeffs(c, theta)));
      rep.worst_rotation_rel = std::max(
          rep.worst_rotation_rel, std::abs(h_rot - std::abs(h_dir)) / scale);

      rep.worst_bound_excess =
          std::max(rep.worst_bound_excess, std::abs(h_dir) - bound);

      const DeltaTerms d = delta_terms(order, params.p1, params.gamma);
      const complex phi = phi_term(order, params.p1, params.gamma, params.eta);
      const double x = std::abs(params.gamma);
      const double y = std::abs(params.eta);
      const ZTerms z = z_terms(order, params.p1, x);
      const double maj = std::max({std::abs(d.d1) - z.z1, std::abs(d.d2) - z.z2,
                                   std::abs(d.d3) - z.z3,
                                   std::abs(phi) - z.z4 * (1.0 - y * y)});
      const double pw =
          std::abs(h_dec) - big_z(order, CuboidPoint{params.p1, x, y});
      if (assert_majorant) {
        rep.worst_majorant_excess = std::max(rep.worst_majorant_excess, maj);
        rep.worst_pointwise_excess = std::max(rep.worst_pointwise_excess, pw);
      } else {
        rep.observed_majorant_excess = std::max(rep.observed_majorant_excess, maj);
        rep.observed_pointwise_excess = std::max(rep.observed_pointwise_excess, pw);
      }
    }
  }

  rep.pass = rep.worst_decomposition_rel < 1e-10 && rep.worst_rotation_rel < 1e-10 &&
             rep.worst_bound_excess <= 1e-12 && rep.worst_majorant_excess <= 1e-12 &&
             rep.worst_pointwise_excess <= 1e-12;
  return rep;
}

}  // namespace h31
