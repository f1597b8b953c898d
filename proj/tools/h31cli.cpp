// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: alpha scans, root reports, sharpness probes,
// extremal series, figure-data emission and machine-readable verification
// reports. Talks to the core exclusively through the C API (hankel31.h).
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hankel31.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

using ordered_json = nlohmann::ordered_json;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_fixed12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

// Writes either to --out or to stdout.
struct Sink {
  std::ofstream file;
  bool to_file = false;
  bool ok = true;

  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      to_file = true;
      ok = file.good();
    }
  }
  std::ostream& out() { return to_file ? static_cast<std::ostream&>(file) : std::cout; }
};

struct CommonOpts {
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "write the report to this file instead of stdout");
}

struct GridOpt {
  std::string spec;
  h31_grid_steps steps{201, 101, 101};
  bool parse() {
    if (spec.empty()) return true;
    return std::sscanf(spec.c_str(), "%d,%d,%d", &steps.np, &steps.nx, &steps.ny) == 3;
  }
};

int fail_io(const std::string& what) {
  std::cerr << "i/o error: " << what << "\n";
  return kExitIo;
}

const char* kFaceNames[6] = {"P0", "P2", "X0", "X1", "Y0", "Y1"};
const char* kEdgeNames[7] = {"R1", "R2", "R3", "R4", "R5", "CP2", "CP0X1"};
const char* kStatusNames[3] = {"verified", "observation", "excluded_window"};

int cmd_scan(double alpha_min, double alpha_max, double alpha_step,
             const h31_opt_config& cfg, double window, int threads,
             const CommonOpts& common) {
  if (!(alpha_min >= 0.0 && alpha_min < alpha_max && alpha_max < 1.0 && alpha_step > 0.0)) {
    std::cerr << "usage error: need 0 <= alpha-min < alpha-max < 1 and alpha-step > 0\n";
    return kExitUsage;
  }
  h31_scan* scan = nullptr;
  h31_status st = h31_scan_run(alpha_min, alpha_max, alpha_step, &cfg, window, threads, &scan);
  if (st != H31_OK) {
    std::cerr << "scan failed: " << h31_status_str(st) << "\n";
    return st == H31_EDOM ? kExitUsage : kExitVerifyFail;
  }
  std::unique_ptr<h31_scan, decltype(&h31_scan_free)> guard(scan, &h31_scan_free);

  h31_root_result a1{};
  h31_alpha1(&a1);

  Sink sink(common.out_path);
  if (!sink.ok) return fail_io(common.out_path);

  bool all_verified = true;
  const size_t n = h31_scan_row_count(scan);
  ordered_json jrows = ordered_json::array();
  if (common.format == "csv") {
    sink.out() << "alpha,bound_closed_form,grid_max,argmax_p,argmax_x,argmax_y,probe_max";
    for (const char* f : kFaceNames) sink.out() << ",face_" << f;
    for (const char* e : kEdgeNames) sink.out() << ",edge_" << e;
    sink.out() << ",p_alpha,status,hankel2_max\n";
  }
  for (size_t i = 0; i < n; ++i) {
    h31_scan_row row{};
    h31_scan_get_row(scan, i, &row);
    const bool in_range = row.alpha < a1.root &&
                          row.status != H31_ROW_EXCLUDED_WINDOW;
    if (in_range && row.status != H31_ROW_VERIFIED) all_verified = false;
    if (common.format == "csv") {
      sink.out() << fmt12(row.alpha) << ',' << fmt12(row.bound_closed_form) << ','
                 << fmt12(row.grid_max) << ',' << fmt12(row.argmax.p) << ','
                 << fmt12(row.argmax.x) << ',' << fmt12(row.argmax.y) << ','
                 << fmt12(row.probe_max);
      for (double v : row.face_maxima) sink.out() << ',' << fmt12(v);
      for (double v : row.edge_maxima) sink.out() << ',' << fmt12(v);
      sink.out() << ',' << (row.p_alpha_present ? fmt12(row.p_alpha) : std::string())
                 << ',' << kStatusNames[row.status] << ',' << fmt12(row.hankel2_max)
                 << '\n';
    } else {
      ordered_json j;
      j["alpha"] = row.alpha;
      j["bound_closed_form"] = row.bound_closed_form;
      j["grid_max"] = row.grid_max;
      j["argmax"] = {row.argmax.p, row.argmax.x, row.argmax.y};
      j["probe_max"] = row.probe_max;
      for (int f = 0; f < 6; ++f) j["face_maxima"][kFaceNames[f]] = row.face_maxima[f];
      for (int e = 0; e < 7; ++e) j["edge_maxima"][kEdgeNames[e]] = row.edge_maxima[e];
      if (row.p_alpha_present)
        j["p_alpha"] = row.p_alpha;
      else
        j["p_alpha"] = nullptr;
      j["status"] = kStatusNames[row.status];
      j["hankel2_max"] = row.hankel2_max;
      jrows.push_back(j);
    }
  }
  if (common.format == "json") sink.out() << jrows.dump(2) << "\n";
  if (sink.to_file && !sink.file.good()) return fail_io(common.out_path);
  return all_verified ? kExitOk : kExitVerifyFail;
}

int cmd_roots(const CommonOpts& common) {
  h31_root_result results[4]{};
  h31_status st = H31_OK;
  st = h31_alpha0(&results[0]);
  if (st == H31_OK) st = h31_alpha1(&results[1]);
  if (st == H31_OK) st = h31_alpha2(&results[2]);
  if (st == H31_OK) st = h31_beta0(&results[3]);
  if (st != H31_OK) {
    std::cerr << "root isolation failed: " << h31_status_str(st) << "\n";
    return kExitVerifyFail;
  }
  Sink sink(common.out_path);
  if (!sink.ok) return fail_io(common.out_path);
  if (common.format == "csv") {
    sink.out() << "target,root,bracket_lo,bracket_hi,residual,iterations\n";
    for (const auto& r : results)
      sink.out() << r.target << ',' << fmt12(r.root) << ',' << fmt12(r.lo) << ','
                 << fmt12(r.hi) << ',' << fmt12(r.residual) << ',' << r.iterations
                 << '\n';
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& r : results)
      j.push_back({{"target", r.target},
                   {"root", r.root},
                   {"bracket", {r.lo, r.hi}},
                   {"residual", r.residual},
                   {"iterations", r.iterations}});
    sink.out() << j.dump(2) << "\n";
  }
  if (sink.to_file && !sink.file.good()) return fail_io(common.out_path);
  return kExitOk;
}

int cmd_extremal(double alpha, int n_max, const CommonOpts& common) {
  if (!(alpha >= 0.0 && alpha < 1.0) || n_max < 1) {
    std::cerr << "usage error: need alpha in [0,1) and n-max >= 1\n";
    return kExitUsage;
  }
  const int n_series = n_max < 5 ? 5 : n_max;
  std::vector<double> a(static_cast<size_t>(n_series), 0.0);
  if (h31_extremal_coeffs(alpha, n_series, a.data(), a.size()) != H31_OK)
    return kExitVerifyFail;

  h31_schlicht c{};
  c.a2 = h31_complex{a[1], 0.0};
  c.a3 = h31_complex{a[2], 0.0};
  c.a4 = h31_complex{a[3], 0.0};
  c.a5 = h31_complex{a[4], 0.0};
  h31_complex h{};
  h31_hankel3(&c, &h);
  const double habs = std::hypot(h.re, h.im);
  double bound = 0.0;
  h31_sharp_bound(alpha, &bound);
  const double ratio = habs / bound;

  Sink sink(common.out_path);
  if (!sink.ok) return fail_io(common.out_path);
  if (common.format == "csv") {
    sink.out() << "item,value\n";
    for (int i = 0; i < n_max; ++i)
      sink.out() << "a_" << (i + 1) << ',' << fmt12(a[static_cast<size_t>(i)]) << '\n';
    sink.out() << "h31_abs," << fmt12(habs) << '\n';
    sink.out() << "bound," << fmt12(bound) << '\n';
    sink.out() << "ratio," << fmt_fixed12(ratio) << '\n';
  } else {
    ordered_json j;
    j["alpha"] = alpha;
    j["coefficients"] = std::vector<double>(a.begin(), a.begin() + n_max);
    j["h31_abs"] = habs;
    j["bound"] = bound;
    j["ratio"] = fmt_fixed12(ratio);
    sink.out() << j.dump(2) << "\n";
  }
  if (sink.to_file && !sink.file.good()) return fail_io(common.out_path);
  return kExitOk;
}

int cmd_nephroid(const CommonOpts& common) {
  // min over |z|=1 of Re(1 + z - z^3/3) = 1 - (1/3)(1+r^2)^{3/2} at r=1.
  const double alpha = 1.0 - std::pow(2.0, 1.5) / 3.0;
  double bound = 0.0;
  h31_sharp_bound(alpha, &bound);
  h31_root_result a0{}, a1{};
  h31_alpha0(&a0);
  h31_alpha1(&a1);
  const bool member = alpha >= 0.0 && alpha < a1.root && alpha != a0.root;

  Sink sink(common.out_path);
  if (!sink.ok) return fail_io(common.out_path);
  if (common.format == "csv") {
    sink.out() << "alpha,bound,in_range\n";
    sink.out() << fmt12(alpha) << ',' << fmt12(bound) << ',' << (member ? 1 : 0) << '\n';
  } else {
    ordered_json j;
    j["alpha"] = alpha;
    j["bound"] = bound;
    j["in_range"] = member;
    sink.out() << j.dump(2) << "\n";
  }
  if (sink.to_file && !sink.file.good()) return fail_io(common.out_path);
  return kExitOk;
}

// Smallest p in (0,2) whose x=0 face stationary y lands in (0,1); bisection
// on the presence indicator.
std::optional<double> y0_valid_p_min(double alpha) {
  const auto present = [&](double p) {
    int pres = 0;
    double y0 = 0.0;
    return h31_face_x0_y_crit(alpha, p, &pres, &y0) == H31_OK && pres == 1;
  };
  constexpr int kScan = 2000;
  double prev = 1e-9;
  bool prev_ok = present(prev);
  if (prev_ok) return prev;
  for (int i = 1; i <= kScan; ++i) {
    const double p = 2.0 * i / kScan - 1e-9;
    const bool ok = present(p);
    if (ok && !prev_ok) {
      double lo = prev, hi = p;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (present(mid) ? hi : lo) = mid;
      }
      return hi;
    }
    prev = p;
    prev_ok = ok;
  }
  return std::nullopt;
}

// A figure table: a fixed header and rows of optional-valued cells, written
// both as CSV (empty cell = absent) and as a JSON mirror (null = absent).
struct FigTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;

  int write(const std::filesystem::path& dir, const std::string& stem) const {
    std::ofstream csv(dir / (stem + ".csv"), std::ios::binary);
    if (!csv.good()) return fail_io(stem + ".csv");
    for (std::size_t c = 0; c < header.size(); ++c)
      csv << (c ? "," : "") << header[c];
    csv << '\n';
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json j;
      for (std::size_t c = 0; c < row.size(); ++c) {
        csv << (c ? "," : "") << (row[c] ? fmt12(*row[c]) : std::string());
        if (row[c])
          j[header[c]] = *row[c];
        else
          j[header[c]] = nullptr;
      }
      csv << '\n';
      jrows.push_back(j);
    }
    if (!csv.good()) return fail_io(stem + ".csv");
    std::ofstream js(dir / (stem + ".json"), std::ios::binary);
    if (!js.good()) return fail_io(stem + ".json");
    js << jrows.dump(2) << '\n';
    if (!js.good()) return fail_io(stem + ".json");
    return kExitOk;
  }
};

int cmd_figures(const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) return fail_io(out_dir);

  h31_root_result a1{}, a2{};
  h31_alpha1(&a1);
  h31_alpha2(&a2);
  constexpr double kStep = 0.002;
  const auto cell = [](bool present, double v) {
    return present ? std::optional<double>(v) : std::nullopt;
  };

  FigTable eq40{{"alpha", "p_root", "root_y0_valid", "p_y0_valid_min"}, {}};
  for (double alpha = 0.0; alpha <= a2.root + 0.05 + 1e-12; alpha += kStep) {
    int present = 0;
    h31_root_result root{};
    h31_eq40_p_root(alpha, &present, &root);
    int y0_ok = 0;
    if (present) {
      double y0 = 0.0;
      h31_face_x0_y_crit(alpha, root.root, &y0_ok, &y0);
    }
    const auto pmin = y0_valid_p_min(alpha);
    eq40.rows.push_back({alpha, cell(present != 0, root.root),
                         static_cast<double>(y0_ok), pmin});
  }
  if (int rc = eq40.write(out_dir, "fig_eq40_root"); rc != kExitOk) return rc;

  FigTable p0{{"alpha", "two_l_real", "two_l"}, {}};
  for (double alpha = 0.0; alpha <= 0.5 + 1e-12; alpha += kStep) {
    int l_present = 0;
    double l = 0.0, m = 0.0, n = 0.0;
    h31_lmn(alpha, &l_present, &l, &m, &n);
    const bool real_in_range = l_present == 1 && 2.0 * l > 0.0 && 2.0 * l < 2.0;
    p0.rows.push_back(
        {alpha, real_in_range ? 1.0 : 0.0, cell(real_in_range, 2.0 * l)});
  }
  if (int rc = p0.write(out_dir, "fig_p0_status"); rc != kExitOk) return rc;

  FigTable ub{{"alpha", "bound", "edge_r5_max", "face_p2", "edge_p0x1", "p_alpha"}, {}};
  for (double alpha = 0.0; alpha < a1.root; alpha += kStep) {
    double bound = 0.0, r5 = 0.0, p2v = 0.0, p0x1 = 0.0, palpha = 0.0;
    h31_sharp_bound(alpha, &bound);
    const double delta3 = 1.0 / std::sqrt(3.0 * (1.0 - alpha));
    h31_edge_value(H31_EDGE_R5, alpha, delta3, &r5);
    h31_edge_value(H31_EDGE_CP2, alpha, 0.0, &p2v);
    h31_edge_value(H31_EDGE_CP0X1, alpha, 0.0, &p0x1);
    const bool has_p = h31_p_of_alpha(alpha, &palpha) == H31_OK;
    ub.rows.push_back({alpha, bound, r5, p2v, p0x1, cell(has_p, palpha)});
  }
  return ub.write(out_dir, "fig_upper_bounds");
}

int cmd_crosscheck(long long samples, std::uint64_t seed, const CommonOpts& common) {
  if (samples < 1) {
    std::cerr << "usage error: need samples >= 1\n";
    return kExitUsage;
  }
  h31_crosscheck_report rep{};
  const h31_status st = h31_crosscheck(samples, seed, &rep);
  if (st != H31_OK) {
    std::cerr << "crosscheck failed: " << h31_status_str(st) << "\n";
    return kExitVerifyFail;
  }
  Sink sink(common.out_path);
  if (!sink.ok) return fail_io(common.out_path);
  if (common.format == "csv") {
    sink.out() << "metric,value\n"
               << "samples," << rep.samples << '\n'
               << "seed," << rep.seed << '\n'
               << "worst_decomposition_rel," << fmt12(rep.worst_decomposition_rel) << '\n'
               << "worst_rotation_rel," << fmt12(rep.worst_rotation_rel) << '\n'
               << "worst_bound_excess," << fmt12(rep.worst_bound_excess) << '\n'
               << "worst_majorant_excess," << fmt12(rep.worst_majorant_excess) << '\n'
               << "worst_pointwise_excess," << fmt12(rep.worst_pointwise_excess) << '\n'
               << "observed_majorant_excess," << fmt12(rep.observed_majorant_excess) << '\n'
               << "observed_pointwise_excess," << fmt12(rep.observed_pointwise_excess)
               << '\n'
               << "pass," << rep.pass << '\n';
  } else {
    ordered_json j;
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["worst_decomposition_rel"] = rep.worst_decomposition_rel;
    j["worst_rotation_rel"] = rep.worst_rotation_rel;
    j["worst_bound_excess"] = rep.worst_bound_excess;
    j["worst_majorant_excess"] = rep.worst_majorant_excess;
    j["worst_pointwise_excess"] = rep.worst_pointwise_excess;
    j["observed_majorant_excess"] = rep.observed_majorant_excess;
    j["observed_pointwise_excess"] = rep.observed_pointwise_excess;
    j["pass"] = rep.pass != 0;
    sink.out() << j.dump(2) << "\n";
  }
  if (sink.to_file && !sink.file.good()) return fail_io(common.out_path);
  return rep.pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification lab for the sharp third-Hankel-determinant bound "
               "4(1-alpha)^2/9 on starlike functions of order alpha"};
  app.require_subcommand(1);

  // scan
  auto* scan = app.add_subcommand("scan", "per-alpha verification rows");
  double alpha_min = 0.0, alpha_max = 0.36, alpha_step = 0.04, window = 0.02;
  GridOpt grid;
  double tol = 1e-10;
  long long samples = 100000;
  std::uint64_t seed = 0;
  int threads = 0;
  CommonOpts scan_common;
  scan->add_option("--alpha-min", alpha_min, "scan start")->capture_default_str();
  scan->add_option("--alpha-max", alpha_max, "scan end (inclusive)")->capture_default_str();
  scan->add_option("--alpha-step", alpha_step, "scan step")->capture_default_str();
  scan->add_option("--grid", grid.spec, "optimizer grid as NP,NX,NY (default 201,101,101)");
  scan->add_option("--tol", tol, "refinement tolerance")->capture_default_str();
  scan->add_option("--samples", samples, "probe sample count")->capture_default_str();
  scan->add_option("--seed", seed, "probe sample seed")->capture_default_str();
  scan->add_option("--alpha0-window", window, "alpha window excluded around alpha0")
      ->capture_default_str();
  scan->add_option("--threads", threads, "worker threads (0 = auto)")->capture_default_str();
  add_common(scan, scan_common);

  // roots
  auto* roots = app.add_subcommand("roots", "alpha thresholds with bracket certificates");
  CommonOpts roots_common;
  add_common(roots, roots_common);

  // extremal
  auto* extremal = app.add_subcommand("extremal", "extremal function coefficient table");
  double ex_alpha = 0.0;
  int n_max = 13;
  CommonOpts ex_common;
  extremal->add_option("--alpha", ex_alpha, "order parameter")->capture_default_str();
  extremal->add_option("--n-max", n_max, "coefficients a_1..a_n to print")
      ->capture_default_str();
  add_common(extremal, ex_common);

  // nephroid
  auto* nephroid = app.add_subcommand(
      "nephroid", "bound for the nephroid-domain starlike class via its order");
  CommonOpts ne_common;
  add_common(nephroid, ne_common);

  // figures
  auto* figures = app.add_subcommand("figures", "emit figure-data CSV files");
  std::string out_dir = ".";
  figures->add_option("--out", out_dir, "output directory")->capture_default_str();

  // crosscheck
  auto* crosscheck = app.add_subcommand(
      "crosscheck", "decomposition / rotation / majorant property suites");
  long long cc_samples = 100000;
  std::uint64_t cc_seed = 0;
  CommonOpts cc_common;
  crosscheck->add_option("--samples", cc_samples, "samples per alpha")->capture_default_str();
  crosscheck->add_option("--seed", cc_seed, "sample seed")->capture_default_str();
  add_common(crosscheck, cc_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!grid.parse()) {
    std::cerr << "usage error: --grid expects NP,NX,NY\n";
    return kExitUsage;
  }
  h31_opt_config cfg{};
  h31_opt_config_default(&cfg);
  cfg.grid_steps = grid.steps;
  cfg.refine_tol = tol;
  cfg.seed = seed;
  cfg.sample_count = samples;

  if (scan->parsed())
    return cmd_scan(alpha_min, alpha_max, alpha_step, cfg, window, threads, scan_common);
  if (roots->parsed()) return cmd_roots(roots_common);
  if (extremal->parsed()) return cmd_extremal(ex_alpha, n_max, ex_common);
  if (nephroid->parsed()) return cmd_nephroid(ne_common);
  if (figures->parsed()) return cmd_figures(out_dir);
  if (crosscheck->parsed()) return cmd_crosscheck(cc_samples, cc_seed, cc_common);
  return kExitUsage;
}
