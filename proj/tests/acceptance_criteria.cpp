// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: runs every desk-scale criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code = number of failed
// criteria. argv[1] (optional) is the CLI binary, used for the end-to-end
// criteria; without it those criteria run against the library directly.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hankel31/caratheodory.hpp"
#include "hankel31/functionals.hpp"
#include "hankel31/optimizer.hpp"
#include "hankel31/roots.hpp"
#include "hankel31/scan.hpp"
#include "hankel31/surface.hpp"

namespace {

using h31::Order;

int g_failed = 0;

void report(int idx, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", idx, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++g_failed;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// criterion-1 alpha grid: {0,0.04,...,0.36} minus the alpha0 window
std::vector<double> criterion_grid(double a0) {
  std::vector<double> out;
  for (double alpha : h31::acceptance_alpha_grid())
    if (std::abs(alpha - a0) > 0.02) out.push_back(alpha);
  return out;
}

int run_cli(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "h31_acceptance";
  std::filesystem::create_directories(tmp);

  const double a0 = h31::alpha0().root;
  const h31::OptimizerConfig cfg;  // defaults: grid (201,101,101)

  // 1. sharp bound: global max equals 4(1-a)^2/9 at the (0,0,1) corner
  {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    bool corner_ok = true;
    for (double alpha : criterion_grid(a0)) {
      const Order order{alpha};
      const auto r = h31::global_max(order, cfg);
      worst = std::max(worst, std::abs(r.value - h31::sharp_bound(order)));
      corner_ok = corner_ok && r.argmax.p == 0.0 && r.argmax.x == 0.0 && r.argmax.y == 1.0;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, worst <= 1e-8 && corner_ok && secs < 60.0,
           "max |global_max - bound| = " + fmt(worst) + ", argmax (0,0,1), " +
               fmt(secs) + " s");
  }

  // 2. order zero: global max 4/9 within 1e-10
  {
    const auto r = h31::global_max(Order{0.0}, cfg);
    const double err = std::abs(r.value - 4.0 / 9.0);
    report(2, err <= 1e-10, "|global_max(0) - 4/9| = " + fmt(err));
  }

  // 3. nephroid order: alpha = 1 - 2 sqrt(2)/3, bound exactly 32/81
  {
    bool pass = false;
    std::string detail;
    if (!cli.empty()) {
      const auto out = tmp / "nephroid.csv";
      const int rc = run_cli(cli + " nephroid --out " + out.string());
      const std::string csv = slurp(out);
      double alpha = 0.0, bound = 0.0;
      int member = 0;
      const auto nl = csv.find('\n');
      const int got = nl == std::string::npos
                          ? 0
                          : std::sscanf(csv.c_str() + nl + 1, "%lf,%lf,%d", &alpha,
                                        &bound, &member);
      pass = rc == 0 && got == 3 && std::abs(alpha - 0.057191) <= 1e-6 &&
             std::abs(bound - 32.0 / 81.0) <= 1e-12 && member == 1;
      detail = "cli alpha = " + fmt(alpha) + ", bound - 32/81 = " +
               fmt(bound - 32.0 / 81.0);
    } else {
      const double alpha = 1.0 - std::pow(2.0, 1.5) / 3.0;
      const double bound = h31::sharp_bound(Order{alpha});
      pass = std::abs(alpha - 0.057191) <= 1e-6 && std::abs(bound - 32.0 / 81.0) <= 1e-12;
      detail = "library alpha = " + fmt(alpha);
    }
    report(3, pass, detail);
  }

  // 4. roots: values, brackets, residuals
  {
    const auto r0 = h31::alpha0();
    const auto r1 = h31::alpha1();
    const auto r2 = h31::alpha2();
    const auto rb = h31::beta0();
    const bool pass = std::abs(r1.root - 0.370803) <= 1e-4 &&
                      std::abs(rb.root - 0.5) <= 1e-14 && r0.root >= 0.28 &&
                      r0.root <= 0.29 && r0.residual < 1e-12 && r2.root >= 0.14 &&
                      r2.root <= 0.15 && r2.residual < 1e-9;
    report(4, pass,
           "alpha0 = " + fmt(r0.root) + ", alpha1 = " + fmt(r1.root) +
               ", alpha2 = " + fmt(r2.root) + ", beta0 = " + fmt(rb.root));
  }

  // 5. sharpness witness: probe with 1e6 samples returns the bound exactly
  {
    h31::OptimizerConfig probe_cfg = cfg;
    probe_cfg.sample_count = 1000000;
    probe_cfg.seed = 2026;
    double worst_eq = 0.0, worst_excess = -1.0;
    bool witness_ok = true;
    for (double alpha : h31::acceptance_alpha_grid()) {
      const Order order{alpha};
      const auto r = h31::probe_max(order, probe_cfg);
      worst_eq = std::max(worst_eq, std::abs(r.value - h31::sharp_bound(order)));
      worst_excess = std::max(worst_excess, r.value - h31::sharp_bound(order));
      witness_ok = witness_ok && r.witness_index == -1;
    }
    report(5, worst_eq <= 1e-13 && worst_excess <= 1e-12 && witness_ok,
           "max |probe - bound| = " + fmt(worst_eq) + ", extremal witness kept");
  }

  // 6. decomposition identity via the crosscheck command, 1e5 samples
  {
    bool pass = false;
    std::string detail;
    double rel = 1.0;
    if (!cli.empty()) {
      const auto out = tmp / "crosscheck.csv";
      const int rc =
          run_cli(cli + " crosscheck --samples 100000 --seed 1 --out " + out.string());
      const std::string csv = slurp(out);
      const auto pos = csv.find("worst_decomposition_rel,");
      if (pos != std::string::npos)
        rel = std::strtod(csv.c_str() + pos + 24, nullptr);
      pass = rc == 0 && rel < 1e-10;
      detail = "cli exit " + std::to_string(rc) + ", worst rel residual = " + fmt(rel);
    } else {
      const auto rep = h31::crosscheck(100000, 1);
      rel = rep.worst_decomposition_rel;
      pass = rep.pass && rel < 1e-10;
      detail = "worst rel residual = " + fmt(rel);
    }
    report(6, pass, detail);
  }

  // 7. face dominance: the four competing restriction maxima stay at least
  //    1e-6 below the sharp bound on the criterion-1 grid
  {
    double min_margin = 1e300;
    for (double alpha : criterion_grid(a0)) {
      const Order order{alpha};
      const double bound = h31::sharp_bound(order);
      const double b2 = (1.0 - alpha) * (1.0 - alpha);
      const double r5 = b2 / (3.0 * std::sqrt(3.0 * (1.0 - alpha)));
      const double p2 = h31::edge_value(h31::EdgeId::CP2, order, 0.0);
      const double p0x1 = alpha * b2 / 2.0;
      const double pa = h31::p_of_alpha(order);
      for (double v : {r5, p2, p0x1, pa}) min_margin = std::min(min_margin, bound - v);
    }
    report(7, min_margin >= 1e-6, "min margin = " + fmt(min_margin));
  }

  // 8. P(alpha) closed form vs dense scan of the x=1 face (step 1e-5)
  {
    double worst = 0.0;
    double p0_diff = 1e300;
    for (double alpha : criterion_grid(a0)) {
      const Order order{alpha};
      double dense = 0.0;
      for (int i = 0; i <= 200000; ++i)
        dense = std::max(dense, h31::s3_value(order, 2.0 * i / 200000.0));
      worst = std::max(worst, std::abs(h31::p_of_alpha(order) - dense));
      if (alpha == 0.0) p0_diff = std::abs(dense - 0.319594);
    }
    report(8, worst < 1e-8 && p0_diff <= 1e-5,
           "max |P - dense| = " + fmt(worst) + ", P(0) offset = " + fmt(p0_diff));
  }

  // 9. no interior critical point at grid (201,101)
  {
    h31::OptimizerConfig scan_cfg = cfg;
    scan_cfg.grid_steps = {201, 101, 3};
    std::size_t total = 0;
    for (double alpha : {0.0, 0.1, 0.2, 0.3})
      total += h31::interior_critical_scan(Order{alpha}, scan_cfg).size();
    report(9, total == 0, "reported critical points: " + std::to_string(total));
  }

  // 10. observation at alpha = 1/2: 1e6 samples stay below 1/9
  {
    h31::OptimizerConfig probe_cfg = cfg;
    probe_cfg.sample_count = 1000000;
    probe_cfg.seed = 2026;
    const auto r = h31::probe_max(Order{0.5}, probe_cfg);
    report(10, r.value <= 1.0 / 9.0 + 1e-12,
           "probe(0.5) = " + fmt(r.value) + " vs 1/9 = " + fmt(1.0 / 9.0));
  }

  std::printf("%d/10 criteria passed\n", 10 - g_failed);
  return g_failed;
}
