// SPDX-License-Identifier: Apache-2.0
#include "hankel31/caratheodory.hpp"

#include <cmath>

namespace h31 {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Unit-disk membership is checked through the squared modulus so the
// validator and the sampler clamp agree bit-for-bit.
inline bool in_unit_disk(complex z) { return std::norm(z) <= 1.0; }

inline complex clamp_to_unit_disk(complex z) {
  while (!in_unit_disk(z)) {
    const double m = std::abs(z);
    z /= m;
    if (!in_unit_disk(z)) z *= 0x1.fffffffffffffp-1;
  }
  return z;
}

}  // namespace

void validate(const CaratheodoryParams& params) {
  if (!(params.p1 >= 0.0 && params.p1 <= 2.0))
    throw domain_error("params: p1 must lie in [0,2]");
  if (!in_unit_disk(params.gamma)) throw domain_error("params: |gamma| must be <= 1");
  if (!in_unit_disk(params.eta)) throw domain_error("params: |eta| must be <= 1");
  if (!in_unit_disk(params.rho)) throw domain_error("params: |rho| must be <= 1");
}

void validate(const CaratheodoryCoeffs& coeffs) {
  // 1e-9 slack: values assembled from admissible params obey |p_k| <= 2 up to
  // rounding only.
  constexpr double kSlack = 1e-9;
  if (!(coeffs.p1 >= 0.0 && coeffs.p1 <= 2.0))
    throw domain_error("coeffs: p1 must lie in [0,2]");
  if (std::abs(coeffs.p2) > 2.0 + kSlack || std::abs(coeffs.p3) > 2.0 + kSlack ||
      std::abs(coeffs.p4) > 2.0 + kSlack)
    throw domain_error("coeffs: |p_k| must be <= 2");
}

complex p2_of(double p1, complex gamma) {
  if (!(p1 >= 0.0 && p1 <= 2.0)) throw domain_error("p2_of: p1 must lie in [0,2]");
  if (!in_unit_disk(gamma)) throw domain_error("p2_of: |gamma| must be <= 1");
  const double q = 4.0 - p1 * p1;
  return (p1 * p1 + gamma * q) / 2.0;
}

complex p3_of(double p1, complex gamma, complex eta) {
  if (!(p1 >= 0.0 && p1 <= 2.0)) throw domain_error("p3_of: p1 must lie in [0,2]");
  if (!in_unit_disk(gamma)) throw domain_error("p3_of: |gamma| must be <= 1");
  if (!in_unit_disk(eta)) throw domain_error("p3_of: |eta| must be <= 1");
  const double q = 4.0 - p1 * p1;
  const double og2 = 1.0 - std::norm(gamma);
  return (p1 * p1 * p1 + 2.0 * p1 * q * gamma - p1 * q * gamma * gamma +
          2.0 * q * og2 * eta) /
         4.0;
}

complex p4_of(const CaratheodoryParams& params) {
  validate(params);
  const double p1 = params.p1;
  const complex g = params.gamma, e = params.eta, r = params.rho;
  const double q = 4.0 - p1 * p1;
  const double og2 = 1.0 - std::norm(g);
  const double oe2 = 1.0 - std::norm(e);
  const complex bracket = p1 * p1 * (g * g - 3.0 * g + 3.0) + 4.0 * g;
  return (p1 * p1 * p1 * p1 + q * g * bracket -
          4.0 * q * og2 * (p1 * (g - 1.0) * e + std::conj(g) * e * e - oe2 * r)) /
         8.0;
}

CaratheodoryCoeffs coeffs_from_params(const CaratheodoryParams& params) {
  validate(params);
  return CaratheodoryCoeffs{params.p1, p2_of(params.p1, params.gamma),
                            p3_of(params.p1, params.gamma, params.eta), p4_of(params)};
}

CaratheodoryParams sample_param_at(std::uint64_t seed, std::uint64_t index) {
  const auto disk = [&](std::uint32_t slot) {
    const double r = std::sqrt(detail::u01(seed, index, slot));
    const double t = kTwoPi * detail::u01(seed, index, slot + 1);
    return clamp_to_unit_disk(complex{r * std::cos(t), r * std::sin(t)});
  };
  CaratheodoryParams out;
  out.p1 = 2.0 * detail::u01(seed, index, 0);
  out.gamma = disk(1);
  out.eta = disk(3);
  out.rho = disk(5);
  return out;
}

std::vector<CaratheodoryParams> sample_params(std::uint64_t seed, long long count) {
  if (count < 0) throw domain_error("sample_params: count must be >= 0");
  std::vector<CaratheodoryParams> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i)
    out.push_back(sample_param_at(seed, static_cast<std::uint64_t>(i)));
  return out;
}

}  // namespace h31
