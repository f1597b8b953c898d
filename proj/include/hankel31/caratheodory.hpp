// SPDX-License-Identifier: Apache-2.0
//
// Coefficient model of the Caratheodory class: the (p1, gamma, eta, rho)
// parametrization of p2..p4 and a deterministic sampler of admissible
// parameter tuples.
#ifndef HANKEL31_CARATHEODORY_HPP
#define HANKEL31_CARATHEODORY_HPP

#include <cstdint>
#include <vector>

#include "hankel31/types.hpp"

namespace h31 {

/// p2 = (p1^2 + gamma (4 - p1^2)) / 2.
complex p2_of(double p1, complex gamma);

/// p3 = (p1^3 + 2 p1 (4-p1^2) gamma - p1 (4-p1^2) gamma^2
///       + 2 (4-p1^2)(1-|gamma|^2) eta) / 4.
complex p3_of(double p1, complex gamma, complex eta);

/// p4 = (p1^4 + (4-p1^2) gamma (p1^2 (gamma^2 - 3 gamma + 3) + 4 gamma)
///       - 4 (4-p1^2)(1-|gamma|^2)
///           (p1 (gamma-1) eta + conj(gamma) eta^2 - (1-|eta|^2) rho)) / 8.
complex p4_of(const CaratheodoryParams& params);

/// Bundles (p1, p2_of, p3_of, p4_of).
CaratheodoryCoeffs coeffs_from_params(const CaratheodoryParams& params);

/// Deterministic counter-based sample stream: p1 uniform on [0,2], each disk
/// parameter area-uniform on the closed unit disk (radius sqrt(u), uniform
/// angle). Random access by index; identical (seed, index) always yields the
/// identical tuple, so disjoint index sub-ranges can be generated on any
/// thread.
CaratheodoryParams sample_param_at(std::uint64_t seed, std::uint64_t index);

/// The first `count` entries of the stream as a vector.
std::vector<CaratheodoryParams> sample_params(std::uint64_t seed, long long count);

/// The parameter tuple (p1,gamma,eta,rho) = (0,0,1,0) on which the sharp
/// bound is attained; always injected into probe runs.
inline CaratheodoryParams extremal_params() {
  return CaratheodoryParams{0.0, complex{0.0, 0.0}, complex{1.0, 0.0}, complex{0.0, 0.0}};
}

namespace detail {

/// SplitMix64 finalizer; the sampler hashes (seed, index, slot) through it.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Uniform double in [0,1) from the (seed, index, slot) cell.
inline double u01(std::uint64_t seed, std::uint64_t index, std::uint32_t slot) {
  const std::uint64_t z =
      mix64(mix64(seed) + index * 0x9e3779b97f4a7c15ull + slot * 0xd1342543de82ef95ull);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace detail

}  // namespace h31

#endif
