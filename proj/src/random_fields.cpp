// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#include "mpdns/random_fields.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "mpdns/errors.hpp"

namespace mpdns {

namespace {

// uniform [0, 1) from the top 53 bits; avoids distribution objects, whose
// output is implementation defined
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SpectralScalarField random_bandlimited_field(const Grid& grid, std::uint64_t seed,
                                             double slope, int kmax) {
  if (kmax < 1 || kmax > grid.dealias_cutoff())
    throw ConfigError("random_bandlimited_field: kmax must lie in [1, dealias_cutoff]");

  std::mt19937_64 rng(seed);
  SpectralScalarField out(grid);
  const bool single_shell = std::isinf(slope) && slope < 0.0;

  // fixed lattice walk; only the lexicographically positive half draws
  for (int k3 = -kmax; k3 <= kmax; ++k3) {
    for (int k2 = -kmax; k2 <= kmax; ++k2) {
      for (int k1 = 0; k1 <= kmax; ++k1) {
        const bool positive =
            k1 > 0 || (k1 == 0 && (k2 > 0 || (k2 == 0 && k3 > 0)));
        if (!positive) continue;
        const double kmag = std::sqrt(double(k1) * k1 + double(k2) * k2 + double(k3) * k3);
        if (kmag > kmax) continue;
        const double phase = 2.0 * std::numbers::pi * unit_uniform(rng);
        double mag;
        if (single_shell) {
          mag = kmag > kmax - 1 ? 1.0 : 0.0;
        } else {
          mag = std::pow(kmag, slope);
        }
        if (mag == 0.0) continue;
        out.set_coeff(k1, k2, k3, std::polar(mag, phase));
      }
    }
  }
  return out;
}

}  // namespace mpdns
