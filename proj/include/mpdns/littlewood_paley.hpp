// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_LITTLEWOOD_PALEY_HPP
#define MPDNS_LITTLEWOOD_PALEY_HPP

#include <utility>
#include <vector>

#include "mpdns/field.hpp"
#include "mpdns/norms.hpp"

namespace mpdns {

/// Radial profiles of the dyadic partition of unity. chi is a smooth bump
/// built from the exp(-1/x) mollifier: identically 1 on |xi| <= 3/4,
/// identically 0 on |xi| >= 4/3. phi(xi) = chi(xi/2) - chi(xi) is then
/// supported in 3/4 <= |xi| <= 8/3 and the shifted family telescopes,
///   sum_j phi(2^{-j} xi) = 1 for xi != 0,
/// exactly, including in floating point when arguments are scaled by ldexp.
/// These profiles are a versioned constant of the implementation.
double lp_chi(double t);
double lp_phi(double t);

/// Sampled dyadic multipliers phi_j(k) = phi(2^{-j} |k|) on the wavenumber
/// lattice, for the j band that carries every nonzero lattice mode.
class DyadicPartition {
 public:
  const Grid& grid() const { return grid_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  bool in_band(int j) const { return j >= j_min_ && j <= j_max_; }

  const Eigen::ArrayXd& multiplier(int j) const { return multipliers_[j - j_min_]; }

  /// phi_j evaluated at a scalar |k| (used by oracles and sweeps).
  static double phi_j(int j, double kmag);

  friend DyadicPartition build_partition(const Grid& grid);

 private:
  Grid grid_;
  int j_min_ = 0, j_max_ = -1;
  std::vector<Eigen::ArrayXd> multipliers_;
};

/// Builds the partition for a grid. The band satisfies
/// 2^{j_min} * 3/4 <= 1 and 2^{j_max} * 8/3 >= max |k|, and on every
/// nonzero lattice point the multipliers sum to 1.
///
/// Test hook: setting MPDNS_TEST_BREAK_PARTITION perturbs one multiplier so
/// verification suites can prove they would catch a broken partition.
DyadicPartition build_partition(const Grid& grid);

/// Frequency block at scale j: coefficients multiplied by phi_j(k); the k=0
/// coefficient is always zero. `in_band` is false when j lies outside the
/// representable band (the block is then empty).
struct DyadicBlock {
  SpectralScalarField field;
  bool in_band;
};
DyadicBlock dyadic_block(const SpectralScalarField& f, int j, const DyadicPartition& partition);

/// All blocks of f in band order.
struct DyadicDecomposition {
  std::vector<std::pair<int, SpectralScalarField>> blocks;
};
DyadicDecomposition decompose(const SpectralScalarField& f, const DyadicPartition& partition);

/// Homogeneous Besov indices; p, q >= 1 (kInf allowed).
struct BesovParams {
  double s;
  double p;
  double q;
};

/// || f ||_{B^s_{p,q}}: block norms 2^{js} ||Delta_j f||_{L^p} combined in
/// l^q over j (sup for q = inf). The mean mode never contributes. For
/// vector fields the component norms are combined in l^2.
double besov_norm(const SpectralScalarField& f, const BesovParams& params,
                  const DyadicPartition& partition);
double besov_norm(const SpectralVectorField& v, const BesovParams& params,
                  const DyadicPartition& partition);

/// Per-scale block L^p norms ||Delta_j f||_{L^p}, j = j_min..j_max. These are
/// independent of the Besov smoothness index, so a sweep over s (or over the
/// criterion exponent r) can reuse them and only re-weight by 2^{js}.
std::vector<double> block_lp_norms(const SpectralScalarField& f, double p,
                                   const DyadicPartition& partition);

/// Homogeneous Sobolev norm: (sum_{k != 0} |k|^{2s} |coeff|^2 (2 pi)^3)^{1/2}.
/// Coincides with B^s_{2,2} up to a bounded block-vs-exact multiplier factor.
double sobolev_norm(const SpectralScalarField& f, double s);
double sobolev_norm(const SpectralVectorField& v, double s);

}  // namespace mpdns

#endif
