// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#include "mpdns/littlewood_paley.hpp"

#include <cmath>
#include <cstdlib>

#include "mpdns/errors.hpp"

namespace mpdns {

namespace {

// smoothstep from the standard exp(-1/x) mollifier: 0 for x <= 0, 1 for
// x >= 1, strictly monotone in between
double mollifier_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x);
  const double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

constexpr double kChiOne = 0.75;       // chi == 1 inside this radius
constexpr double kChiZero = 4.0 / 3.0; // chi == 0 outside this radius

}  // namespace

double lp_chi(double t) {
  t = std::abs(t);
  if (t <= kChiOne) return 1.0;
  if (t >= kChiZero) return 0.0;
  return mollifier_step((kChiZero - t) / (kChiZero - kChiOne));
}

double lp_phi(double t) { return lp_chi(0.5 * t) - lp_chi(t); }

double DyadicPartition::phi_j(int j, double kmag) {
  // ldexp keeps 2^{-j} scaling exact, so the telescoping sum over j cancels
  // bitwise and the partition of unity is exact on the lattice
  return lp_chi(std::ldexp(kmag, -j - 1)) - lp_chi(std::ldexp(kmag, -j));
}

DyadicPartition build_partition(const Grid& grid) {
  DyadicPartition part;
  part.grid_ = grid;
  part.j_min_ = -1;  // the smallest nonzero lattice |k| is 1, carried by j in {-1, 0}

  const double max_kmag = std::sqrt(3.0) * (grid.n() / 2);
  int j_max = 0;
  while (std::ldexp(max_kmag, -(j_max + 1)) > kChiOne) ++j_max;
  part.j_max_ = j_max;

  const ModeTables& mt = grid.modes();
  const Eigen::Index nm = grid.num_modes();
  part.multipliers_.reserve(j_max - part.j_min_ + 1);
  for (int j = part.j_min_; j <= j_max; ++j) {
    Eigen::ArrayXd mult(nm);
    for (Eigen::Index m = 0; m < nm; ++m) {
      mult[m] = mt.kmag[m] == 0.0 ? 0.0 : phi_j(j, mt.kmag[m]);
    }
    part.multipliers_.push_back(std::move(mult));
  }

  if (std::getenv("MPDNS_TEST_BREAK_PARTITION") != nullptr) {
    // fault-injection hook for the verification suite
    Eigen::ArrayXd& mult = part.multipliers_[0 - part.j_min_];
    for (Eigen::Index m = 0; m < nm; ++m)
      if (mult[m] > 0.0) mult[m] += 1e-6;
  }
  return part;
}

DyadicBlock dyadic_block(const SpectralScalarField& f, int j, const DyadicPartition& partition) {
  if (!(f.grid() == partition.grid())) throw ConfigError("dyadic_block: grid mismatch");
  DyadicBlock out{SpectralScalarField(f.grid()), partition.in_band(j)};
  if (out.in_band) out.field.coeffs() = f.coeffs() * partition.multiplier(j);
  return out;
}

DyadicDecomposition decompose(const SpectralScalarField& f, const DyadicPartition& partition) {
  DyadicDecomposition out;
  out.blocks.reserve(partition.j_max() - partition.j_min() + 1);
  for (int j = partition.j_min(); j <= partition.j_max(); ++j) {
    out.blocks.emplace_back(j, dyadic_block(f, j, partition).field);
  }
  return out;
}

namespace {

double block_lp(const SpectralScalarField& block, double p) {
  // for p = 2 Parseval gives the quadrature value exactly
  if (p == 2.0) return l2_norm_parseval(block);
  return lp_norm(block, p);
}

void validate(const BesovParams& params) {
  if (!(params.p >= 1.0) || !(params.q >= 1.0))
    throw ConfigError("besov_norm requires p, q >= 1");
}

}  // namespace

std::vector<double> block_lp_norms(const SpectralScalarField& f, double p,
                                   const DyadicPartition& partition) {
  std::vector<double> norms;
  norms.reserve(partition.j_max() - partition.j_min() + 1);
  SpectralScalarField block(f.grid());
  for (int j = partition.j_min(); j <= partition.j_max(); ++j) {
    block.coeffs() = f.coeffs() * partition.multiplier(j);
    const bool empty = (block.coeffs().abs() == 0.0).all();
    norms.push_back(empty ? 0.0 : block_lp(block, p));
  }
  return norms;
}

double besov_norm(const SpectralScalarField& f, const BesovParams& params,
                  const DyadicPartition& partition) {
  validate(params);
  const std::vector<double> norms = block_lp_norms(f, params.p, partition);
  if (params.q == kInf) {
    double best = 0.0;
    for (std::size_t i = 0; i < norms.size(); ++i) {
      const int j = partition.j_min() + static_cast<int>(i);
      best = std::max(best, std::pow(2.0, j * params.s) * norms[i]);
    }
    return best;
  }
  long double acc = 0.0L;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    const int j = partition.j_min() + static_cast<int>(i);
    const long double term = std::pow(2.0, j * params.s) * norms[i];
    acc += std::pow(term, static_cast<long double>(params.q));
  }
  return static_cast<double>(std::pow(acc, 1.0L / params.q));
}

double besov_norm(const SpectralVectorField& v, const BesovParams& params,
                  const DyadicPartition& partition) {
  // vector norm: l^2 combination of the component norms
  double acc = 0.0;
  for (int c = 0; c < 3; ++c) {
    const double b = besov_norm(v[c], params, partition);
    acc += b * b;
  }
  return std::sqrt(acc);
}

double sobolev_norm(const SpectralScalarField& f, double s) {
  const ModeTables& mt = f.grid().modes();
  const Complex* c = f.data();
  long double acc = 0.0L;
  const Eigen::Index nm = f.grid().num_modes();
  for (Eigen::Index m = 0; m < nm; ++m) {
    if (mt.kmag[m] == 0.0) continue;
    acc += static_cast<long double>(mt.weight[m]) *
           std::pow(static_cast<long double>(mt.kmag[m]), 2.0L * s) * std::norm(c[m]);
  }
  const long double L = f.grid().box_length();
  return std::sqrt(static_cast<double>(L * L * L * acc));
}

double sobolev_norm(const SpectralVectorField& v, double s) {
  double acc = 0.0;
  for (int c = 0; c < 3; ++c) {
    const double h = sobolev_norm(v[c], s);
    acc += h * h;
  }
  return std::sqrt(acc);
}

}  // namespace mpdns
