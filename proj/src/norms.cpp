// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#include "mpdns/norms.hpp"

#include <cmath>

#include "mpdns/errors.hpp"

namespace mpdns {

namespace {

// Norm reductions accumulate in long double, sequentially, so results are
// deterministic and the budget diagnostics are not limited by summation
// roundoff.
double quadrature_lp(const double* v, Eigen::Index count, double p, double cell_volume) {
  long double acc = 0.0L;
  if (p == 2.0) {
    for (Eigen::Index i = 0; i < count; ++i) acc += static_cast<long double>(v[i]) * v[i];
    return std::sqrt(static_cast<double>(acc * cell_volume));
  }
  const int ip = static_cast<int>(p);
  if (p == ip && ip <= 8) {
    for (Eigen::Index i = 0; i < count; ++i) {
      const long double a = std::abs(static_cast<long double>(v[i]));
      long double t = a;
      for (int e = 1; e < ip; ++e) t *= a;
      acc += t;
    }
  } else {
    for (Eigen::Index i = 0; i < count; ++i)
      acc += std::pow(std::abs(static_cast<long double>(v[i])), static_cast<long double>(p));
  }
  return static_cast<double>(std::pow(acc * cell_volume, 1.0L / p));
}

}  // namespace

double lp_norm(const PhysicalField& f, double p) {
  if (!(p >= 1.0)) throw ConfigError("lp_norm requires p >= 1");
  if (p == kInf) return f.values().abs().maxCoeff();
  const double h = f.grid().box_length() / f.grid().n();
  return quadrature_lp(f.values().data(), f.grid().num_points(), p, h * h * h);
}

double lp_norm(const SpectralScalarField& f, double p) {
  if (!(p >= 1.0)) throw ConfigError("lp_norm requires p >= 1");
  return lp_norm(to_physical(f), p);
}

double lp_norm(const SpectralVectorField& v, double p) {
  if (!(p >= 1.0)) throw ConfigError("lp_norm requires p >= 1");
  PhysicalField mag(v.grid());
  {
    PhysicalField p0 = to_physical(v[0]), p1 = to_physical(v[1]), p2 = to_physical(v[2]);
    mag.values() = (p0.values().square() + p1.values().square() + p2.values().square()).sqrt();
  }
  return lp_norm(mag, p);
}

namespace {

long double parseval_sq(const SpectralScalarField& f) {
  const ModeTables& mt = f.grid().modes();
  const Complex* c = f.data();
  long double acc = 0.0L;
  const Eigen::Index nm = f.grid().num_modes();
  for (Eigen::Index m = 0; m < nm; ++m)
    acc += static_cast<long double>(mt.weight[m]) * std::norm(c[m]);
  return acc;
}

long double parseval_inner(const SpectralScalarField& f, const SpectralScalarField& g) {
  const ModeTables& mt = f.grid().modes();
  const Complex* a = f.data();
  const Complex* b = g.data();
  long double acc = 0.0L;
  const Eigen::Index nm = f.grid().num_modes();
  for (Eigen::Index m = 0; m < nm; ++m) {
    acc += static_cast<long double>(mt.weight[m]) *
           (a[m].real() * b[m].real() + a[m].imag() * b[m].imag());
  }
  return acc;
}

long double box_volume(const Grid& g) {
  const long double L = g.box_length();
  return L * L * L;
}

}  // namespace

double l2_norm_parseval(const SpectralScalarField& f) {
  return std::sqrt(static_cast<double>(box_volume(f.grid()) * parseval_sq(f)));
}

double l2_norm_parseval(const SpectralVectorField& v) {
  long double acc = parseval_sq(v[0]) + parseval_sq(v[1]) + parseval_sq(v[2]);
  return std::sqrt(static_cast<double>(box_volume(v.grid()) * acc));
}

double inner_product(const SpectralScalarField& f, const SpectralScalarField& g) {
  if (!(f.grid() == g.grid())) throw ConfigError("inner_product: grid mismatch");
  return static_cast<double>(box_volume(f.grid()) * parseval_inner(f, g));
}

double inner_product(const SpectralVectorField& f, const SpectralVectorField& g) {
  if (!(f.grid() == g.grid())) throw ConfigError("inner_product: grid mismatch");
  long double acc = parseval_inner(f[0], g[0]) + parseval_inner(f[1], g[1]) +
                    parseval_inner(f[2], g[2]);
  return static_cast<double>(box_volume(f.grid()) * acc);
}

namespace {

long double weighted_ksq_sq(const SpectralScalarField& f) {
  const ModeTables& mt = f.grid().modes();
  const Complex* c = f.data();
  long double acc = 0.0L;
  const Eigen::Index nm = f.grid().num_modes();
  for (Eigen::Index m = 0; m < nm; ++m)
    acc += static_cast<long double>(mt.weight[m]) * mt.ksq[m] * std::norm(c[m]);
  return acc;
}

}  // namespace

double gradient_sq(const SpectralScalarField& f) {
  return static_cast<double>(box_volume(f.grid()) * weighted_ksq_sq(f));
}

double gradient_sq(const SpectralVectorField& v) {
  long double acc = weighted_ksq_sq(v[0]) + weighted_ksq_sq(v[1]) + weighted_ksq_sq(v[2]);
  return static_cast<double>(box_volume(v.grid()) * acc);
}

}  // namespace mpdns
