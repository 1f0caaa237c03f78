// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#include "mpdns/operators.hpp"

#include <cmath>

#include "mpdns/errors.hpp"

namespace mpdns {

namespace {

const Eigen::ArrayXd& deriv_k(const Grid& g, int axis) {
  const ModeTables& mt = g.modes();
  switch (axis) {
    case 1: return mt.kd1;
    case 2: return mt.kd2;
    case 3: return mt.kd3;
    default: throw ConfigError("derivative axis must be 1, 2 or 3");
  }
}

void require_shared_grid(const SpectralVectorField& v) {
  if (!(v[0].grid() == v[1].grid() && v[1].grid() == v[2].grid()))
    throw ConfigError("vector field components must share one grid");
}

}  // namespace

SpectralScalarField partial_derivative(const SpectralScalarField& f, int axis) {
  const Eigen::ArrayXd& k = deriv_k(f.grid(), axis);
  SpectralScalarField out(f.grid());
  out.coeffs() = Complex(0.0, 1.0) * (f.coeffs() * k);
  return out;
}

SpectralVectorField partial_derivative(const SpectralVectorField& v, int axis) {
  SpectralVectorField out(v.grid());
  for (int c = 0; c < 3; ++c) out[c] = partial_derivative(v[c], axis);
  return out;
}

SpectralVectorField curl(const SpectralVectorField& v) {
  require_shared_grid(v);
  const Grid& g = v.grid();
  const ModeTables& mt = g.modes();
  SpectralVectorField out(g);
  const Complex I(0.0, 1.0);
  out[0].coeffs() = I * (mt.kd2 * v[2].coeffs() - mt.kd3 * v[1].coeffs());
  out[1].coeffs() = I * (mt.kd3 * v[0].coeffs() - mt.kd1 * v[2].coeffs());
  out[2].coeffs() = I * (mt.kd1 * v[1].coeffs() - mt.kd2 * v[0].coeffs());
  return out;
}

SpectralScalarField divergence(const SpectralVectorField& v) {
  require_shared_grid(v);
  const ModeTables& mt = v.grid().modes();
  SpectralScalarField out(v.grid());
  out.coeffs() = Complex(0.0, 1.0) * (mt.kd1 * v[0].coeffs() + mt.kd2 * v[1].coeffs() +
                                      mt.kd3 * v[2].coeffs());
  return out;
}

SpectralScalarField laplacian(const SpectralScalarField& f) {
  SpectralScalarField out(f.grid());
  out.coeffs() = -f.grid().modes().ksq * f.coeffs();
  return out;
}

SpectralVectorField laplacian(const SpectralVectorField& v) {
  SpectralVectorField out(v.grid());
  for (int c = 0; c < 3; ++c) out[c] = laplacian(v[c]);
  return out;
}

SpectralVectorField grad_div(const SpectralVectorField& v) {
  require_shared_grid(v);
  const Grid& g = v.grid();
  const ModeTables& mt = g.modes();
  SpectralVectorField out(g);
  // i k_a * (i k . v) = -k_a (k . v)
  Eigen::ArrayXcd kdotv =
      mt.kd1 * v[0].coeffs() + mt.kd2 * v[1].coeffs() + mt.kd3 * v[2].coeffs();
  out[0].coeffs() = -mt.kd1 * kdotv;
  out[1].coeffs() = -mt.kd2 * kdotv;
  out[2].coeffs() = -mt.kd3 * kdotv;
  return out;
}

SpectralVectorField gradient(const SpectralScalarField& f) {
  const ModeTables& mt = f.grid().modes();
  SpectralVectorField out(f.grid());
  const Complex I(0.0, 1.0);
  out[0].coeffs() = I * mt.kd1 * f.coeffs();
  out[1].coeffs() = I * mt.kd2 * f.coeffs();
  out[2].coeffs() = I * mt.kd3 * f.coeffs();
  return out;
}

void leray_project_in_place(SpectralVectorField& v) {
  require_shared_grid(v);
  const Grid& g = v.grid();
  const ModeTables& mt = g.modes();
  const Eigen::Index nm = g.num_modes();
  Complex* c1 = v[0].data();
  Complex* c2 = v[1].data();
  Complex* c3 = v[2].data();
  for (Eigen::Index m = 0; m < nm; ++m) {
    const double ksq = mt.ksq[m];
    if (ksq == 0.0) continue;
    const Complex kdotv = mt.kd1[m] * c1[m] + mt.kd2[m] * c2[m] + mt.kd3[m] * c3[m];
    const Complex s = kdotv / ksq;
    c1[m] -= mt.kd1[m] * s;
    c2[m] -= mt.kd2[m] * s;
    c3[m] -= mt.kd3[m] * s;
  }
}

SpectralVectorField leray_project(const SpectralVectorField& v) {
  SpectralVectorField out = v;
  leray_project_in_place(out);
  return out;
}

void dealias_in_place(SpectralScalarField& f) {
  const Grid& g = f.grid();
  const int n = g.n(), half = n / 2, cutoff = g.dealias_cutoff();
  Complex* c = f.data();
  Eigen::Index m = 0;
  auto signed_k = [&](int i) { return i <= half ? i : i - n; };
  for (int i3 = 0; i3 < n; ++i3) {
    const bool kill3 = std::abs(signed_k(i3)) > cutoff;
    for (int i2 = 0; i2 < n; ++i2) {
      const bool kill23 = kill3 || std::abs(signed_k(i2)) > cutoff;
      for (int k1 = 0; k1 <= half; ++k1, ++m) {
        if (kill23 || k1 > cutoff) c[m] = Complex(0.0, 0.0);
      }
    }
  }
}

void dealias_in_place(SpectralVectorField& v) {
  for (int c = 0; c < 3; ++c) dealias_in_place(v[c]);
}

SpectralScalarField dealiased(const SpectralScalarField& f) {
  SpectralScalarField out = f;
  dealias_in_place(out);
  return out;
}

}  // namespace mpdns
