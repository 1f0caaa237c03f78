// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#include "mpdns/field.hpp"

#include <cmath>
#include <numbers>

#include "mpdns/errors.hpp"

namespace mpdns {

Complex SpectralScalarField::coeff(int k1, int k2, int k3) const {
  if (k1 >= 0) return data_.data()[grid_.mode_index(k1, k2, k3)];
  return std::conj(data_.data()[grid_.mode_index(-k1, -k2, -k3)]);
}

void SpectralScalarField::set_coeff(int k1, int k2, int k3, Complex value) {
  if (k1 < 0) {
    k1 = -k1;
    k2 = -k2;
    k3 = -k3;
    value = std::conj(value);
  }
  data_.data()[grid_.mode_index(k1, k2, k3)] = value;
  const int half = grid_.n() / 2;
  if ((k1 == 0 || k1 == half) && !(k2 == 0 && k3 == 0)) {
    // mirror partner lives in the same stored plane
    const int m2 = k2 == half ? half : -k2;
    const int m3 = k3 == half ? half : -k3;
    if (!(m2 == k2 && m3 == k3)) {
      data_.data()[grid_.mode_index(k1, m2, m3)] = std::conj(value);
    }
  }
}

SpectralScalarField to_spectral(const PhysicalField& samples) {
  const Grid& g = samples.grid();
  SpectralScalarField out(g);
  g.fft().forward(samples.values().data(), out.data());
  out.coeffs() *= 1.0 / static_cast<double>(g.num_points());
  return out;
}

PhysicalField to_physical(const SpectralScalarField& f) {
  const Grid& g = f.grid();
  PhysicalField out(g);
  // c2r destroys its input; work on a copy
  AlignedBuffer<Complex> scratch(static_cast<std::size_t>(g.num_modes()));
  Eigen::Map<Eigen::ArrayXcd>(scratch.data(), g.num_modes()) = f.coeffs();
  g.fft().backward_destructive(scratch.data(), out.values().data());
  return out;
}

PhysicalField to_physical(const SpectralScalarField& f, const Grid& grid) {
  if (f.grid() == grid) return to_physical(f);
  // spectral refinement: copy the logical modes into the finer lattice.
  // Nyquist planes carry a sign ambiguity under refinement, so the source
  // must be band limited below them (always true for dealiased fields).
  if (grid.n() < f.grid().n()) throw ConfigError("to_physical: target grid is coarser than source");
  SpectralScalarField lifted(grid);
  const Grid& src = f.grid();
  const int half = src.n() / 2;
  for (int k3 = -half + 1; k3 <= half; ++k3) {
    for (int k2 = -half + 1; k2 <= half; ++k2) {
      for (int k1 = 0; k1 <= half; ++k1) {
        const Complex c = f.coeff(k1, k2, k3);
        if (k1 == half || std::abs(k2) == half || std::abs(k3) == half) {
          if (std::abs(c) != 0.0)
            throw ConfigError("spectral refinement requires zero Nyquist content");
          continue;
        }
        lifted.set_coeff(k1, k2, k3, c);
      }
    }
  }
  return to_physical(lifted);
}

PhysicalField sample_function(const Grid& grid, double (*fn)(double, double, double)) {
  PhysicalField out(grid);
  const int n = grid.n();
  const double h = grid.box_length() / n;
  for (int i3 = 0; i3 < n; ++i3)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i1 = 0; i1 < n; ++i1)
        out.at(i1, i2, i3) = fn(i1 * h, i2 * h, i3 * h);
  return out;
}

double hermitian_defect(const SpectralScalarField& f) {
  const Grid& g = f.grid();
  const int n = g.n(), half = n / 2;
  const double scale = f.coeffs().abs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int k1 : {0, half}) {
    for (int k3 = -half + 1; k3 <= half; ++k3) {
      for (int k2 = -half + 1; k2 <= half; ++k2) {
        const int m2 = k2 == half ? half : -k2;
        const int m3 = k3 == half ? half : -k3;
        const Complex a = f.data()[g.mode_index(k1, k2, k3)];
        const Complex b = f.data()[g.mode_index(k1, m2, m3)];
        worst = std::max(worst, std::abs(a - std::conj(b)));
      }
    }
  }
  return worst / scale;
}

double solenoidal_defect(const SpectralVectorField& v) {
  const Grid& g = v.grid();
  const ModeTables& mt = g.modes();
  double scale = 0.0, worst = 0.0;
  for (Eigen::Index m = 0; m < g.num_modes(); ++m) {
    const Complex div = mt.kd1[m] * v[0].data()[m] + mt.kd2[m] * v[1].data()[m] +
                        mt.kd3[m] * v[2].data()[m];
    worst = std::max(worst, std::abs(div));
    for (int c = 0; c < 3; ++c) scale = std::max(scale, std::abs(v[c].data()[m]));
  }
  return scale == 0.0 ? 0.0 : worst / scale;
}

}  // namespace mpdns
