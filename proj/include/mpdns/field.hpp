// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_FIELD_HPP
#define MPDNS_FIELD_HPP

#include <array>
#include <complex>

#include "mpdns/aligned_buffer.hpp"
#include "mpdns/grid.hpp"

namespace mpdns {

using Complex = std::complex<double>;

/// Real scalar samples over the grid, x1-fastest ordering.
class PhysicalField {
 public:
  explicit PhysicalField(const Grid& grid)
      : grid_(grid), data_(static_cast<std::size_t>(grid.num_points())) {}

  const Grid& grid() const { return grid_; }

  Eigen::Map<Eigen::ArrayXd> values() {
    return {data_.data(), static_cast<Eigen::Index>(data_.size())};
  }
  Eigen::Map<const Eigen::ArrayXd> values() const {
    return {data_.data(), static_cast<Eigen::Index>(data_.size())};
  }

  double& at(int i1, int i2, int i3) { return data_.data()[grid_.point_index(i1, i2, i3)]; }
  double at(int i1, int i2, int i3) const { return data_.data()[grid_.point_index(i1, i2, i3)]; }

 private:
  Grid grid_;
  AlignedBuffer<double> data_;
};

/// Fourier coefficients of a real scalar field in r2c half-lattice storage.
///
/// Logically the coefficients live on the full lattice k in {-n/2+1..n/2}^3
/// with Hermitian symmetry coeff(-k) = conj(coeff(k)); only the k1 >= 0 half
/// is stored and the realness of the physical field is structural. The k=0
/// coefficient equals the mean of the physical samples.
class SpectralScalarField {
 public:
  explicit SpectralScalarField(const Grid& grid)
      : grid_(grid), data_(static_cast<std::size_t>(grid.num_modes())) {}

  const Grid& grid() const { return grid_; }

  Eigen::Map<Eigen::ArrayXcd> coeffs() {
    return {data_.data(), static_cast<Eigen::Index>(data_.size())};
  }
  Eigen::Map<const Eigen::ArrayXcd> coeffs() const {
    return {data_.data(), static_cast<Eigen::Index>(data_.size())};
  }

  /// Coefficient at a logical lattice mode, any sign of k1.
  Complex coeff(int k1, int k2, int k3) const;

  /// Sets the coefficient at a logical mode. For k1 = 0 (and Nyquist-plane)
  /// modes the Hermitian mirror inside the stored plane is updated too, so
  /// the field stays real-valued.
  void set_coeff(int k1, int k2, int k3, Complex value);

  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }

 private:
  Grid grid_;
  AlignedBuffer<Complex> data_;
};

/// Three scalar components on one shared grid.
class SpectralVectorField {
 public:
  explicit SpectralVectorField(const Grid& grid)
      : comps_{SpectralScalarField(grid), SpectralScalarField(grid), SpectralScalarField(grid)} {}

  const Grid& grid() const { return comps_[0].grid(); }

  SpectralScalarField& operator[](int i) { return comps_[i]; }
  const SpectralScalarField& operator[](int i) const { return comps_[i]; }

 private:
  std::array<SpectralScalarField, 3> comps_;
};

/// Forward transform; k=0 coefficient = mean of samples.
SpectralScalarField to_spectral(const PhysicalField& samples);
/// Inverse transform (plain Fourier sum; exact inverse of to_spectral).
PhysicalField to_physical(const SpectralScalarField& f);
PhysicalField to_physical(const SpectralScalarField& f, const Grid& grid);

/// Builds a field by sampling fn(x1, x2, x3) at the grid points.
PhysicalField sample_function(const Grid& grid, double (*fn)(double, double, double));

/// Max |coeff(-k) - conj(coeff(k))| over the stored self-mirror planes,
/// relative to max |coeff|. Zero for any field that came from real samples.
double hermitian_defect(const SpectralScalarField& f);

/// Largest |k . coeff(k)| / largest |coeff|; small iff the field is
/// discretely divergence free.
double solenoidal_defect(const SpectralVectorField& v);

}  // namespace mpdns

#endif
