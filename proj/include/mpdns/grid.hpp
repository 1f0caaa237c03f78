// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_GRID_HPP
#define MPDNS_GRID_HPP

#include <Eigen/Core>
#include <complex>
#include <memory>

namespace mpdns {

class FftEngine;

/// Per-mode lookup tables over the stored (half) wavenumber lattice.
///
/// Real fields are kept in r2c layout: the x1 axis stores k1 in [0, n/2],
/// the other axes the full signed range {-n/2+1, ..., n/2}. `kd*` are the
/// derivative wavenumbers (Nyquist zeroed so every differential operator
/// maps real fields to real fields); `kmag` uses the true layout wavenumber.
/// `weight` counts how many logical lattice modes a stored entry represents
/// (2 for 0 < k1 < n/2, else 1), which is what Parseval-type sums need.
struct ModeTables {
  Eigen::ArrayXd kd1, kd2, kd3;
  Eigen::ArrayXd ksq;     // kd1^2 + kd2^2 + kd3^2
  Eigen::ArrayXd kmag;    // sqrt(k1^2 + k2^2 + k3^2), true wavenumbers
  Eigen::ArrayXd weight;  // Parseval multiplicity
};

/// Periodic box [0, 2*pi)^3 sampled on n^3 points, n a power of two >= 8.
/// Cheap to copy; copies share the FFT plans and mode tables.
class Grid {
 public:
  int n() const { return n_; }
  double box_length() const { return box_length_; }
  int dealias_cutoff() const { return dealias_cutoff_; }

  Eigen::Index num_points() const;  // n^3
  Eigen::Index num_modes() const;   // (n/2+1) * n^2

  /// Signed wavenumber of a storage index along a full axis: {-n/2+1,...,n/2}.
  int wavenumber(int index) const;
  /// Inverse of wavenumber(); the layout round-trips.
  int index_of(int k) const;

  /// Storage index of mode (k1 >= 0, k2, k3) in the half lattice.
  Eigen::Index mode_index(int k1, int k2, int k3) const;
  /// Physical storage index of the sample (i1, i2, i3), x1 fastest.
  Eigen::Index point_index(int i1, int i2, int i3) const;

  const ModeTables& modes() const { return *tables_; }
  FftEngine& fft() const { return *engine_; }

  friend bool operator==(const Grid& a, const Grid& b) { return a.n_ == b.n_; }

  friend Grid make_grid(int n);

 private:
  Grid() = default;
  int n_ = 0;
  double box_length_ = 0.0;
  int dealias_cutoff_ = 0;
  std::shared_ptr<const ModeTables> tables_;
  std::shared_ptr<FftEngine> engine_;
};

/// Builds the periodic grid. Rejects n < 8 or n not a power of two.
Grid make_grid(int n);

/// FFTW r2c/c2r plan pair for one grid size. Execution through the new-array
/// interface is thread safe on distinct 64-byte-aligned buffers.
class FftEngine {
 public:
  explicit FftEngine(int n);
  ~FftEngine();
  FftEngine(const FftEngine&) = delete;
  FftEngine& operator=(const FftEngine&) = delete;

  /// physical (n^3 doubles) -> unnormalized half-lattice coefficients.
  void forward(const double* in, std::complex<double>* out) const;
  /// half-lattice coefficients -> physical samples. Destroys `in`.
  void backward_destructive(std::complex<double>* in, double* out) const;

 private:
  int n_;
  void* plan_r2c_ = nullptr;
  void* plan_c2r_ = nullptr;
};

}  // namespace mpdns

#endif
