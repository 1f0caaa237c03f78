// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#include "mpdns/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "mpdns/errors.hpp"

namespace mpdns {

namespace {

// fftw planning and destruction are not thread safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::shared_ptr<const ModeTables> build_tables(int n) {
  auto t = std::make_shared<ModeTables>();
  const Eigen::Index nm = static_cast<Eigen::Index>(n / 2 + 1) * n * n;
  t->kd1.resize(nm);
  t->kd2.resize(nm);
  t->kd3.resize(nm);
  t->ksq.resize(nm);
  t->kmag.resize(nm);
  t->weight.resize(nm);

  const int half = n / 2;
  auto signed_k = [&](int i) { return i <= half ? i : i - n; };
  auto deriv_k = [&](int k) { return std::abs(k) == half ? 0 : k; };

  Eigen::Index m = 0;
  for (int i3 = 0; i3 < n; ++i3) {
    const int k3 = signed_k(i3);
    for (int i2 = 0; i2 < n; ++i2) {
      const int k2 = signed_k(i2);
      for (int k1 = 0; k1 <= half; ++k1, ++m) {
        const double d1 = deriv_k(k1), d2 = deriv_k(k2), d3 = deriv_k(k3);
        t->kd1[m] = d1;
        t->kd2[m] = d2;
        t->kd3[m] = d3;
        t->ksq[m] = d1 * d1 + d2 * d2 + d3 * d3;
        t->kmag[m] = std::sqrt(double(k1) * k1 + double(k2) * k2 + double(k3) * k3);
        t->weight[m] = (k1 == 0 || k1 == half) ? 1.0 : 2.0;
      }
    }
  }
  return t;
}

}  // namespace

Eigen::Index Grid::num_points() const {
  return static_cast<Eigen::Index>(n_) * n_ * n_;
}

Eigen::Index Grid::num_modes() const {
  return static_cast<Eigen::Index>(n_ / 2 + 1) * n_ * n_;
}

int Grid::wavenumber(int index) const {
  return index <= n_ / 2 ? index : index - n_;
}

int Grid::index_of(int k) const { return k >= 0 ? k : k + n_; }

Eigen::Index Grid::mode_index(int k1, int k2, int k3) const {
  const Eigen::Index stride1 = n_ / 2 + 1;
  return k1 + stride1 * (index_of(k2) + static_cast<Eigen::Index>(n_) * index_of(k3));
}

Eigen::Index Grid::point_index(int i1, int i2, int i3) const {
  return i1 + static_cast<Eigen::Index>(n_) * (i2 + static_cast<Eigen::Index>(n_) * i3);
}

Grid make_grid(int n) {
  if (n < 8 || !is_power_of_two(n)) {
    throw ConfigError("grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  Grid g;
  g.n_ = n;
  g.box_length_ = 2.0 * std::numbers::pi;
  g.dealias_cutoff_ = n / 3;  // 2/3 rule
  g.tables_ = build_tables(n);
  g.engine_ = std::make_shared<FftEngine>(n);
  return g;
}

FftEngine::FftEngine(int n) : n_(n) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  double* rbuf = fftw_alloc_real(static_cast<std::size_t>(n) * n * n);
  fftw_complex* cbuf = fftw_alloc_complex(static_cast<std::size_t>(n) * n * (n / 2 + 1));
  // FFTW_ESTIMATE keeps planning deterministic run to run.
  plan_r2c_ = fftw_plan_dft_r2c_3d(n, n, n, rbuf, cbuf, FFTW_ESTIMATE);
  plan_c2r_ = fftw_plan_dft_c2r_3d(n, n, n, cbuf, rbuf, FFTW_ESTIMATE);
  fftw_free(rbuf);
  fftw_free(cbuf);
  if (!plan_r2c_ || !plan_c2r_) throw ConfigError("fftw planning failed");
}

FftEngine::~FftEngine() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plan_r2c_) fftw_destroy_plan(static_cast<fftw_plan>(plan_r2c_));
  if (plan_c2r_) fftw_destroy_plan(static_cast<fftw_plan>(plan_c2r_));
}

void FftEngine::forward(const double* in, std::complex<double>* out) const {
  fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_r2c_), const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void FftEngine::backward_destructive(std::complex<double>* in, double* out) const {
  fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_c2r_),
                       reinterpret_cast<fftw_complex*>(in), out);
}

}  // namespace mpdns
