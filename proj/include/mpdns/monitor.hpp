// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_MONITOR_HPP
#define MPDNS_MONITOR_HPP

#include <iosfwd>
#include <vector>

#include "mpdns/littlewood_paley.hpp"
#include "mpdns/sim_state.hpp"

namespace mpdns {

/// Per-time diagnostics along a trajectory. All norms are squared L^2 norms
/// unless named otherwise; besov_d3u is || d3 u ||_{B^{-r}_{inf,inf}} and the
/// criterion integrand its 2/(1-r) power. Y = grad_u_sq + grad_omega_sq + e.
///
/// `exchange` and `diss_accum` are budget bookkeeping beyond the CSV schema:
/// exchange is the instantaneous curl-coupling power 2 <curl u, omega> that
/// the dissipation terms balance against, and diss_accum is the running
/// integral of (dissipation - exchange) accumulated by the stepper with its
/// own stage quadrature (NaN for records not produced by a run).
struct MonitorRecord {
  double t = 0.0;
  double energy_u = 0.0;
  double energy_omega = 0.0;
  double grad_u_sq = 0.0;
  double grad_omega_sq = 0.0;
  double d3u_sq = 0.0;
  double grad_d3u_sq = 0.0;
  double laplacian_u_sq = 0.0;
  double div_omega_sq = 0.0;
  double besov_d3u = 0.0;
  double criterion_integrand = 0.0;
  double criterion_accum = 0.0;
  double Y = 0.0;
  double exchange = 0.0;
  double diss_accum = std::numeric_limits<double>::quiet_NaN();
};

/// Smoothness-independent part of the Besov evaluation: per-component,
/// per-scale block sup norms of d3 u. Sweeping the criterion exponent r
/// reuses these and only re-weights by 2^{-jr}.
struct BlockSups {
  int j_min = 0;
  Eigen::ArrayXXd sup;  // (component, scale)
};

/// || d3u ||_{B^{-r}_{inf,inf}} (l^2 over components) from stored block sups.
double besov_from_block_sups(const BlockSups& sups, double r);

/// Computes every instantaneous field of the record from the state.
/// criterion_accum is left at zero for the accumulator. Throws BlowUpError
/// on non-finite state. 0 < r < 1.
MonitorRecord snapshot(const SimState& state, double r, const DyadicPartition& partition,
                       BlockSups* block_sups = nullptr);
MonitorRecord snapshot(const SimState& state, double r);

/// Trapezoidal time integration of criterion_integrand into criterion_accum.
/// Records must be sorted by t; exact for integrands linear in t.
void accumulate(std::vector<MonitorRecord>& records);

/// Energy-budget residuals between consecutive records:
///   residual_i = Delta(energy_u + energy_omega) + integral of
///                (grad_u_sq + grad_omega_sq + 4 energy_omega + div_omega_sq
///                 - exchange) dt.
/// The integral uses the stepper's accumulated stage quadrature when the
/// records carry it (4th order in dt), and falls back to the trapezoid rule
/// on the instantaneous record fields otherwise. max_rel_residual is
/// relative to the initial total energy.
struct EnergyBudgetReport {
  std::vector<double> t;         // right endpoint of each interval
  std::vector<double> residual;  // signed residual over the interval
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  bool from_accumulators = false;
};
EnergyBudgetReport energy_budget_report(const std::vector<MonitorRecord>& records, double dt);

/// Raw ingredients of the log-Gronwall bound: ln Y(T), sup of the gradient
/// energies, the trapezoidal integral of grad_u_sq * Y, and the criterion
/// integral. Asserts only finiteness and monotonicity.
struct GronwallReport {
  double ln_Y_final = 0.0;
  double sup_grad = 0.0;
  double integral_gradu_Y = 0.0;
  double criterion_integral = 0.0;
  bool all_finite = false;
  bool accum_monotone = false;
};
GronwallReport gronwall_report(const std::vector<MonitorRecord>& records);

/// Time-series CSV, one row per record, 17 significant digits:
/// t,energy_u,energy_omega,grad_u_sq,grad_omega_sq,d3u_sq,grad_d3u_sq,
/// laplacian_u_sq,div_omega_sq,besov_d3u,criterion_integrand,criterion_accum,lnY
void write_monitor_csv(std::ostream& os, const std::vector<MonitorRecord>& records);

}  // namespace mpdns

#endif
