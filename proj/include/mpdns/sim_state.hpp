// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_SIM_STATE_HPP
#define MPDNS_SIM_STATE_HPP

#include "mpdns/field.hpp"

namespace mpdns {

/// Velocity (solenoidal) and micro-rotation fields at time t.
struct SimState {
  SimState(const Grid& grid, double t = 0.0)
      : u(grid), omega(grid), t(t) {}
  SpectralVectorField u;
  SpectralVectorField omega;
  double t;
};

}  // namespace mpdns

#endif
