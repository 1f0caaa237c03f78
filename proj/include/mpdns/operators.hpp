// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_OPERATORS_HPP
#define MPDNS_OPERATORS_HPP

#include "mpdns/field.hpp"

namespace mpdns {

/// d/dx_axis, axis in {1,2,3}: coefficient at k multiplied by i*k_axis.
/// Nyquist modes use a zero derivative wavenumber so real stays real.
SpectralScalarField partial_derivative(const SpectralScalarField& f, int axis);
SpectralVectorField partial_derivative(const SpectralVectorField& v, int axis);

SpectralVectorField curl(const SpectralVectorField& v);
SpectralScalarField divergence(const SpectralVectorField& v);
SpectralScalarField laplacian(const SpectralScalarField& f);
SpectralVectorField laplacian(const SpectralVectorField& v);
/// grad(div(v)) in one symbol application.
SpectralVectorField grad_div(const SpectralVectorField& v);
SpectralVectorField gradient(const SpectralScalarField& f);

/// Orthogonal projection onto divergence-free fields: P = I - k k^T / |k|^2
/// per mode, k = 0 untouched. Idempotent; annihilates gradients.
SpectralVectorField leray_project(const SpectralVectorField& v);
void leray_project_in_place(SpectralVectorField& v);

/// Zeroes every mode with any |k_i| above the grid's dealias cutoff.
void dealias_in_place(SpectralScalarField& f);
void dealias_in_place(SpectralVectorField& v);
SpectralScalarField dealiased(const SpectralScalarField& f);

}  // namespace mpdns

#endif
