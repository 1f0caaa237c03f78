// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_NORMS_HPP
#define MPDNS_NORMS_HPP

#include <limits>

#include "mpdns/field.hpp"

namespace mpdns {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// L^p norm over the box by rectangle-rule quadrature on the grid points
/// (spectrally exact whenever |f|^p is resolvable); p = inf is the max of
/// |f| over the grid. Requires p >= 1. For vectors |f| is the pointwise
/// Euclidean magnitude.
double lp_norm(const SpectralScalarField& f, double p);
double lp_norm(const SpectralVectorField& v, double p);
double lp_norm(const PhysicalField& f, double p);

/// L^2 norm via Parseval: sqrt((2 pi)^3 sum |coeff|^2). Agrees with
/// lp_norm(f, 2) to quadrature roundoff.
double l2_norm_parseval(const SpectralScalarField& f);
double l2_norm_parseval(const SpectralVectorField& v);

/// L^2 inner product <f, g> via Parseval.
double inner_product(const SpectralScalarField& f, const SpectralScalarField& g);
double inner_product(const SpectralVectorField& f, const SpectralVectorField& g);

/// ||grad f||_{L^2}^2, spectral sum.
double gradient_sq(const SpectralScalarField& f);
double gradient_sq(const SpectralVectorField& v);

}  // namespace mpdns

#endif
