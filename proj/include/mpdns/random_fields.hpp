// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_RANDOM_FIELDS_HPP
#define MPDNS_RANDOM_FIELDS_HPP

#include <cstdint>

#include "mpdns/field.hpp"

namespace mpdns {

/// Mean-free Hermitian random field with coefficient magnitude |k|^slope and
/// seeded phases, supported on 1 <= |k| <= kmax with every |k_i| <= kmax.
///
/// slope = -inf selects the single-shell convention: all energy on the
/// outermost shell kmax-1 < |k| <= kmax, unit magnitudes.
///
/// The draw order walks the logical lattice, not the storage, so one seed
/// produces the same continuum field on every grid that can hold it.
/// Requires kmax <= dealias cutoff.
SpectralScalarField random_bandlimited_field(const Grid& grid, std::uint64_t seed,
                                             double slope, int kmax);

}  // namespace mpdns

#endif
