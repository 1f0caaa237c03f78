// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_ERRORS_HPP
#define MPDNS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpdns {

/// Invalid configuration: bad grid size, malformed config file, out-of-range
/// parameters. Maps to exit code 1 in the CLI.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// The integration produced NaN/Inf coefficients or the gradient norm grew
/// past the divergence threshold. Carries the time and the offending norm.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(double t, double norm, const std::string& what)
      : std::runtime_error(what), t(t), norm(norm) {}
  double t;
  double norm;
};

}  // namespace mpdns

#endif
