#pragma once

#include <string>

#include "slabgreen/cli/config.hpp"
#include "slabgreen/cli/csv.hpp"

namespace slabgreen::cli {

enum class SweepKind { position, thickness, frequency };

struct CommandOptions {
  double tol = 1e-8;
  bool oracle = false;
  SweepKind sweep = SweepKind::position;
};

struct CommandResult {
  Table table;
  /// A row failed to evaluate or exceeded its tolerance.
  bool numerical_failure = false;
  /// One-line human-readable summary for stderr.
  std::string summary;
};

/// A, B, C, D, Y and the power balance per (half_length, omega).
CommandResult cmd_coefficients(const RunConfig& config, const CommandOptions& options);

/// Both sides of the Green identity per (half_length, omega, x_A, x_B).
CommandResult cmd_verify_identity(const RunConfig& config, const CommandOptions& options);

/// Γ and Γ_G along the axis selected by `options.sweep`; every other axis
/// must hold a single value.
CommandResult cmd_decay_scan(const RunConfig& config, const CommandOptions& options);

/// Diagnostics along the configured ε path at fixed omega, half_length, x_S.
CommandResult cmd_limit_study(const RunConfig& config, const CommandOptions& options);

/// Free-space tensor components at the configured separations, the
/// coincident imaginary part, and Γ₀ through both routes.
CommandResult cmd_tensor3d(const RunConfig& config, const CommandOptions& options);

}  // namespace slabgreen::cli
