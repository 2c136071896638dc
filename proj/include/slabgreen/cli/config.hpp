#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "slabgreen/dielectric.hpp"
#include "slabgreen/errors.hpp"
#include "slabgreen/vacuum3d.hpp"

namespace slabgreen::cli {

/// Invalid configuration; `what()` starts with the offending field path.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& path, const std::string& message)
      : Error(path + ": " + message), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Unreadable config or unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

enum class UnitSystem { natural, si };
enum class Spacing { linear, log };

const char* to_string(UnitSystem u) noexcept;

/// A scalar, or a {start, stop, count, spacing} sweep expanded to values.
struct Axis {
  std::vector<double> values;
  bool swept = false;

  static Axis single(double v) { return {{v}, false}; }
};

std::vector<double> sweep_values(double start, double stop, int count, Spacing spacing);

struct PhysicalConstants {
  double hbar = 1.0;
  double epsilon0 = 1.0;
  double c = 1.0;

  static PhysicalConstants for_units(UnitSystem u);
};

struct RunConfig {
  UnitSystem units = UnitSystem::natural;
  Axis half_length;
  DielectricModel dielectric;
  Axis omega;
  std::optional<Axis> source;

  double dipole = 1.0;
  double surface = 1.0;
  PhysicalConstants constants;

  double quadrature_tol = 1e-8;
  std::optional<std::string> output_path;

  std::vector<std::pair<double, double>> identity_pairs;  ///< empty: all source pairs
  std::vector<Complex> limit_path;
  std::vector<Vec3> separations;
  Vec3 dipole_direction = Vec3::UnitZ();

  /// Emission parameters at transition frequency `omega0`.
  EmissionParams emission(double omega0) const;
};

/// Parses and validates a config document. `units_override` (from the
/// command line) takes precedence over the document's "units" field and
/// selects the default physical constants.
RunConfig parse_config(const nlohmann::json& doc,
                       std::optional<UnitSystem> units_override = std::nullopt);

/// Reads `path` and parses it. Throws IoError if unreadable, ConfigError on
/// malformed JSON or invalid content.
RunConfig load_config(const std::string& path,
                      std::optional<UnitSystem> units_override = std::nullopt);

}  // namespace slabgreen::cli
