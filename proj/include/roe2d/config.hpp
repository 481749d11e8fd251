#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "roe2d/euler.hpp"
#include "roe2d/roe_flux.hpp"

namespace roe2d {

struct OutputSchedule {
  /// Extra output times before t_end; t_end itself is always written.
  std::vector<double> times;
  bool write_files = true;
  std::filesystem::path dir = ".";
  /// Put wall-clock time into the manifest. Off by default so repeated runs stay byte-identical.
  bool record_timing = false;
};

struct RunConfig {
  double cfl = 0.45;
  /// Negative means "use the test case's final time".
  double t_end = -1.0;
  int order = 1;
  ViscosityModel model;
  GasModel gas;
  std::uint64_t seed = 12345;
  OutputSchedule output;
  /// Abort with a usage error after this many steps (0 = unlimited).
  long max_steps = 0;
  /// Run the single-threaded reference kernels instead of the OpenMP ones.
  bool serial_kernels = false;

  /// Throws std::invalid_argument on 0 < cfl < 1, order in {1,2}, model parameters.
  void validate() const;
};

/// Per-run changes to a test case.
struct CaseOverrides {
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<double> noise;
};

}  // namespace roe2d
