#pragma once

// Time stepping and the run driver.

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "roe2d/config.hpp"
#include "roe2d/grid.hpp"
#include "roe2d/kernels.hpp"
#include "roe2d/testcases.hpp"

namespace roe2d {

/// One explicit step. Order 1: forward Euler with piecewise-constant faces.
/// Order 2: two-stage SSP Runge-Kutta with MUSCL faces. Boundaries are applied
/// before each stage at that stage's time, and again to the result at t + dt.
class Stepper {
 public:
  Stepper(BoundarySpec bc, SchemeSettings scheme, bool serial_kernels = false);

  [[nodiscard]] double stable_dt(const Field2D& q, double cfl) const;

  /// Advances q (ghosts are refreshed first). Throws NonphysicalStateError with
  /// step, stage, time and cell filled in; q is left untouched in that case.
  void step(Field2D& q, double t, double dt, long step_index);

  [[nodiscard]] long reconstruction_fallbacks() const { return stats_.reconstruction_fallbacks; }
  [[nodiscard]] const SchemeSettings& scheme() const { return scheme_; }
  [[nodiscard]] const BoundarySpec& boundaries() const { return bc_; }

 private:
  void divergence(const Field2D& q, std::vector<ConservedState>& rhs);
  void check(const Field2D& q, long step_index, int stage, double t) const;

  BoundarySpec bc_;
  SchemeSettings scheme_;
  bool serial_;
  KernelStats stats_;
  std::vector<ConservedState> rhs_;
  Field2D stage_;
  Field2D next_;
};

enum class RunStatus { completed, aborted };

[[nodiscard]] std::string_view to_string(RunStatus s);

struct RunOutcome {
  RunStatus status = RunStatus::completed;
  /// Abort message, empty when completed.
  std::string diagnostic;
  /// Where the abort happened (step/stage/time/cell).
  CellLocation abort_location;
  double t_reached = 0.0;
  long steps = 0;
  /// Last admissible field: the t_end field, or the field before the failing step.
  Field2D field;
  std::vector<std::filesystem::path> files;
  long reconstruction_fallbacks = 0;
  double wall_seconds = 0.0;

  [[nodiscard]] bool completed() const { return status == RunStatus::completed; }
};

/// Called after every accepted step with the new field and time.
using StepObserver = std::function<void(const Field2D& q, double t, long step)>;

/// Runs `tc` to t_end (config.t_end if set, else tc.t_end), hitting each
/// output time exactly. Physical failures become an aborted outcome; usage
/// errors (bad config, wrong order for the case, step limit) throw
/// std::invalid_argument / std::runtime_error. Files go through output_io
/// when config.output.write_files is set; the manifest is written in both
/// outcomes.
[[nodiscard]] RunOutcome run(const RunConfig& config, const TestCase& tc,
                             const StepObserver& observer = {});

/// Final time `run` will use.
[[nodiscard]] double effective_t_end(const RunConfig& config, const TestCase& tc);

}  // namespace roe2d
