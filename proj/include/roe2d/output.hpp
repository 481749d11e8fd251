#pragma once

// Plot-ready text output and the key = value run configuration format.
// Numbers are written with 17 significant digits in the C locale, so the
// files round-trip exactly and identical runs give identical bytes.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roe2d/config.hpp"
#include "roe2d/solver.hpp"
#include "roe2d/testcases.hpp"

namespace roe2d {

/// Locale-independent "%.17g".
[[nodiscard]] std::string format_number(double v);
/// Shortest round-trip form, used in file names (2.5, 30, 0.20000000000000001 -> 0.2).
[[nodiscard]] std::string format_time_tag(double t);

/// One value array per y-slice (row j), all sharing the cell-centre x coordinates.
struct SliceScatter {
  std::string quantity;
  std::string case_name;
  double time = 0.0;
  std::vector<double> x;
  std::vector<std::vector<double>> slices;  // slices[j][i]
};

[[nodiscard]] SliceScatter slice_scatter(const Field2D& field, Quantity q, const GasModel& gas,
                                         std::string case_name, double time);

/// Header "# quantity=<q> case=<name> time=<t>", then one line per x:
/// "x v(j=0) v(j=1) ...". Throws std::runtime_error naming the path on I/O failure.
void write_slice_scatter(const SliceScatter& s, const std::filesystem::path& path);
[[nodiscard]] SliceScatter read_slice_scatter(const std::filesystem::path& path);

/// Legacy ASCII VTK structured points with (nx+1) x (ny+1) points and cell
/// scalars density, pressure, u, v, entropy and rho_v.
void write_field(const Field2D& field, const GasModel& gas, const std::filesystem::path& path,
                 std::string_view title);

/// <case>_<mode>_ord<order>_t<time>
[[nodiscard]] std::string output_stem(const RunConfig& config, const TestCase& tc, double t);

/// Writes the .dat slice scatter (default quantity of the case) and the .vtk
/// field for time t into config.output.dir, creating it if needed.
std::vector<std::filesystem::path> write_snapshot(const Field2D& field, const RunConfig& config,
                                                  const TestCase& tc, double t);

/// JSON manifest <case>_<mode>.manifest holding the config echo and the outcome.
[[nodiscard]] std::string manifest_text(const RunConfig& config, const TestCase& tc,
                                        const RunOutcome& outcome);
std::filesystem::path write_manifest(const RunConfig& config, const TestCase& tc,
                                     const RunOutcome& outcome);

// --- configuration files ----------------------------------------------------

struct ParsedConfig {
  RunConfig run;
  CaseOverrides overrides;
  std::optional<std::string> case_name;
};

/// Flat "key = value" lines; '#' starts a comment; several pairs may share a
/// line separated by commas. Unknown keys and bad values throw
/// std::invalid_argument with the line number.
///
/// Keys: case, mode, order, phi, delta_frac, indicator (on/off), beta_fixed,
/// indicator_scale, gamma, cfl, t_end, seed, nx, ny, noise, outdir,
/// output_times (comma list), write_files, record_timing, max_steps, serial_kernels.
[[nodiscard]] ParsedConfig parse_config(std::string_view text, ParsedConfig defaults = {});
[[nodiscard]] ParsedConfig load_config(const std::filesystem::path& path,
                                       ParsedConfig defaults = {});

}  // namespace roe2d
