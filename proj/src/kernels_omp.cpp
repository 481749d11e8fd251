// OpenMP kernels. Rows (x sweep) and face rows (y sweep) are independent and
// are distributed statically; the x divergence is fused into the row pass so
// x fluxes never leave a per-thread buffer.

#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernel_common.hpp"

namespace roe2d {

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace kernels {

namespace {

// First failure in row-major order wins, whichever thread saw it first.
class FirstError {
 public:
  void record(const NonphysicalStateError& e, long key) {
#pragma omp critical(roe2d_first_error)
    {
      if (!err_ || key < key_) {
        err_ = e;
        key_ = key;
      }
    }
  }
  void rethrow() const {
    if (err_) throw *err_;
  }

 private:
  std::optional<NonphysicalStateError> err_;
  long key_ = 0;
};

}  // namespace

using detail::face_value;

void flux_divergence(const Field2D& q, const SchemeSettings& s, std::span<ConservedState> rhs,
                     KernelStats* stats) {
  const int nx = q.nx(), ny = q.ny();
  const bool one_d = q.is_1d();
  const GasModel& gas = s.gas;
  const std::size_t stride = q.row_stride();
  const auto cells = q.raw();

  std::vector<PrimitiveState> w(cells.size());
  const PrimitiveState zero{0.0, 0.0, 0.0, 0.0};
  std::vector<PrimitiveState> sx(cells.size(), zero), sy;
  std::vector<FluxVector> gy;
  if (!one_d) {
    sy.assign(cells.size(), zero);
    gy.resize(static_cast<std::size_t>(nx) * (ny + 1));
  }
  long fallbacks = 0;
  FirstError error;

  const int rows = static_cast<int>(q.total_rows());
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (int r = 0; r < rows; ++r)
      for (std::size_t k = r * stride; k < (r + 1) * stride; ++k)
        w[k] = cons_to_prim_unchecked(cells[k], gas);

    if (s.order >= 2) {
#pragma omp for schedule(static) reduction(+ : fallbacks) nowait
      for (int j = 0; j < ny; ++j)
        for (int i = -1; i <= nx; ++i) {
          const std::size_t k = q.index(i, j);
          bool fb = false;
          sx[k] = limited_slope(w[k - 1], w[k], w[k + 1], &fb);
          fallbacks += fb;
        }
      if (!one_d) {
#pragma omp for schedule(static) reduction(+ : fallbacks)
        for (int j = -1; j <= ny; ++j)
          for (int i = 0; i < nx; ++i) {
            const std::size_t k = q.index(i, j);
            bool fb = false;
            sy[k] = limited_slope(w[k - stride], w[k], w[k + stride], &fb);
            fallbacks += fb;
          }
      }
    }
#pragma omp barrier

    // x sweep fused with its divergence
    std::vector<FluxVector> row_flux(static_cast<std::size_t>(nx + 1));
#pragma omp for schedule(static)
    for (int j = 0; j < ny; ++j) {
      bool ok = true;
      for (int f = 0; f <= nx && ok; ++f) {
        const std::size_t a = q.index(f - 1, j), b = a + 1;
        try {
          row_flux[f] = detail::flux_x(face_value(cells[a], w[a], sx[a], 0.5, gas),
                                       face_value(cells[b], w[b], sx[b], -0.5, gas), s);
        } catch (const NonphysicalStateError& e) {
          CellLocation loc;
          loc.i = f;
          loc.j = j;
          error.record(NonphysicalStateError(e.reason() + " (x-face below/left of cell)", loc),
                       static_cast<long>(j) * (nx + 1) + f);
          ok = false;
        }
      }
      if (!ok) continue;
      ConservedState* out = rhs.data() + static_cast<std::size_t>(j) * nx;
      for (int i = 0; i < nx; ++i) out[i] = detail::divergence_x(row_flux[i], row_flux[i + 1], q.dx());
    }

    if (!one_d) {
#pragma omp for schedule(static)
      for (int f = 0; f <= ny; ++f)
        for (int i = 0; i < nx; ++i) {
          const std::size_t a = q.index(i, f - 1), b = a + stride;
          try {
            gy[static_cast<std::size_t>(f) * nx + i] =
                detail::flux_y(face_value(cells[a], w[a], sy[a], 0.5, gas),
                               face_value(cells[b], w[b], sy[b], -0.5, gas), s);
          } catch (const NonphysicalStateError& e) {
            CellLocation loc;
            loc.i = i;
            loc.j = f;
            error.record(NonphysicalStateError(e.reason() + " (y-face below/left of cell)", loc),
                         static_cast<long>(ny + 1) * (nx + 1) + static_cast<long>(f) * nx + i);
            break;
          }
        }

#pragma omp for schedule(static)
      for (int j = 0; j < ny; ++j) {
        ConservedState* out = rhs.data() + static_cast<std::size_t>(j) * nx;
        const FluxVector* below = gy.data() + static_cast<std::size_t>(j) * nx;
        const FluxVector* above = below + nx;
        for (int i = 0; i < nx; ++i) detail::subtract_divergence_y(out[i], below[i], above[i], q.dy());
      }
    }
  }

  error.rethrow();
  if (stats) stats->reconstruction_fallbacks += fallbacks;
}

void euler_update(const Field2D& q, std::span<const ConservedState> rhs, double dt, Field2D& out) {
  const int nx = q.nx();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < q.ny(); ++j)
    for (int i = 0; i < nx; ++i)
      out.at(i, j) = detail::euler_cell(q.at(i, j), rhs[static_cast<std::size_t>(j) * nx + i], dt);
}

void ssp2_combine(const Field2D& q0, const Field2D& q1, std::span<const ConservedState> rhs,
                  double dt, Field2D& out) {
  const int nx = q0.nx();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < q0.ny(); ++j)
    for (int i = 0; i < nx; ++i)
      out.at(i, j) = detail::ssp2_cell(q0.at(i, j), q1.at(i, j),
                                       rhs[static_cast<std::size_t>(j) * nx + i], dt);
}

std::pair<int, int> first_invalid_cell(const Field2D& q, const GasModel& gas) {
  const int nx = q.nx(), ny = q.ny();
  long first = static_cast<long>(nx) * ny;
#pragma omp parallel for schedule(static) reduction(min : first)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (!is_physical(q.at(i, j), gas)) {
        first = std::min(first, static_cast<long>(j) * nx + i);
        break;
      }
  if (first == static_cast<long>(nx) * ny) return {-1, -1};
  return {static_cast<int>(first % nx), static_cast<int>(first / nx)};
}

}  // namespace kernels
}  // namespace roe2d
