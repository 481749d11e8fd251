// Reference kernels: whole-field passes, no threading. Kept for testing the
// OpenMP path and as the baseline in the benchmark.

#include <vector>

#include "kernel_common.hpp"

namespace roe2d::kernels::serial {

using detail::face_value;

void flux_divergence(const Field2D& q, const SchemeSettings& s, std::span<ConservedState> rhs,
                     KernelStats* stats) {
  const int nx = q.nx(), ny = q.ny();
  const bool one_d = q.is_1d();
  const GasModel& gas = s.gas;

  // primitives on cells -2..n+1 in both directions
  std::vector<PrimitiveState> w(q.raw().size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = cons_to_prim_unchecked(q.raw()[k], gas);
  auto W = [&](int i, int j) -> const PrimitiveState& { return w[q.index(i, j)]; };

  // limited slopes on cells -1..n
  const PrimitiveState zero{0.0, 0.0, 0.0, 0.0};
  std::vector<PrimitiveState> sx(w.size(), zero), sy(w.size(), zero);
  long fallbacks = 0;
  if (s.order >= 2) {
    for (int j = 0; j < ny; ++j)
      for (int i = -1; i <= nx; ++i) {
        bool fb = false;
        sx[q.index(i, j)] = limited_slope(W(i - 1, j), W(i, j), W(i + 1, j), &fb);
        fallbacks += fb;
      }
    if (!one_d)
      for (int j = -1; j <= ny; ++j)
        for (int i = 0; i < nx; ++i) {
          bool fb = false;
          sy[q.index(i, j)] = limited_slope(W(i, j - 1), W(i, j), W(i, j + 1), &fb);
          fallbacks += fb;
        }
  }

  // face fluxes
  const std::size_t fx_stride = static_cast<std::size_t>(nx + 1);
  std::vector<FluxVector> gx(fx_stride * ny);
  for (int j = 0; j < ny; ++j)
    for (int f = 0; f <= nx; ++f) {
      const std::size_t a = q.index(f - 1, j), b = q.index(f, j);
      const ConservedState ql = face_value(q.raw()[a], w[a], sx[a], 0.5, gas);
      const ConservedState qr = face_value(q.raw()[b], w[b], sx[b], -0.5, gas);
      try {
        gx[j * fx_stride + f] = detail::flux_x(ql, qr, s);
      } catch (const NonphysicalStateError& e) {
        detail::throw_face_error(e, 'x', f, j);
      }
    }

  std::vector<FluxVector> gy;
  if (!one_d) {
    gy.resize(static_cast<std::size_t>(nx) * (ny + 1));
    for (int f = 0; f <= ny; ++f)
      for (int i = 0; i < nx; ++i) {
        const std::size_t a = q.index(i, f - 1), b = q.index(i, f);
        const ConservedState ql = face_value(q.raw()[a], w[a], sy[a], 0.5, gas);
        const ConservedState qr = face_value(q.raw()[b], w[b], sy[b], -0.5, gas);
        try {
          gy[static_cast<std::size_t>(f) * nx + i] = detail::flux_y(ql, qr, s);
        } catch (const NonphysicalStateError& e) {
          detail::throw_face_error(e, 'y', i, f);
        }
      }
  }

  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      ConservedState r =
          detail::divergence_x(gx[j * fx_stride + i], gx[j * fx_stride + i + 1], q.dx());
      if (!one_d)
        detail::subtract_divergence_y(r, gy[static_cast<std::size_t>(j) * nx + i],
                                      gy[static_cast<std::size_t>(j + 1) * nx + i], q.dy());
      rhs[static_cast<std::size_t>(j) * nx + i] = r;
    }

  if (stats) stats->reconstruction_fallbacks += fallbacks;
}

void euler_update(const Field2D& q, std::span<const ConservedState> rhs, double dt, Field2D& out) {
  const int nx = q.nx();
  for (int j = 0; j < q.ny(); ++j)
    for (int i = 0; i < nx; ++i)
      out.at(i, j) = detail::euler_cell(q.at(i, j), rhs[static_cast<std::size_t>(j) * nx + i], dt);
}

void ssp2_combine(const Field2D& q0, const Field2D& q1, std::span<const ConservedState> rhs,
                  double dt, Field2D& out) {
  const int nx = q0.nx();
  for (int j = 0; j < q0.ny(); ++j)
    for (int i = 0; i < nx; ++i)
      out.at(i, j) = detail::ssp2_cell(q0.at(i, j), q1.at(i, j),
                                       rhs[static_cast<std::size_t>(j) * nx + i], dt);
}

std::pair<int, int> first_invalid_cell(const Field2D& q, const GasModel& gas) {
  for (int j = 0; j < q.ny(); ++j)
    for (int i = 0; i < q.nx(); ++i)
      if (!is_physical(q.at(i, j), gas)) return {i, j};
  return {-1, -1};
}

}  // namespace roe2d::kernels::serial
