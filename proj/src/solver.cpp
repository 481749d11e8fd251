#include "roe2d/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "roe2d/output.hpp"

namespace roe2d {

void RunConfig::validate() const {
  if (!(cfl > 0.0 && cfl < 1.0)) throw std::invalid_argument("cfl must lie in (0, 1)");
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  if (std::isnan(t_end)) throw std::invalid_argument("t_end must be a number");
  if (max_steps < 0) throw std::invalid_argument("max_steps must be >= 0");
  if (!(gas.gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
  for (double t : output.times)
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("output times must be >= 0");
  model.validate();
}

Stepper::Stepper(BoundarySpec bc, SchemeSettings scheme, bool serial_kernels)
    : bc_(std::move(bc)), scheme_(scheme), serial_(serial_kernels) {
  bc_.validate();
  scheme_.model.validate();
}

double Stepper::stable_dt(const Field2D& q, double cfl) const {
  return compute_dt(q, cfl, scheme_.gas);
}

void Stepper::divergence(const Field2D& q, std::vector<ConservedState>& rhs) {
  rhs.resize(static_cast<std::size_t>(q.nx()) * q.ny());
  if (serial_)
    kernels::serial::flux_divergence(q, scheme_, rhs, &stats_);
  else
    kernels::flux_divergence(q, scheme_, rhs, &stats_);
}

void Stepper::check(const Field2D& q, long step_index, int stage, double t) const {
  const auto [i, j] = serial_ ? kernels::serial::first_invalid_cell(q, scheme_.gas)
                              : kernels::first_invalid_cell(q, scheme_.gas);
  if (i < 0) return;
  CellLocation loc;
  loc.i = i;
  loc.j = j;
  loc.step = step_index;
  loc.stage = stage;
  loc.time = t;
  throw NonphysicalStateError("nonphysical updated state", loc);
}

void Stepper::step(Field2D& q, double t, double dt, long step_index) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive");
  auto located = [&](const NonphysicalStateError& e, int stage, double stage_t) {
    CellLocation loc = e.location();
    loc.step = step_index;
    loc.stage = stage;
    loc.time = stage_t;
    return NonphysicalStateError(e.reason(), loc);
  };

  if (stage_.nx() != q.nx() || stage_.ny() != q.ny()) {
    stage_ = q;
    next_ = q;
  }
  const bool two_stage = scheme_.order >= 2;
  Field2D& first = two_stage ? stage_ : next_;

  apply_boundaries(q, bc_, scheme_.gas, t);
  try {
    divergence(q, rhs_);
  } catch (const NonphysicalStateError& e) {
    throw located(e, 1, t);
  }
  if (serial_)
    kernels::serial::euler_update(q, rhs_, dt, first);
  else
    kernels::euler_update(q, rhs_, dt, first);
  check(first, step_index, 1, t);

  if (two_stage) {
    apply_boundaries(stage_, bc_, scheme_.gas, t + dt);
    try {
      divergence(stage_, rhs_);
    } catch (const NonphysicalStateError& e) {
      throw located(e, 2, t + dt);
    }
    if (serial_)
      kernels::serial::ssp2_combine(q, stage_, rhs_, dt, next_);
    else
      kernels::ssp2_combine(q, stage_, rhs_, dt, next_);
    check(next_, step_index, 2, t + dt);
  }

  std::swap(q, next_);
  apply_boundaries(q, bc_, scheme_.gas, t + dt);
}

std::string_view to_string(RunStatus s) {
  return s == RunStatus::completed ? "completed" : "aborted";
}

double effective_t_end(const RunConfig& config, const TestCase& tc) {
  return config.t_end >= 0.0 ? config.t_end : tc.t_end;
}

RunOutcome run(const RunConfig& config, const TestCase& tc, const StepObserver& observer) {
  config.validate();
  if (tc.required_order != 0 && config.order != tc.required_order)
    throw std::invalid_argument("case '" + tc.name + "' requires order " +
                                std::to_string(tc.required_order));
  const double t_end = effective_t_end(config, tc);
  const auto start = std::chrono::steady_clock::now();

  SchemeSettings scheme{config.model, config.gas, config.order};
  Stepper stepper(tc.bc, scheme, config.serial_kernels);

  RunOutcome out;
  out.field = initial_field(tc, config.gas, config.seed);

  std::vector<double> stops;
  for (double t : config.output.times)
    if (t > 0.0 && t < t_end) stops.push_back(t);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  stops.push_back(t_end);

  auto emit = [&](double t) {
    if (!config.output.write_files) return;
    for (auto& p : write_snapshot(out.field, config, tc, t)) out.files.push_back(std::move(p));
  };

  double t = 0.0;
  std::size_t next_stop = 0;
  try {
    while (t < t_end) {
      const double target = stops[next_stop];
      double dt = stepper.stable_dt(out.field, config.cfl);
      bool hits = false;
      if (t + dt >= target) {
        dt = target - t;
        hits = true;
      }
      if (config.max_steps > 0 && out.steps >= config.max_steps)
        throw std::runtime_error("step limit of " + std::to_string(config.max_steps) +
                                 " reached at t=" + std::to_string(t));
      stepper.step(out.field, t, dt, out.steps);
      ++out.steps;
      t = hits ? target : t + dt;
      if (observer) observer(out.field, t, out.steps);
      if (hits) {
        if (next_stop + 1 < stops.size()) emit(t);
        ++next_stop;
      }
    }
  } catch (const NonphysicalStateError& e) {
    out.status = RunStatus::aborted;
    out.diagnostic = e.what();
    out.abort_location = e.location();
    if (out.abort_location.step < 0) out.abort_location.step = out.steps;
    if (std::isnan(out.abort_location.time)) out.abort_location.time = t;
  }
  out.t_reached = t;
  emit(t);
  out.reconstruction_fallbacks = stepper.reconstruction_fallbacks();
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (config.output.write_files) out.files.push_back(write_manifest(config, tc, out));
  return out;
}

}  // namespace roe2d
