#include "roe2d/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "roe2d/testcases.hpp"

namespace roe2d::checks {

double StateSampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

double StateSampler::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

PrimitiveState StateSampler::primitive() {
  PrimitiveState w;
  w.rho = log_uniform(0.1, 10.0);
  w.u = uniform(-3.0, 3.0);
  w.v = uniform(-3.0, 3.0);
  w.p = log_uniform(0.1, 10.0);
  return w;
}

namespace {

CheckResult verdict(std::string name, double measured, double tol, std::string detail = {}) {
  return {std::move(name), measured, tol, measured <= tol, std::move(detail)};
}

double frob(const Mat4& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (double x : row) s += x * x;
  return std::sqrt(s);
}

Vec4 column(const Mat4& a, int k) { return {a[0][k], a[1][k], a[2][k], a[3][k]}; }

// Conserved state whose primitive variables are the Roe mean.
ConservedState roe_mean_state(const RoeAverage& avg, const GasModel& gas) {
  const double q2h = 0.5 * (avg.u * avg.u + avg.v * avg.v);
  const double p = (gas.gamma - 1.0) / gas.gamma * avg.rho * (avg.H - q2h);
  return prim_to_cons({avg.rho, avg.u, avg.v, p}, gas);
}

}  // namespace

CheckResult roe_property(int n, std::uint64_t seed, const GasModel& gas) {
  StateSampler s(seed);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const ConservedState ql = s.conserved(gas), qr = s.conserved(gas);
    const WaveSystem ws = eigensystem(roe_average(ql, qr, gas), gas);
    const Vec4 dq = sub(qr.as_vec(), ql.as_vec());
    const Vec4 alpha = matvec(ws.L, dq);
    Vec4 lin{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) lin[r] += ws.R[r][c] * ws.lambda[c] * alpha[c];
    const FluxVector fl = physical_flux_x(ql, gas), fr = physical_flux_x(qr, gas);
    const double err = norm2(sub(sub(fr, fl), lin)) / (norm2(fr) + norm2(fl));
    worst = std::max(worst, err);
  }
  return verdict("Roe property f(qr)-f(ql) = R Lambda L dq (scaled)", worst, 1e-11);
}

CheckResult left_right_inverse(int n, std::uint64_t seed, const GasModel& gas) {
  StateSampler s(seed);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const WaveSystem ws = eigensystem(roe_average(s.conserved(gas), s.conserved(gas), gas), gas);
    const Mat4 lr = matmul(ws.L, ws.R);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) worst = std::max(worst, std::abs(lr[r][c] - (r == c ? 1.0 : 0.0)));
  }
  return verdict("L R = I", worst, 1e-12);
}

CheckResult right_eigenvectors(int n, std::uint64_t seed, const GasModel& gas) {
  StateSampler s(seed);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const RoeAverage avg = roe_average(s.conserved(gas), s.conserved(gas), gas);
    const WaveSystem ws = eigensystem(avg, gas);
    const Mat4 a = flux_jacobian_x(avg.u, avg.v, avg.H, gas);
    for (int w = 0; w < 4; ++w) {
      const Vec4 r = column(ws.R, w);
      Vec4 lr = r;
      for (double& x : lr) x *= ws.lambda[w];
      worst = std::max(worst, norm2(sub(matvec(a, r), lr)) / (frob(a) * norm2(r)));
    }
  }
  return verdict("A r_k = lambda_k r_k (scaled)", worst, 1e-11);
}

CheckResult jacobian_vs_finite_difference(int n, std::uint64_t seed, const GasModel& gas) {
  StateSampler s(seed);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const RoeAverage avg = roe_average(s.conserved(gas), s.conserved(gas), gas);
    const ConservedState q = roe_mean_state(avg, gas);
    const Mat4 a = flux_jacobian_x(avg.u, avg.v, avg.H, gas);
    Mat4 fd{};
    const Vec4 base = q.as_vec();
    for (int c = 0; c < 4; ++c) {
      const double h = 1e-6 * std::max(1.0, std::abs(base[c]));
      Vec4 plus = base, minus = base;
      plus[c] += h;
      minus[c] -= h;
      const FluxVector fp = physical_flux_x(ConservedState::from_vec(plus), gas);
      const FluxVector fm = physical_flux_x(ConservedState::from_vec(minus), gas);
      for (int r = 0; r < 4; ++r) fd[r][c] = (fp[r] - fm[r]) / (plus[c] - minus[c]);
    }
    double diff = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) diff = std::max(diff, std::abs(a[r][c] - fd[r][c]));
    worst = std::max(worst, diff / frob(a));
  }
  return verdict("Roe-mean Jacobian vs finite differences (relative)", worst, 1e-6);
}

CheckResult consistency(int n, std::uint64_t seed, const GasModel& gas) {
  StateSampler s(seed);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const ConservedState q = s.conserved(gas);
    const FluxVector f = physical_flux_x(q, gas);
    for (WaveModel m : {WaveModel::standard, WaveModel::low_diss, WaveModel::high_diss,
                        WaveModel::blend_geometric, WaveModel::blend_arithmetic}) {
      ViscosityModel vm;
      vm.mode = m;
      const FluxVector g = interface_flux(q, q, vm, gas);
      for (int c = 0; c < 4; ++c)
        worst = std::max(worst, std::abs(g[c] - f[c]) / std::max(1.0, std::abs(f[c])));
    }
  }
  return verdict("interface_flux(q, q) = f(q)", worst, 1e-14);
}

std::vector<CheckResult> mach_scaling(double phi) {
  std::vector<CheckResult> out;
  const double c = 1.0;
  for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double expect = std::pow(0.5, 1.0 - beta);
    double worst_ac = 0.0, worst_adv = 0.0, worst_ratio = 0.0;
    double ratio0 = 0.0;
    for (double m = 1e-3; m >= 1e-6; m *= 0.5) {
      auto speeds = [&](double mach) {
        RoeAverage avg;
        avg.rho = 1.0;
        avg.u = mach * c;
        avg.c = c;
        avg.H = c * c / 0.4 + 0.5 * avg.u * avg.u;
        const Vec4 l = wave_speed_model(avg, WaveModel::blend_geometric, phi, beta);
        return std::pair{0.5 * (l[3] - l[0]), std::abs(l[1])};
      };
      const auto [ac, adv] = speeds(m);
      const auto [ac2, adv2] = speeds(0.5 * m);
      worst_ac = std::max(worst_ac, std::abs(ac2 / ac / expect - 1.0));
      worst_adv = std::max(worst_adv, std::abs(adv2 / adv / expect - 1.0));
      if (ratio0 == 0.0) ratio0 = ac / adv;
      worst_ratio = std::max(worst_ratio, std::abs(ac2 / adv2 / ratio0 - 1.0));
    }
    std::ostringstream tag;
    tag << "beta=" << beta;
    out.push_back(verdict("acoustic viscosity ~ M^(1-beta), " + tag.str(), worst_ac, 0.01));
    out.push_back(verdict("advective viscosity ~ M^(1-beta), " + tag.str(), worst_adv, 0.01));
    out.push_back(verdict("acoustic/advective ratio M-independent, " + tag.str(), worst_ratio, 0.01));
  }
  return out;
}

CheckResult endpoint_reduction(int n, std::uint64_t seed, double phi) {
  StateSampler s(seed);
  const GasModel gas;
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const RoeAverage avg = roe_average(s.conserved(gas), s.conserved(gas), gas);
    const double u = avg.u, c = avg.c, au = std::abs(u);
    const double sg = u < 0.0 ? -1.0 : 1.0;
    const double low = std::min(phi * au, c);
    const Vec4 low_diss = {u - low, u, u, u + low};
    const double adv_high = sg * std::max(c / phi, au);
    const Vec4 high_diss = {u - c, adv_high, adv_high, u + c};
    for (WaveModel m : {WaveModel::blend_geometric, WaveModel::blend_arithmetic}) {
      const Vec4 at0 = wave_speed_model(avg, m, phi, 0.0);
      const Vec4 at1 = wave_speed_model(avg, m, phi, 1.0);
      for (int w = 0; w < 4; ++w) {
        worst = std::max(worst, std::abs(at0[w] - low_diss[w]) / std::max(1.0, std::abs(low_diss[w])));
        worst = std::max(worst, std::abs(at1[w] - high_diss[w]) / std::max(1.0, std::abs(high_diss[w])));
      }
    }
  }
  return verdict("blends at beta=0/1 equal low/high dissipation speeds", worst, 1e-15);
}

std::vector<CheckResult> indicator(int n, std::uint64_t seed, const GasModel& gas) {
  std::vector<CheckResult> out;
  const ViscosityModel blend{WaveModel::blend_geometric};
  StateSampler s(seed);

  double worst_contact = 0.0;
  for (int k = 0; k < 1000; ++k) {
    PrimitiveState l = s.primitive(), r = l;
    r.rho = s.log_uniform(0.1, 10.0);
    r.v = s.uniform(-3.0, 3.0);
    const ConservedState ql = prim_to_cons(l, gas), qr = prim_to_cons(r, gas);
    worst_contact = std::max(worst_contact, face_beta(ql, qr, roe_average(ql, qr, gas), blend, gas));
  }
  out.push_back(verdict("beta on contact/shear jumps", worst_contact, 0.0));

  const PrimitiveState up{1.0, 1.0, 0.0, 1.0 / (gas.gamma * 400.0)};
  const ConservedState ql = prim_to_cons(up, gas);
  const ConservedState qr = prim_to_cons(rankine_hugoniot_downstream(up, 20.0, gas), gas);
  const double b_shock = face_beta(ql, qr, roe_average(ql, qr, gas), blend, gas);
  out.push_back(verdict("1 - beta on the Mach 20 normal shock", 1.0 - b_shock, 0.0));

  double outside = 0.0;
  for (int k = 0; k < n; ++k) {
    const ConservedState a = s.conserved(gas), b = s.conserved(gas);
    const double beta = face_beta(a, b, roe_average(a, b, gas), blend, gas);
    if (!(beta >= 0.0 && beta <= 1.0)) outside = std::max(outside, std::isnan(beta) ? 1.0 : std::abs(beta));
  }
  out.push_back(verdict("beta outside [0, 1] on random pairs", outside, 0.0));
  return out;
}

CheckResult harten(int n, std::uint64_t seed) {
  StateSampler s(seed);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const double delta = s.log_uniform(1e-3, 10.0);
    const double lambda = s.uniform(-3.0 * delta, 3.0 * delta);
    const double h = harten_fix(lambda, delta);
    if (h < 0.5 * delta) worst = std::max(worst, (0.5 * delta - h) / delta);
    if (std::abs(lambda) >= delta) worst = std::max(worst, std::abs(h - std::abs(lambda)));
  }
  // the sonic point itself
  worst = std::max(worst, std::abs(harten_fix(0.0, 0.2) - 0.1));
  return verdict("Harten fix floor delta/2, identity above delta", worst, 0.0);
}

std::vector<CheckResult> all(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(roe_property(1000, seed));
  out.push_back(left_right_inverse(1000, seed + 1));
  out.push_back(right_eigenvectors(1000, seed + 2));
  out.push_back(jacobian_vs_finite_difference(1000, seed + 3));
  out.push_back(consistency(1000, seed + 4));
  for (auto& r : mach_scaling()) out.push_back(std::move(r));
  out.push_back(endpoint_reduction(10000, seed + 5));
  for (auto& r : indicator(100000, seed + 6)) out.push_back(std::move(r));
  out.push_back(harten(100000, seed + 7));
  return out;
}

}  // namespace roe2d::checks
