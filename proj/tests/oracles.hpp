#pragma once

#include <cmath>

#include "roe2d/euler.hpp"

namespace roe2d::test {

// Textbook Roe wave decomposition written out independently of the library:
// wave strengths from the classical closed forms, eigenvectors as explicit columns.
struct Oracle {
  double u, v, H, c;
  Vec4 alpha;
  Vec4 r[4];
};

inline Oracle oracle_waves(const ConservedState& ql, const ConservedState& qr, double gamma) {
  const double rl = ql.rho, rr = qr.rho;
  const double ul = ql.mx / rl, ur = qr.mx / rr, vl = ql.my / rl, vr = qr.my / rr;
  const double pl = (gamma - 1) * (ql.E - 0.5 * rl * (ul * ul + vl * vl));
  const double pr = (gamma - 1) * (qr.E - 0.5 * rr * (ur * ur + vr * vr));
  const double hl = (ql.E + pl) / rl, hr = (qr.E + pr) / rr;
  const double wl = std::sqrt(rl), wr = std::sqrt(rr);
  Oracle o;
  o.u = (wl * ul + wr * ur) / (wl + wr);
  o.v = (wl * vl + wr * vr) / (wl + wr);
  o.H = (wl * hl + wr * hr) / (wl + wr);
  const double V2 = o.u * o.u + o.v * o.v;
  o.c = std::sqrt((gamma - 1) * (o.H - 0.5 * V2));
  const double d1 = rr - rl, d2 = qr.mx - ql.mx, d3 = qr.my - ql.my, d5 = qr.E - ql.E;
  const double a3 = d3 - o.v * d1;
  const double d5p = d5 - a3 * o.v;
  const double a2 = (gamma - 1) / (o.c * o.c) * (d1 * (o.H - o.u * o.u) + o.u * d2 - d5p);
  const double a1 = (d1 * (o.u + o.c) - d2 - o.c * a2) / (2 * o.c);
  const double a4 = d1 - (a1 + a2);
  o.alpha = {a1, a2, a3, a4};
  o.r[0] = {1, o.u - o.c, o.v, o.H - o.u * o.c};
  o.r[1] = {1, o.u, o.v, 0.5 * V2};
  o.r[2] = {0, 0, 1, o.v};
  o.r[3] = {1, o.u + o.c, o.v, o.H + o.u * o.c};
  return o;
}

}  // namespace roe2d::test
