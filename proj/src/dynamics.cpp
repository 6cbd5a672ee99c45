#include "sge/dynamics.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "sge/generator.hpp"
#include "sge/negativity.hpp"

namespace sge {

namespace {

constexpr double kLocalErrorTol = 1e-9;

using Flat = std::array<double, 13>;

Flat rk4_step(const ReducedRhs& rhs, const Flat& y, double h) {
  auto f = [&](const Flat& v) { return rhs(ReducedState::from_flat(v)).to_flat(); };
  const Flat k1 = f(y);
  Flat tmp;
  for (int i = 0; i < 13; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  const Flat k2 = f(tmp);
  for (int i = 0; i < 13; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  const Flat k3 = f(tmp);
  for (int i = 0; i < 13; ++i) tmp[i] = y[i] + h * k3[i];
  const Flat k4 = f(tmp);
  Flat out;
  for (int i = 0; i < 13; ++i)
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

double max_diff(const Flat& a, const Flat& b) {
  double m = 0.0;
  for (int i = 0; i < 13; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

Trajectory integrate(const ReducedRhs& rhs, const ReducedState& initial, double t_max,
                     double dt) {
  if (!(dt > 0.0) || !(t_max >= dt))
    throw std::invalid_argument("integrate: need dt > 0 and t_max >= dt");

  const double h_min = dt / 64.0;
  Trajectory traj;
  Flat y = initial.to_flat();
  double t = 0.0;

  auto record = [&](double time, const Flat& v) {
    const ReducedState s = ReducedState::from_flat(v);
    traj.times.push_back(time);
    traj.states.push_back(s);
    traj.negativities.push_back(negativity_of_state(s).value);
  };
  record(0.0, y);

  double h = dt;
  while (t < t_max - 1e-12 * t_max) {
    const double step = std::min(h, t_max - t);
    // one full step vs two half steps; the difference over 15 estimates
    // the local error of the half-step result (4th order Richardson)
    const Flat big = rk4_step(rhs, y, step);
    Flat small = rk4_step(rhs, y, 0.5 * step);
    small = rk4_step(rhs, small, 0.5 * step);
    const double err = max_diff(small, big) / 15.0;
    if (err <= kLocalErrorTol) {
      y = small;
      t += step;
      record(t, y);
      if (err < kLocalErrorTol / 100.0 && h < dt) h = std::min(2.0 * h, dt);
    } else {
      h *= 0.5;
      if (h < h_min * (1.0 - 1e-12)) {
        std::ostringstream os;
        os << "integrate: required step below dt/64 at t = " << t
           << " (local error " << err << ")";
        throw std::runtime_error(os.str());
      }
    }
  }
  return traj;
}

Trajectory integrate_system(const SystemParams& params, const ReducedState& initial,
                            double t_max, double dt) {
  params.validate();
  if (params.pumped())
    return integrate([&params](const ReducedState& s) { return rhs_pumped(s, params); },
                     initial, t_max, dt);
  return integrate([&params](const ReducedState& s) { return rhs_pumpless(s, params); },
                   initial, t_max, dt);
}

namespace {

// [g*cosh(2K t) - K*sinh(2K t) - g*e^{-2gt}] / (g^2 - K^2), even in K.
// Removable 0/0 at g = |K|; switch to a second-order expansion in
// eps = g - |K| when the gap is below `gap`.
double hyperbolic_part(double g, double K, double t, double gap) {
  const double Ka = std::abs(K);
  const double lead = std::exp(2.0 * Ka * t) / (2.0 * (g + Ka));
  const double eps = g - Ka;
  if (std::abs(eps) >= gap) {
    const double num = (g + Ka) * std::exp(-2.0 * Ka * t) - 2.0 * g * std::exp(-2.0 * g * t);
    return lead + num / (2.0 * eps * (g + Ka));
  }
  const double poly = (4.0 * g * t - 1.0) + eps * (4.0 * g * t * t - 2.0 * t) +
                      eps * eps * ((8.0 / 3.0) * g * t * t * t - 2.0 * t * t);
  return lead + std::exp(-2.0 * g * t) * poly / (2.0 * (2.0 * g - eps));
}

// [K*e^{-2gt} - K*cosh(2K t) + g*sinh(2K t)] / (K^2 - g^2), odd in K.
double hyperbolic_cross_part(double g, double K, double t, double gap) {
  const double Ka = std::abs(K);
  const double sgn = (K >= 0.0) ? 1.0 : -1.0;
  const double lead = -std::exp(2.0 * Ka * t) / (2.0 * (g + Ka));
  const double eps = g - Ka;
  double rest;
  if (std::abs(eps) >= gap) {
    const double num = 2.0 * Ka * std::exp(-2.0 * g * t) - (g + Ka) * std::exp(-2.0 * Ka * t);
    rest = num / (-2.0 * eps * (g + Ka));
  } else {
    const double poly = (4.0 * g * t + 1.0) + eps * (4.0 * g * t * t - 2.0 * t) +
                        eps * eps * ((8.0 / 3.0) * g * t * t * t - 2.0 * t * t);
    rest = std::exp(-2.0 * g * t) * poly / (2.0 * (2.0 * g - eps));
  }
  return sgn * (lead + rest);
}

// [g*cos(2Gt) + G*sin(2Gt) - g*e^{-2gt}] / (g^2 + G^2)
double oscillatory_part(double g, double G, double t) {
  return (g * std::cos(2.0 * G * t) + G * std::sin(2.0 * G * t) -
          g * std::exp(-2.0 * g * t)) /
         (g * g + G * G);
}

// [g*sin(2Gt) - G*cos(2Gt) + G*e^{-2gt}] / (g^2 + G^2)
double oscillatory_cross_part(double g, double G, double t) {
  return (g * std::sin(2.0 * G * t) - G * std::cos(2.0 * G * t) +
          G * std::exp(-2.0 * g * t)) /
         (g * g + G * G);
}

}  // namespace

ReducedState analytic_pumpless(const SystemParams& p, double t) {
  p.validate();
  if (p.Lambda1 != 0.0 || p.Lambda2 != 0.0)
    throw std::invalid_argument(
        "analytic_pumpless: closed form invalid under pumping (Lambda != 0)");
  if (t < 0.0) throw std::invalid_argument("analytic_pumpless: t must be >= 0");

  const double g1 = p.gamma1, g2 = p.gamma2();
  const double gap = 1e-6 * p.gamma1;

  const double h1 = hyperbolic_part(g2, p.Gamma1, t, gap);
  const double c1 = oscillatory_part(g2, p.G1, t);
  const double hx1 = hyperbolic_cross_part(g2, p.Gamma1, t, gap);
  const double cy1 = oscillatory_cross_part(g2, p.G1, t);

  const double h2 = hyperbolic_part(g1, p.Gamma2(), t, gap);
  const double c2 = oscillatory_part(g1, p.G2(), t);
  const double hx2 = hyperbolic_cross_part(g1, p.Gamma2(), t, gap);
  const double cy2 = oscillatory_cross_part(g1, p.G2(), t);

  const double w1 = 0.5 * g2 * std::exp(-2.0 * g1 * t);
  const double w2 = 0.5 * g1 * std::exp(-2.0 * g2 * t);

  ReducedState s;
  s.pop[1] = std::exp(-2.0 * (g1 + g2) * t);
  s.pop[2] = w1 * (h1 + c1);
  s.pop[6] = w1 * (h1 - c1);
  s.rho37 = std::complex<double>(w1 * hx1, w1 * cy1);
  s.pop[7] = w2 * (h2 + c2);
  s.pop[5] = w2 * (h2 - c2);
  s.rho68 = std::complex<double>(w2 * hx2, -w2 * cy2);
  s.pop[8] = 1.0 - s.pop[1] - s.pop[2] - s.pop[5] - s.pop[6] - s.pop[7];
  return s;
}

double relaxation_time(const SystemParams& p) {
  p.validate();
  const double plus = p.gamma1 + p.Gamma1;
  const double minus = p.gamma1 - p.Gamma1;
  if (plus == 0.0 || minus == 0.0)
    throw std::invalid_argument(
        "relaxation_time: diverges at |Gamma1| = gamma1; supply t_max explicitly");
  return std::max(1.0 / (2.0 * plus), 1.0 / (2.0 * minus));
}

double default_dt(const SystemParams& p) { return 1e-3 / p.gamma1; }

double default_t_max(const SystemParams& p) { return 10.0 * relaxation_time(p); }

}  // namespace sge
