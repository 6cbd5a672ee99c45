#include "sge/steady_state.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sge/dynamics.hpp"
#include "sge/generator.hpp"

namespace sge {

std::string to_string(SteadyRoute r) {
  switch (r) {
    case SteadyRoute::analytic: return "analytic";
    case SteadyRoute::nullspace: return "nullspace";
    case SteadyRoute::long_time: return "long_time";
  }
  return "unknown";
}

namespace {

double rhs_max_norm(const ReducedState& s, const SystemParams& p) {
  const auto d = rhs_pumped(s, p).to_flat();
  double m = 0.0;
  for (double v : d) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

SteadyState steady_analytic(const SystemParams& p) {
  p.validate();
  SteadyState out;
  out.route = SteadyRoute::analytic;

  if (p.Lambda1 + p.Lambda2 == 0.0) {
    out.state = ReducedState::ground();
    out.zero_pump_limit = true;
    out.residual = rhs_max_norm(out.state, p);
    return out;
  }

  const double g1 = p.gamma1, g2 = p.gamma2();
  const double Gm1 = p.Gamma1, Gm2 = p.Gamma2();
  const double L1 = p.Lambda1, L2 = p.Lambda2;
  const double s1 = p.s1(), s2 = p.s2();
  const double Lsum = L1 + L2;

  const double beta1 = (s1 * g1 * g1 + Gm1 * Gm1 * (L1 - g1)) / (2.0 * s1 * g1 * Lsum);
  const double beta2 = (s2 * g2 * g2 + Gm2 * Gm2 * (L2 - g2)) / (2.0 * s2 * g2 * Lsum);
  const double a1 = L2 * (g1 + 2.0 * beta1 * (g1 + g2));
  const double a2 = L1 * (g2 + 2.0 * beta2 * (g1 + g2));

  // unnormalized elements; the trace fixes the overall constant
  std::array<double, 9> w{};
  w[0] = g2 * L1 * a2;                               // rho11
  w[1] = g1 * g2 * (a1 * L1 + a2 * L2) / (g1 + g2);  // rho22
  w[2] = g1 * g2 * a2;                               // rho33
  w[3] = w[1];                                       // rho44 = rho22
  w[4] = g1 * a1 * L2;                               // rho55
  w[5] = g1 * g2 * a1;                               // rho66
  w[6] = w[2];                                       // rho77 = rho33
  w[7] = w[5];                                       // rho88 = rho66
  w[8] = 2.0 * g1 * g2 * (beta1 * a2 + beta2 * a1);  // rho99
  double b = 0.0;
  for (double v : w) b += v;

  ReducedState s;
  for (int i = 0; i < 9; ++i) s.pop[i] = w[i] / b;
  s.rho37 = Gm1 * g2 * (L1 - g1) * a2 / (s1 * b);
  s.rho68 = g1 * Gm2 * (L2 - g2) * a1 / (s2 * b);

  out.state = s;
  out.residual = rhs_max_norm(s, p);
  return out;
}

namespace {

// Solve the 13x13 real system M x = rhs by LU with partial pivoting.
// Returns false when a pivot falls below `pivot_tol` times the matrix
// scale (caller decides between fallback and a hard error).
bool lu_solve(std::array<std::array<double, 13>, 13> m, std::array<double, 13> rhs,
              std::array<double, 13>* x, double pivot_tol, double* min_pivot_ratio) {
  constexpr int n = 13;
  double scale = 0.0;
  for (const auto& row : m)
    for (double v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return false;
  *min_pivot_ratio = 1.0;

  std::array<int, n> perm{};
  for (int i = 0; i < n; ++i) perm[i] = i;

  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      std::swap(rhs[piv], rhs[col]);
    }
    const double d = m[col][col];
    const double ratio = std::abs(d) / scale;
    *min_pivot_ratio = std::min(*min_pivot_ratio, ratio);
    if (ratio < pivot_tol) return false;
    for (int r = col + 1; r < n; ++r) {
      const double f = m[r][col] / d;
      if (f == 0.0) continue;
      m[r][col] = 0.0;
      for (int c = col + 1; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double acc = rhs[r];
    for (int c = r + 1; c < n; ++c) acc -= m[r][c] * (*x)[c];
    (*x)[r] = acc / m[r][r];
  }
  return true;
}

SteadyState steady_long_time(const SystemParams& p) {
  const double t_end = 200.0 / p.gamma1;
  const Trajectory traj =
      integrate([&p](const ReducedState& s) { return rhs_pumped(s, p); },
                ReducedState::ground(), t_end, 1e-3 / p.gamma1);
  SteadyState out;
  out.state = traj.states.back();
  out.route = SteadyRoute::long_time;
  out.residual = rhs_max_norm(out.state, p);
  return out;
}

}  // namespace

SteadyState steady_numeric(const SystemParams& p) {
  p.validate();

  // columns of the reduced generator in the flat 13-real layout
  std::array<std::array<double, 13>, 13> m{};
  for (int k = 0; k < 13; ++k) {
    std::array<double, 13> unit{};
    unit[k] = 1.0;
    const auto col = rhs_pumped(ReducedState::from_flat(unit), p).to_flat();
    for (int r = 0; r < 13; ++r) m[r][k] = col[r];
  }
  // trace constraint replaces the rho99 row (row 8)
  std::array<double, 13> rhs{};
  for (int c = 0; c < 9; ++c) m[8][c] = 1.0;
  for (int c = 9; c < 13; ++c) m[8][c] = 0.0;
  rhs[8] = 1.0;

  std::array<double, 13> x{};
  double min_pivot = 0.0;
  const bool ok = lu_solve(m, rhs, &x, 1e-10, &min_pivot);
  if (!ok) {
    if (min_pivot < 1e-13) {
      std::ostringstream os;
      os << "steady_numeric: generator rank-deficient beyond the trace direction "
            "(pivot ratio "
         << min_pivot << "); degenerate parameter point";
      throw std::runtime_error(os.str());
    }
    return steady_long_time(p);
  }

  SteadyState out;
  out.state = ReducedState::from_flat(x);
  out.route = SteadyRoute::nullspace;
  out.residual = rhs_max_norm(out.state, p);
  if (out.residual > 1e-9 * p.gamma1) return steady_long_time(p);
  return out;
}

}  // namespace sge
