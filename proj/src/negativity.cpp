#include "sge/negativity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sge {

std::string to_string(NegativityMethod m) {
  switch (m) {
    case NegativityMethod::generic: return "generic";
    case NegativityMethod::closed_form_pumpless: return "closed_form_pumpless";
    case NegativityMethod::cubic_pumped: return "cubic_pumped";
  }
  return "unknown";
}

namespace {

NegativityResult collect(const std::vector<double>& spectrum, NegativityMethod method) {
  NegativityResult r;
  r.method = method;
  double sum = 0.0;
  for (double lam : spectrum) {
    if (lam < kNegativeEigenvalueThreshold) {
      r.negative_eigenvalues.push_back(lam);
      sum += lam;
    }
  }
  r.value = 0.0 - sum;  // 0.0 - 0.0 keeps the sign bit positive
  return r;
}

// Real roots of x^3 + c2 x^2 + c1 x + c0 when all three are real (the
// input is a characteristic polynomial of a Hermitian 3x3 block).
// Trigonometric form plus one Newton polish per root. max_imag reports
// the imaginary part of a complex pair if the discriminant turns out
// positive (possible only through corrupted coefficients or rounding).
std::array<double, 3> real_cubic_roots(double c2, double c1, double c0,
                                       double* max_imag) {
  *max_imag = 0.0;
  const double shift = c2 / 3.0;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;

  std::array<double, 3> roots{};
  const double disc = q * q / 4.0 + p * p * p / 27.0;  // > 0 => complex pair
  // rounding floor of the discriminant: near a multiple root the two
  // terms cancel and the residue is O(eps) of their magnitude, which
  // would fake a complex pair with |Im| ~ sqrt(eps) * root scale
  const double disc_floor = 8.0 * std::numeric_limits<double>::epsilon() *
                            (q * q / 4.0 + std::abs(p * p * p) / 27.0);

  if (p >= 0.0 || disc > disc_floor) {
    if (disc > disc_floor) {
      // Cardano branch; measures how far from the all-real case we are
      const double sq = std::sqrt(disc);
      const double u = std::cbrt(-q / 2.0 + sq);
      const double v = std::cbrt(-q / 2.0 - sq);
      *max_imag = std::sqrt(3.0) / 2.0 * std::abs(u - v);
      roots = {u + v - shift, -(u + v) / 2.0 - shift, -(u + v) / 2.0 - shift};
    } else {
      // p ~ 0 and disc ~ 0: (near-)triple root
      const double u = std::cbrt(-q);
      roots = {u - shift, u - shift, u - shift};
    }
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (p * m);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots[k] = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift;
  }

  // Newton polish on the monic cubic; keep a step only if it reduces |f|
  auto eval = [&](double x) { return ((x + c2) * x + c1) * x + c0; };
  for (double& x : roots) {
    for (int it = 0; it < 2; ++it) {
      const double f = eval(x);
      const double df = (3.0 * x + 2.0 * c2) * x + c1;
      if (std::abs(df) < 1e-300) break;
      const double xn = x - f / df;
      if (std::abs(eval(xn)) <= std::abs(f)) x = xn; else break;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

NegativityResult negativity_generic(const ComplexMatrix& rho) {
  if (rho.dim() != 9)
    throw std::invalid_argument("negativity_generic: expected a 9x9 density matrix");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-8) {
    std::ostringstream os;
    os << "negativity_generic: trace " << tr << " deviates from 1 beyond 1e-8";
    throw std::invalid_argument(os.str());
  }
  const ComplexMatrix pt = partial_transpose_A(rho);
  const std::vector<double> ev = hermitian_eigenvalues(pt);
  return collect(ev, NegativityMethod::generic);
}

std::array<double, 9> pt_eigenvalues_pumpless(const ReducedState& s) {
  for (int i : {0, 3, 4}) {
    if (std::abs(s.pop[i]) > 1e-10) {
      std::ostringstream os;
      os << "pt_eigenvalues_pumpless: population " << i + 1 << " = " << s.pop[i]
         << " is nonzero; the closed form needs the unpumped support";
      throw std::invalid_argument(os.str());
    }
  }
  const double p9 = s.pop[8];
  const double c = std::norm(s.rho37) + std::norm(s.rho68);
  const double root = std::sqrt(p9 * p9 + 4.0 * c);
  return {0.0,      0.0,      s.pop[1], s.pop[2],          s.pop[5],
          s.pop[6], s.pop[7], 0.5 * (p9 + root), 0.5 * (p9 - root)};
}

std::array<double, 9> pt_eigenvalues_pumped(const ReducedState& s) {
  // Under partial transposition the two exchange coherences move to the
  // (gg,ee) and (gg,mumu) slots, so the spectrum splits into six bare
  // populations and a 3x3 Hermitian block over {ee, mumu, gg}:
  //   [ rho11   0     rho37* ]
  //   [ 0     rho55   rho68* ]
  //   [ rho37 rho68   rho99  ]
  const double a = s.pop[0], b = s.pop[4], c = s.pop[8];
  const double u = std::norm(s.rho37), v = std::norm(s.rho68);

  const double c2 = -(a + b + c);
  const double c1 = a * b + a * c + b * c - u - v;
  const double c0 = -(a * b * c - u * b - v * a);

  double max_imag = 0.0;
  const std::array<double, 3> roots = real_cubic_roots(c2, c1, c0, &max_imag);
  if (max_imag > 1e-10) {
    std::ostringstream os;
    os << "pt_eigenvalues_pumped: cubic produced a complex pair with |Im| = "
       << max_imag << "; input state is not a valid Hermitian block";
    throw std::runtime_error(os.str());
  }
  return {s.pop[1], s.pop[2], s.pop[3], s.pop[5], s.pop[6], s.pop[7],
          roots[0], roots[1], roots[2]};
}

NegativityResult negativity_of_state(const ReducedState& s) {
  const auto ev = pt_eigenvalues_pumped(s);
  return collect(std::vector<double>(ev.begin(), ev.end()),
                 NegativityMethod::cubic_pumped);
}

NegativityResult negativity_of_state_pumpless(const ReducedState& s) {
  const auto ev = pt_eigenvalues_pumpless(s);
  return collect(std::vector<double>(ev.begin(), ev.end()),
                 NegativityMethod::closed_form_pumpless);
}

}  // namespace sge
