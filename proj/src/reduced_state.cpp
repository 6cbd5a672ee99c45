#include "sge/reduced_state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sge {

ReducedState ReducedState::initial_emu() {
  ReducedState s;
  s.pop[1] = 1.0;
  return s;
}

ReducedState ReducedState::ground() {
  ReducedState s;
  s.pop[8] = 1.0;
  return s;
}

double ReducedState::trace() const {
  double t = 0.0;
  for (double p : pop) t += p;
  return t;
}

void ReducedState::validate() const {
  std::ostringstream os;
  for (int i = 0; i < 9; ++i) {
    if (pop[i] < -1e-8) {
      os << "ReducedState: population " << i + 1 << " is " << pop[i];
      throw std::invalid_argument(os.str());
    }
  }
  if (std::abs(trace() - 1.0) > 1e-9) {
    os << "ReducedState: trace " << trace() << " deviates from 1";
    throw std::invalid_argument(os.str());
  }
  if (std::norm(rho37) > pop[2] * pop[6] + 1e-8) {
    os << "ReducedState: |rho37|^2=" << std::norm(rho37)
       << " violates positivity minor rho33*rho77=" << pop[2] * pop[6];
    throw std::invalid_argument(os.str());
  }
  if (std::norm(rho68) > pop[5] * pop[7] + 1e-8) {
    os << "ReducedState: |rho68|^2=" << std::norm(rho68)
       << " violates positivity minor rho66*rho88=" << pop[5] * pop[7];
    throw std::invalid_argument(os.str());
  }
}

ComplexMatrix ReducedState::to_density_matrix() const {
  ComplexMatrix rho(9);
  for (int i = 0; i < 9; ++i) rho(i, i) = pop[i];
  rho(2, 6) = rho37;
  rho(6, 2) = std::conj(rho37);
  rho(5, 7) = rho68;
  rho(7, 5) = std::conj(rho68);
  return rho;
}

std::array<double, 13> ReducedState::to_flat() const {
  std::array<double, 13> v{};
  for (int i = 0; i < 9; ++i) v[i] = pop[i];
  v[9] = rho37.real();
  v[10] = rho37.imag();
  v[11] = rho68.real();
  v[12] = rho68.imag();
  return v;
}

ReducedState ReducedState::from_flat(const std::array<double, 13>& v) {
  ReducedState s;
  for (int i = 0; i < 9; ++i) s.pop[i] = v[i];
  s.rho37 = {v[9], v[10]};
  s.rho68 = {v[11], v[12]};
  return s;
}

}  // namespace sge
