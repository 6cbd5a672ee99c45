#ifndef SGE_REDUCED_STATE_HPP
#define SGE_REDUCED_STATE_HPP

#include <array>
#include <complex>

#include "sge/complex_matrix.hpp"

namespace sge {

/// The 13 density-matrix elements that stay nonzero under the coupled
/// dynamics: the nine populations plus the two ground-excited exchange
/// coherences rho37 = <eg|rho|ge> and rho68 = <mug|rho|gmu> (their
/// conjugates rho73, rho86 are implicit). The unpumped dynamics keeps
/// rho11 = rho44 = rho55 = 0 (10 surviving elements).
struct ReducedState {
  std::array<double, 9> pop{};  // rho11 .. rho99, basis order ee..gg
  std::complex<double> rho37{0.0, 0.0};
  std::complex<double> rho68{0.0, 0.0};

  static ReducedState initial_emu();  // rho22 = 1, the |e mu> start
  static ReducedState ground();       // rho99 = 1

  double trace() const;

  /// State invariants: populations >= -1e-8, trace within 1e-9 of one,
  /// positivity minors |rho37|^2 <= rho33*rho77 + 1e-8 and
  /// |rho68|^2 <= rho66*rho88 + 1e-8. Throws std::invalid_argument.
  void validate() const;

  /// Embeds into the full 9x9 Hermitian density matrix.
  ComplexMatrix to_density_matrix() const;

  /// Flat real layout used by the integrator and linear solvers:
  /// [pop0..pop8, Re rho37, Im rho37, Re rho68, Im rho68].
  std::array<double, 13> to_flat() const;
  static ReducedState from_flat(const std::array<double, 13>& v);
};

}  // namespace sge

#endif
