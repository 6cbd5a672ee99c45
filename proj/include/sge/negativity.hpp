#ifndef SGE_NEGATIVITY_HPP
#define SGE_NEGATIVITY_HPP

#include <array>
#include <string>
#include <vector>

#include "sge/complex_matrix.hpp"
#include "sge/reduced_state.hpp"

namespace sge {

enum class NegativityMethod { generic, closed_form_pumpless, cubic_pumped };

std::string to_string(NegativityMethod m);

/// Negativity N = -(sum of negative partial-transpose eigenvalues).
/// Eigenvalues below -1e-12 count as negative; anything closer to zero is
/// solver noise. value is always >= 0 and equals minus the sum of
/// negative_eigenvalues. A nonzero value certifies entanglement; in a
/// 3x3-level system a zero value does not by itself certify
/// separability.
struct NegativityResult {
  double value = 0.0;
  std::vector<double> negative_eigenvalues;
  NegativityMethod method = NegativityMethod::generic;
};

/// Threshold separating genuinely negative eigenvalues from noise.
constexpr double kNegativeEigenvalueThreshold = -1e-12;

/// Generic route: full spectrum of partial_transpose_A(rho). Requires a
/// Hermitian, unit-trace 9x9 input (trace off by more than 1e-8 is
/// rejected with std::invalid_argument).
NegativityResult negativity_generic(const ComplexMatrix& rho);

/// Exact partial-transpose spectrum on the unpumped support
/// (rho11 = rho44 = rho55 = 0; violations beyond 1e-10 are rejected).
/// Returned in the fixed order {0, 0, rho22, rho33, rho66, rho77, rho88,
/// lam_plus, lam_minus} with
/// lam_pm = rho99/2 +- sqrt(rho99^2 + 4(|rho37|^2 + |rho68|^2))/2;
/// only the last entry can be negative.
std::array<double, 9> pt_eigenvalues_pumpless(const ReducedState& s);

/// Partial-transpose spectrum on the full 13-element support. Six
/// eigenvalues are the populations rho22, rho33, rho44, rho66, rho77,
/// rho88 (in that order); the remaining three are the roots of the real
/// cubic coupling rho11, rho55, rho99 through the two coherences,
/// appended in ascending order. A complex root pair with imaginary part
/// beyond 1e-10 signals corrupted input -> std::runtime_error.
std::array<double, 9> pt_eigenvalues_pumped(const ReducedState& s);

/// Negativity of a reduced state via the cubic route (valid on the whole
/// 13-element support, pumped or not).
NegativityResult negativity_of_state(const ReducedState& s);

/// Negativity of a reduced state via the unpumped closed form.
NegativityResult negativity_of_state_pumpless(const ReducedState& s);

}  // namespace sge

#endif
