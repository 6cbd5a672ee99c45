#ifndef SGE_GENERATOR_HPP
#define SGE_GENERATOR_HPP

#include "sge/complex_matrix.hpp"
#include "sge/params.hpp"
#include "sge/reduced_state.hpp"

namespace sge {

/// The full 81x81 generator L of the master equation d rho/dt = L(rho),
/// acting on the row-major vectorization of rho. Assembled once from the
/// coherent dipole-dipole shift, the single-atom decay dissipators, the
/// cross-atom dissipators and (when enabled) the incoherent pump.
/// Annihilates trace and maps Hermitian matrices to Hermitian matrices.
class Liouvillian {
 public:
  Liouvillian(const SystemParams& params, bool pumped);

  /// L(rho) for a 9x9 input.
  ComplexMatrix apply(const ComplexMatrix& rho) const;

  /// The assembled 81x81 superoperator.
  const ComplexMatrix& matrix() const { return op_; }

 private:
  ComplexMatrix op_;
};

/// Generator for the given parameter set. With pumped = false the pump
/// terms are omitted even if Lambda1/Lambda2 are nonzero.
Liouvillian build_generator(const SystemParams& params, bool pumped);

/// Time derivative of the 10 surviving elements of the unpumped system
/// (rho11, rho44, rho55 stay zero). Population derivatives sum to zero.
ReducedState rhs_pumpless(const ReducedState& s, const SystemParams& p);

/// Time derivative of all 13 elements with incoherent pumping. The rho68
/// equation carries the source 2*Gamma2*rho55 (channel-2 cross damping),
/// mirroring 2*Gamma1*rho11 in the rho37 equation; this matches the full
/// generator exactly. Reduces to rhs_pumpless at Lambda1 = Lambda2 = 0.
ReducedState rhs_pumped(const ReducedState& s, const SystemParams& p);

}  // namespace sge

#endif
