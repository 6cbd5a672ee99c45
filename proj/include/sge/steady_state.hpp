#ifndef SGE_STEADY_STATE_HPP
#define SGE_STEADY_STATE_HPP

#include <string>

#include "sge/params.hpp"
#include "sge/reduced_state.hpp"

namespace sge {

enum class SteadyRoute { analytic, nullspace, long_time };

std::string to_string(SteadyRoute r);

struct SteadyState {
  ReducedState state;
  double residual = 0.0;  // max-norm of rhs_pumped at the solution
  SteadyRoute route = SteadyRoute::analytic;
  bool zero_pump_limit = false;  // Lambda1 = Lambda2 = 0 handled by convention
};

/// Closed-form steady state of the pumped system. Independent of G1, G2.
/// The normalization constant is the sum of the unnormalized populations,
/// which pins the trace to one exactly. At Lambda1 = Lambda2 = 0 the
/// formulas are 0/0; by convention the exact unpumped steady state (the
/// two-atom ground state) is returned with zero_pump_limit set.
SteadyState steady_analytic(const SystemParams& params);

/// Independent numeric route: null vector of the reduced 13-variable
/// linear generator with one row replaced by the trace constraint, solved
/// by partially pivoted LU. Falls back to long-time integration
/// (t = 200/gamma1) if the solve is ill-conditioned. Rank deficiency
/// beyond the single expected null direction throws std::runtime_error
/// (degenerate parameter point).
SteadyState steady_numeric(const SystemParams& params);

}  // namespace sge

#endif
