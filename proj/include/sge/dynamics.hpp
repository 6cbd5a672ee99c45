#ifndef SGE_DYNAMICS_HPP
#define SGE_DYNAMICS_HPP

#include <functional>
#include <vector>

#include "sge/params.hpp"
#include "sge/reduced_state.hpp"

namespace sge {

/// Time-ordered record of an integration run. Times are in units of
/// 1/gamma1, strictly increasing from 0; one state and one negativity
/// per time point.
struct Trajectory {
  std::vector<double> times;
  std::vector<ReducedState> states;
  std::vector<double> negativities;

  std::size_t size() const { return times.size(); }
};

using ReducedRhs = std::function<ReducedState(const ReducedState&)>;

/// Classic fourth-order Runge-Kutta with a step-doubling error estimate.
/// A step is accepted when the estimated local error stays below 1e-9 in
/// max norm, otherwise the step is halved (no further than dt/64; beyond
/// that a std::runtime_error names the time of failure). Every accepted
/// step is recorded. The trace is never renormalized; drift stays visible
/// as an accuracy diagnostic.
Trajectory integrate(const ReducedRhs& rhs, const ReducedState& initial,
                     double t_max, double dt);

/// Convenience: integrate the system given by params, using the pumped
/// right-hand side when any pump rate is nonzero.
Trajectory integrate_system(const SystemParams& params, const ReducedState& initial,
                            double t_max, double dt);

/// Closed-form solution of the unpumped dynamics from rho22 = 1. Valid
/// only for Lambda1 = Lambda2 = 0 (throws std::invalid_argument
/// otherwise). The removable 0/0 points of the hyperbolic terms at
/// gamma2 = |Gamma1| (and the channel-swapped image gamma1 = |Gamma2|)
/// are evaluated by a second-order series when the gap is below
/// 1e-6*gamma1. rho99 closes the trace exactly:
/// 1 - rho22 - rho33 - rho66 - rho77 - rho88.
ReducedState analytic_pumpless(const SystemParams& params, double t);

/// Slowest decay scale of the coupled pair,
/// max{1/(2(gamma1+Gamma1)), 1/(2(gamma1-Gamma1))}. Throws
/// std::invalid_argument when |Gamma1| = gamma1 (diverging relaxation
/// time; the caller must pick t_max itself).
double relaxation_time(const SystemParams& params);

/// Default integration controls: dt resolves the fastest level-shift
/// oscillation, t_max spans ten relaxation times.
double default_dt(const SystemParams& params);
double default_t_max(const SystemParams& params);

}  // namespace sge

#endif
