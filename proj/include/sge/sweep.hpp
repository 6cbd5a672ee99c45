#ifndef SGE_SWEEP_HPP
#define SGE_SWEEP_HPP

#include <complex>
#include <string>
#include <vector>

#include "sge/params.hpp"
#include "sge/steady_state.hpp"

namespace sge {

struct SweepRow {
  double key = 0.0;  // pump rate Lambda, or R for distance sweeps
  double negativity = 0.0;
  double rho99 = 0.0;
  std::complex<double> rho37{0.0, 0.0};
  std::complex<double> rho68{0.0, 0.0};
};

/// Tabulated sweep result. Rows are ordered by the sweep key; metadata
/// pins the parameter snapshot and grid so a run can be reproduced.
struct SweepTable {
  std::string key_name = "Lambda";
  std::vector<SweepRow> rows;
  SystemParams params;
  std::string grid_spec;
  std::string timestamp;  // ISO-8601, UTC
};

/// Steady-state negativity over a pump grid with Lambda1 = Lambda2 = the
/// grid value. Uses the analytic steady state; five deterministic spot
/// points per sweep are cross-checked against the numeric route (failure
/// is an internal-consistency error). Grid must be nonnegative and
/// strictly increasing. Rows are computed in parallel when a worker count
/// above one is configured (SGESIM_WORKERS).
SweepTable sweep_pump(const SystemParams& params, const std::vector<double>& lambda_grid);

struct OptimalPump {
  double lambda_star = 0.0;
  double negativity_star = 0.0;
  bool entangled = false;  // false: no entanglement anywhere in the bracket
};

/// Maximizer of steady negativity over [lo, hi]. A 20-point pre-scan
/// checks unimodality; golden-section search then narrows to
/// 1e-4*gamma1, falling back to a fine grid scan when the pre-scan is not
/// unimodal. All-zero negativity in the bracket yields entangled = false.
OptimalPump find_optimal_pump(const SystemParams& params, double lo, double hi);

/// Steady negativity per distance preset at fixed pump rate; table keyed
/// by R. Unknown preset keys are rejected listing the valid ones.
SweepTable sweep_distance(const std::vector<std::string>& preset_keys, double lambda,
                          double r, double gamma1 = 1.0);

/// Worker count for parallel sweep evaluation: the SGESIM_WORKERS
/// environment variable when set (clamped to >= 1), otherwise the
/// hardware concurrency.
unsigned sweep_worker_count();

}  // namespace sge

#endif
