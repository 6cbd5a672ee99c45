// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sge/complex_matrix.hpp"
#include "sge/dynamics.hpp"
#include "sge/generator.hpp"
#include "sge/negativity.hpp"
#include "sge/params.hpp"
#include "sge/steady_state.hpp"
#include "sge/sweep.hpp"

using namespace sge;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool pass, const std::string& note) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id,
              label.c_str(), note.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double max_flat_diff(const ReducedState& a, const ReducedState& b) {
  const auto fa = a.to_flat(), fb = b.to_flat();
  double m = 0.0;
  for (int i = 0; i < 13; ++i) m = std::max(m, std::abs(fa[i] - fb[i]));
  return m;
}

double analytic_gap(const SystemParams& p, const Trajectory& traj) {
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i)
    worst = std::max(worst, max_flat_diff(traj.states[i],
                                          analytic_pumpless(p, traj.times[i])));
  return worst;
}

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const std::vector<std::string> presets = preset_keys();
  std::map<std::string, Trajectory> short_runs;  // t = 5, criterion 1/2/4/9/10
  std::map<std::string, Trajectory> long_runs;   // t = 10 x relaxation, criterion 3/9
  std::map<std::string, double> gap_dt;          // criterion-1 error per preset

  // --- criterion 1: closed-form vs integrated dynamics, t in [0, 5]
  {
    double worst = 0.0, worst_time = 0.0;
    for (const auto& key : presets) {
      const SystemParams p = params_from_preset(key, 1.2);
      const auto t0 = std::chrono::steady_clock::now();
      Trajectory traj = integrate_system(p, ReducedState::initial_emu(), 5.0, 1e-3);
      worst_time = std::max(worst_time, elapsed_s(t0));
      const double gap = analytic_gap(p, traj);
      gap_dt[key] = gap;
      worst = std::max(worst, gap);
      short_runs[key] = std::move(traj);
    }
    report(1, "analytic vs numeric dynamics within 1e-6",
           worst < 1e-6 && worst_time < 1.0,
           "max gap " + fmt(worst) + ", slowest preset " + fmt(worst_time) + " s");
  }

  // --- criterion 2: bare exponential decay of the doubly excited state
  {
    double worst = 0.0;
    for (const auto& key : presets) {
      const SystemParams p = params_from_preset(key, 1.2);
      const double rate = 2.0 * (p.gamma1 + p.gamma2());
      const Trajectory& traj = short_runs[key];
      for (std::size_t i = 0; i < traj.size(); ++i)
        worst = std::max(worst, std::abs(traj.states[i].pop[1] -
                                         std::exp(-rate * traj.times[i])));
    }
    report(2, "rho22 follows exp(-2(g1+g2)t) within 1e-8", worst < 1e-8,
           "max gap " + fmt(worst));
  }

  // --- criterion 3: transient entanglement shape
  {
    bool pass = true;
    std::string note;
    std::map<std::string, double> survival;
    for (const auto& key : presets) {
      const SystemParams p = params_from_preset(key, 1.2);
      const double t_end = 10.0 * relaxation_time(p);
      Trajectory traj = integrate_system(p, ReducedState::initial_emu(), t_end, 1e-3);
      if (traj.negativities.front() != 0.0) pass = false;
      double peak = 0.0, last_above = 0.0;
      for (std::size_t i = 0; i < traj.size(); ++i) {
        peak = std::max(peak, traj.negativities[i]);
        if (traj.negativities[i] > 1e-3) last_above = traj.times[i];
      }
      survival[key] = last_above;
      if ((key == "R0.83" || key == "R1.18") && peak <= 1e-3) pass = false;
      if (traj.negativities.back() >= 1e-4) pass = false;
      note += key + " peak " + fmt(peak) + "; ";
      long_runs[key] = std::move(traj);
    }
    if (!(survival["R0.83"] > survival["R2.78"])) pass = false;
    note += "survival R0.83 " + fmt(survival["R0.83"]) + " vs R2.78 " +
            fmt(survival["R2.78"]);
    report(3, "transient entanglement rises, peaks and dies out", pass, note);
  }

  // --- criterion 4: closed-form spectrum vs dense eigensolver, 200 points
  {
    double worst = 0.0, worst_other = 0.0;
    for (const auto& key : presets) {
      const Trajectory& traj = short_runs[key];
      const std::size_t stride = std::max<std::size_t>(1, traj.size() / 50);
      std::size_t used = 0;
      for (std::size_t i = 0; i < traj.size() && used < 50; i += stride, ++used) {
        auto closed = pt_eigenvalues_pumpless(traj.states[i]);
        for (int k = 0; k < 8; ++k) worst_other = std::max(worst_other, -closed[k]);
        auto generic = hermitian_eigenvalues(
            partial_transpose_A(traj.states[i].to_density_matrix()));
        std::sort(closed.begin(), closed.end());
        for (int k = 0; k < 9; ++k)
          worst = std::max(worst, std::abs(closed[k] - generic[k]));
      }
    }
    report(4, "exact transpose spectrum matches the eigensolver within 1e-10",
           worst < 1e-10 && worst_other <= 1e-12,
           "max spectral gap " + fmt(worst) + "; only the pair branch goes negative");
  }

  // --- criterion 5: maximally entangled calibration state
  {
    const double a = 1.0 / std::sqrt(3.0);
    ComplexMatrix rho(9);
    const int idx[3] = {0, 4, 8};  // ee, mumu, gg
    for (int i : idx)
      for (int j : idx) rho(i, j) = a * a;
    const double n = negativity_generic(rho).value;
    report(5, "negativity of the triplet superposition equals 1", std::abs(n - 1.0) < 1e-12,
           "N = " + fmt(n));
  }

  // --- criterion 6: steady-state cross-route agreement, 100 random points
  {
    std::mt19937 rng(977);
    std::uniform_real_distribution<double> gam(0.0, 0.96), lam(1e-3, 2.0), rr(0.5, 2.0);
    double worst = 0.0, worst_res = 0.0;
    for (int k = 0; k < 100; ++k) {
      const SystemParams p(1.0, rr(rng), gam(rng), 0.9, lam(rng), lam(rng));
      const SteadyState sa = steady_analytic(p);
      const SteadyState sn = steady_numeric(p);
      worst = std::max(worst, max_flat_diff(sa.state, sn.state));
      worst_res = std::max(worst_res, sa.residual);
    }
    report(6, "analytic and null-space steady states agree within 1e-8",
           worst < 1e-8 && worst_res < 1e-9,
           "max gap " + fmt(worst) + ", max residual " + fmt(worst_res));
  }

  // --- criterion 7: steady state independent of the level shift
  {
    double worst = 0.0;
    ReducedState ref;
    bool first = true;
    for (double g : {-0.24, 0.9, 2.4, 8.0}) {
      const SystemParams p(1.0, 1.2, 0.9, g, 0.08, 0.08);
      const ReducedState st = steady_numeric(p).state;
      if (first) {
        ref = st;
        first = false;
      } else {
        worst = std::max(worst, max_flat_diff(ref, st));
      }
    }
    report(7, "steady state independent of G within 1e-9", worst < 1e-9,
           "max gap " + fmt(worst));
  }

  // --- criterion 8: steady negativity vs pump rate
  {
    bool pass = true;
    std::string note;

    const SystemParams base(1.0, 1.2, 0.96, 2.4);
    const double n_zero =
        negativity_of_state(steady_analytic(base).state).value;
    const SystemParams tiny(1.0, 1.2, 0.96, 2.4, 1e-6, 1e-6);
    const double n_tiny = negativity_of_state(steady_analytic(tiny).state).value;
    if (n_zero != 0.0 || n_tiny > 1e-8) pass = false;

    std::vector<double> grid;
    for (int i = 1; i <= 100; ++i) grid.push_back(0.005 * i);
    const auto t0 = std::chrono::steady_clock::now();
    const SweepTable sweep = sweep_pump(base, grid);
    const double sweep_seconds = elapsed_s(t0);
    if (sweep_seconds >= 5.0) pass = false;

    double best = -1.0, best_arg = 0.0;
    for (const auto& r : sweep.rows)
      if (r.negativity > best) {
        best = r.negativity;
        best_arg = r.key;
      }
    if (!(best_arg >= 0.04 && best_arg <= 0.16)) pass = false;
    note += "argmax " + fmt(best_arg) + ", peak " + fmt(best);

    double prev_peak = -1.0;
    for (double gx : {0.8, 0.9, 0.96}) {
      double pk = 0.0;
      for (double lam : grid)
        pk = std::max(pk, negativity_of_state(
                              steady_analytic(SystemParams(1.0, 1.2, gx, 2.4, lam, lam))
                                  .state)
                              .value);
      if (pk <= prev_peak) pass = false;
      prev_peak = pk;
    }

    const SystemParams huge(1.0, 1.2, 0.96, 2.4, 50.0, 50.0);
    const double n_huge = negativity_of_state(steady_analytic(huge).state).value;
    if (n_huge >= 1e-4) pass = false;

    note += ", N(50) " + fmt(n_huge) + ", sweep " + fmt(sweep_seconds) + " s";
    report(8, "pump sweep reproduces the steady entanglement curve", pass, note);
  }

  // --- criterion 9: conservation across all recorded states
  {
    double drift = 0.0, most_negative = 0.0;
    for (const auto& runs : {&short_runs, &long_runs}) {
      for (const auto& [key, traj] : *runs) {
        for (const auto& s : traj.states) {
          drift = std::max(drift, std::abs(s.trace() - 1.0));
          const auto ev = hermitian_eigenvalues(s.to_density_matrix());
          most_negative = std::max(most_negative, -ev.front());
        }
      }
    }
    report(9, "trace drift below 1e-9 and spectrum above -1e-7",
           drift < 1e-9 && most_negative <= 1e-7,
           "drift " + fmt(drift) + ", lowest eigenvalue -" + fmt(most_negative));
  }

  // --- criterion 10: fourth-order convergence under step halving.
  // The ratio is gated wherever the truncation error sits above the
  // double-precision accumulation floor (~1e-14 over 5000 steps); presets
  // whose error at the base step is already at that floor are re-measured
  // at an 8x coarser step pair where truncation dominates.
  {
    bool pass = true;
    bool any_measured = false;
    std::string note;
    auto gap_at = [](const SystemParams& p, double dt) {
      return analytic_gap(p, integrate_system(p, ReducedState::initial_emu(), 5.0, dt));
    };
    for (const auto& key : presets) {
      const SystemParams p = params_from_preset(key, 1.2);
      double e_base = gap_dt[key];
      double e_half = gap_at(p, 5e-4);
      std::string tag = key;
      if (e_base <= 1e-12) {
        e_base = gap_at(p, 8e-3);
        e_half = gap_at(p, 4e-3);
        tag += " (coarse)";
      }
      if (e_base > 1e-12) {
        any_measured = true;
        const double ratio = e_base / e_half;
        if (ratio < 8.0) pass = false;
        note += tag + " x" + fmt(ratio) + "; ";
      } else {
        note += tag + " at rounding floor; ";
      }
    }
    if (!any_measured) pass = false;
    report(10, "halving dt cuts the dynamics error by at least 8x", pass, note);
  }

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
