#include "sge/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sge/negativity.hpp"

namespace sge {

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SystemParams with_pump(const SystemParams& base, double lambda) {
  return SystemParams(base.gamma1, base.r, base.Gamma1, base.G1, lambda, lambda);
}

SweepRow evaluate_point(const SystemParams& base, double lambda) {
  const SteadyState st = steady_analytic(with_pump(base, lambda));
  SweepRow row;
  row.key = lambda;
  row.negativity = negativity_of_state(st.state).value;
  row.rho99 = st.state.pop[8];
  row.rho37 = st.state.rho37;
  row.rho68 = st.state.rho68;
  return row;
}

double steady_negativity(const SystemParams& base, double lambda) {
  return negativity_of_state(steady_analytic(with_pump(base, lambda)).state).value;
}

void run_parallel(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& job) {
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  const unsigned w = std::min<std::size_t>(workers, n);
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (unsigned k = 0; k < w; ++k) {
    pool.emplace_back([&, k] {
      for (std::size_t i = k; i < n; i += w) job(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

unsigned sweep_worker_count() {
  if (const char* env = std::getenv("SGESIM_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

SweepTable sweep_pump(const SystemParams& params, const std::vector<double>& grid) {
  params.validate();
  if (grid.empty()) throw std::invalid_argument("sweep_pump: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0)
      throw std::invalid_argument("sweep_pump: grid values must be >= 0");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("sweep_pump: grid must be strictly increasing");
  }

  SweepTable table;
  table.key_name = "Lambda";
  table.params = params;
  table.timestamp = utc_timestamp();
  {
    std::ostringstream os;
    os << grid.front() << ".." << grid.back() << " (" << grid.size() << " points)";
    table.grid_spec = os.str();
  }

  table.rows.resize(grid.size());
  run_parallel(grid.size(), sweep_worker_count(),
               [&](std::size_t i) { table.rows[i] = evaluate_point(params, grid[i]); });

  // deterministic spot verification of the closed form against the
  // null-space route
  std::mt19937 rng(0x53474531u);
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  const std::size_t checks = std::min<std::size_t>(5, grid.size());
  for (std::size_t c = 0; c < checks; ++c) {
    const std::size_t i = pick(rng);
    const SystemParams pp = with_pump(params, grid[i]);
    const auto ana = steady_analytic(pp).state.to_flat();
    const auto num = steady_numeric(pp).state.to_flat();
    for (int k = 0; k < 13; ++k) {
      if (std::abs(ana[k] - num[k]) > 1e-8) {
        std::ostringstream os;
        os << "sweep_pump: analytic and numeric steady states disagree at Lambda="
           << grid[i] << " (component " << k << ": " << ana[k] << " vs " << num[k]
           << ")";
        throw std::runtime_error(os.str());
      }
    }
  }
  return table;
}

OptimalPump find_optimal_pump(const SystemParams& params, double lo, double hi) {
  params.validate();
  if (!(lo >= 0.0) || !(hi > lo))
    throw std::invalid_argument("find_optimal_pump: need 0 <= lo < hi");

  constexpr int kPreScan = 20;
  constexpr double kZero = 1e-12;

  std::array<double, kPreScan> xs{}, ns{};
  for (int i = 0; i < kPreScan; ++i) {
    xs[i] = lo + (hi - lo) * i / (kPreScan - 1);
    ns[i] = steady_negativity(params, xs[i]);
  }

  OptimalPump result;
  if (*std::max_element(ns.begin(), ns.end()) <= kZero) {
    result.entangled = false;
    return result;
  }
  result.entangled = true;

  // unimodal: nondecreasing up to the max, nonincreasing after
  const int imax =
      static_cast<int>(std::max_element(ns.begin(), ns.end()) - ns.begin());
  bool unimodal = true;
  for (int i = 1; i <= imax; ++i)
    if (ns[i] < ns[i - 1] - 1e-14) unimodal = false;
  for (int i = imax + 1; i < kPreScan; ++i)
    if (ns[i] > ns[i - 1] + 1e-14) unimodal = false;

  if (!unimodal) {
    // fine grid fallback
    const int n = 1000;
    double best_x = lo, best_n = -1.0;
    for (int i = 0; i <= n; ++i) {
      const double x = lo + (hi - lo) * i / n;
      const double v = steady_negativity(params, x);
      if (v > best_n) {
        best_n = v;
        best_x = x;
      }
    }
    result.lambda_star = best_x;
    result.negativity_star = best_n;
    return result;
  }

  // golden-section around the pre-scan maximum
  double a = xs[std::max(imax - 1, 0)];
  double b = xs[std::min(imax + 1, kPreScan - 1)];
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  const double tol = 1e-4 * params.gamma1;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = steady_negativity(params, x1), f2 = steady_negativity(params, x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = steady_negativity(params, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = steady_negativity(params, x1);
    }
  }
  result.lambda_star = 0.5 * (a + b);
  result.negativity_star = steady_negativity(params, result.lambda_star);
  return result;
}

SweepTable sweep_distance(const std::vector<std::string>& preset_keys, double lambda,
                          double r, double gamma1) {
  if (preset_keys.empty())
    throw std::invalid_argument("sweep_distance: no presets given");
  if (lambda < 0.0)
    throw std::invalid_argument("sweep_distance: Lambda must be >= 0");

  SweepTable table;
  table.key_name = "R";
  table.timestamp = utc_timestamp();
  table.grid_spec = "presets";
  table.params = SystemParams(gamma1, r, 0.0, 0.0, lambda, lambda);

  for (const auto& key : preset_keys) {
    const Preset pre = preset(key);  // throws on unknown key
    const SystemParams p(gamma1, r, pre.Gamma1 * gamma1, pre.G1 * gamma1, lambda, lambda);
    const SteadyState st = steady_analytic(p);
    SweepRow row;
    row.key = pre.R;
    row.negativity = negativity_of_state(st.state).value;
    row.rho99 = st.state.pop[8];
    row.rho37 = st.state.rho37;
    row.rho68 = st.state.rho68;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace sge
