#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "sge/dynamics.hpp"
#include "sge/negativity.hpp"
#include "sge/steady_state.hpp"

using sge::ComplexMatrix;
using sge::ReducedState;
using sge::SystemParams;

namespace {

ComplexMatrix pure_state(const std::vector<std::pair<int, double>>& amplitudes) {
  std::vector<std::complex<double>> psi(9, 0.0);
  for (const auto& [idx, amp] : amplitudes) psi[idx] = amp;
  ComplexMatrix rho(9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  return rho;
}

// exchange of the two atoms: |i_A j_B> -> |j_A i_B>
ComplexMatrix swap_atoms(const ComplexMatrix& rho) {
  ComplexMatrix out(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          out(3 * i + j, 3 * k + l) = rho(3 * j + i, 3 * l + k);
  return out;
}

}  // namespace

TEST_CASE("product state carries no negativity") {
  const auto r = sge::negativity_generic(pure_state({{8, 1.0}}));
  CHECK(r.value == 0.0);
  CHECK(r.negative_eigenvalues.empty());
}

TEST_CASE("the three-fold superposition state saturates the measure at one") {
  const double a = 1.0 / std::sqrt(3.0);
  const auto r = sge::negativity_generic(pure_state({{0, a}, {4, a}, {8, a}}));
  CHECK(std::abs(r.value - 1.0) < 1e-12);
  CHECK(r.negative_eigenvalues.size() == 3);
}

TEST_CASE("the symmetric exchange pair has negativity one half") {
  const double a = 1.0 / std::sqrt(2.0);
  const auto r = sge::negativity_generic(pure_state({{2, a}, {6, a}}));
  CHECK(std::abs(r.value - 0.5) < 1e-12);
}

TEST_CASE("trace deviations are rejected") {
  ComplexMatrix rho(9);
  rho(8, 8) = 1.0 + 1e-6;
  CHECK_THROWS_AS(sge::negativity_generic(rho), std::invalid_argument);
}

TEST_CASE("diagonal states have zero negativity") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    std::array<double, 9> w{};
    double sum = 0.0;
    for (double& x : w) {
      x = u(rng);
      sum += x;
    }
    ComplexMatrix rho(9);
    for (int i = 0; i < 9; ++i) rho(i, i) = w[i] / sum;
    CHECK(sge::negativity_generic(rho).value == 0.0);
  }
}

TEST_CASE("closed-form spectrum: separable initial state") {
  const auto ev = sge::pt_eigenvalues_pumpless(ReducedState::initial_emu());
  CHECK(ev[2] == 1.0);  // the doubly excited population
  for (int k : {0, 1, 3, 4, 5, 6, 7, 8}) CHECK(ev[k] == 0.0);
}

TEST_CASE("closed-form spectrum: algebraic check of the coherence pair") {
  ReducedState s;
  s.pop[8] = 1.0;
  s.rho37 = 0.1;  // unnormalized probe; populations deliberately left at zero
  const auto ev = sge::pt_eigenvalues_pumpless(s);
  const double expected = 0.5 - 0.5 * std::sqrt(1.04);
  CHECK(ev[8] == doctest::Approx(expected).epsilon(1e-14));
  CHECK(ev[8] == doctest::Approx(-0.00990195135927845).epsilon(1e-12));
  // generic eigensolver on the assembled matrix agrees
  const auto gen = sge::hermitian_eigenvalues(
      sge::partial_transpose_A(s.to_density_matrix()));
  CHECK(std::abs(gen.front() - ev[8]) < 1e-10);
}

TEST_CASE("closed-form spectrum rejects states off the unpumped support") {
  ReducedState s = ReducedState::ground();
  s.pop[0] = 1e-6;
  CHECK_THROWS_AS(sge::pt_eigenvalues_pumpless(s), std::invalid_argument);
}

TEST_CASE("cubic spectrum: zero coherences give the bare populations") {
  ReducedState s;
  s.pop[0] = 0.2;
  s.pop[4] = 0.3;
  s.pop[8] = 0.5;
  const auto ev = sge::pt_eigenvalues_pumped(s);
  std::array<double, 3> roots = {ev[6], ev[7], ev[8]};
  std::sort(roots.begin(), roots.end());
  CHECK(roots[0] == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(roots[1] == doctest::Approx(0.3).epsilon(1e-13));
  CHECK(roots[2] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("cubic spectrum matches the dense eigensolver at the pumped steady state") {
  const SystemParams p(1.0, 1.2, 0.96, 2.4, 0.08, 0.08);
  const ReducedState st = sge::steady_analytic(p).state;
  auto cubic = sge::pt_eigenvalues_pumped(st);
  auto generic = sge::hermitian_eigenvalues(
      sge::partial_transpose_A(st.to_density_matrix()));
  std::sort(cubic.begin(), cubic.end());
  for (int k = 0; k < 9; ++k) CHECK(std::abs(cubic[k] - generic[k]) < 1e-10);
  CHECK(cubic.front() < 0.0);  // entangled steady state
}

TEST_CASE("pumped spectrum approaches zero negativity as the pump vanishes") {
  const SystemParams p(1.0, 1.2, 0.96, 2.4, 1e-6, 1e-6);
  const ReducedState st = sge::steady_analytic(p).state;
  const auto ev = sge::pt_eigenvalues_pumped(st);
  for (double v : ev) CHECK(v >= -1e-9);
  CHECK(sge::negativity_of_state(st).value < 1e-8);
}

TEST_CASE("all three routes agree along a trajectory") {
  const SystemParams p = sge::params_from_preset("R0.83", 1.2);
  const sge::Trajectory traj =
      sge::integrate_system(p, ReducedState::initial_emu(), 3.0, 1e-3);
  for (std::size_t i = 0; i < traj.size(); i += 100) {
    const ReducedState& s = traj.states[i];
    auto closed = sge::pt_eigenvalues_pumpless(s);
    auto cubic = sge::pt_eigenvalues_pumped(s);
    auto generic =
        sge::hermitian_eigenvalues(sge::partial_transpose_A(s.to_density_matrix()));

    // only the lowest closed-form branch may dip below zero
    for (int k = 0; k < 8; ++k) CHECK(closed[k] >= -1e-12);

    std::sort(closed.begin(), closed.end());
    std::sort(cubic.begin(), cubic.end());
    for (int k = 0; k < 9; ++k) {
      CHECK(std::abs(closed[k] - generic[k]) < 1e-10);
      CHECK(std::abs(cubic[k] - generic[k]) < 1e-10);
    }
    // the value accounting matches the eigenvalue list
    const auto res = sge::negativity_of_state(s);
    double neg_sum = 0.0;
    for (double v : res.negative_eigenvalues) neg_sum += v;
    CHECK(std::abs(res.value + neg_sum) < 1e-12);
  }
}

TEST_CASE("negativity is invariant under exchanging the atoms") {
  const SystemParams p(1.0, 1.0, 0.9, 2.4);  // r = 1: channel-symmetric rates
  const sge::Trajectory traj =
      sge::integrate_system(p, ReducedState::initial_emu(), 2.0, 1e-3);
  for (std::size_t i = 0; i < traj.size(); i += 250) {
    const ComplexMatrix rho = traj.states[i].to_density_matrix();
    const double direct = sge::negativity_generic(rho).value;
    const double swapped = sge::negativity_generic(swap_atoms(rho)).value;
    CHECK(std::abs(direct - swapped) < 1e-12);
  }
}
